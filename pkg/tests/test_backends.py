import random

import pytest

from gamearg import _pure

core = pytest.importorskip("gamearg._core")


def csr(n, edges):
    succ_ptr = [0] * (n + 1)
    pred_ptr = [0] * (n + 1)
    for u, v in edges:
        succ_ptr[u + 1] += 1
        pred_ptr[v + 1] += 1
    for i in range(n):
        succ_ptr[i + 1] += succ_ptr[i]
        pred_ptr[i + 1] += pred_ptr[i]
    pred_idx = [0] * len(edges)
    fill = pred_ptr[:-1]
    for u, v in sorted(edges):
        pred_idx[fill[v]] = u
        fill[v] += 1
    return succ_ptr, pred_ptr, pred_idx


@pytest.mark.parametrize("seed", range(5))
def test_solve_kernels_agree(seed):
    rng = random.Random(seed)
    for _ in range(50):
        n = rng.randint(0, 40)
        edges = sorted({(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 3 * n))}) if n else []
        args = (n, *csr(n, edges))
        assert core.solve_csr(*args) == _pure.solve_csr(*args)


@pytest.mark.parametrize("seed", range(3))
def test_kernel_kernels_agree(seed):
    rng = random.Random(seed)
    for _ in range(30):
        n = rng.randint(0, 11)
        masks = [sum(1 << j for j in range(n) if rng.random() < 0.3) for _ in range(n)]
        assert core.kernel_masks(n, masks) == _pure.kernel_masks(n, masks)


def test_core_rejects_wide_masks():
    with pytest.raises(ValueError):
        core.kernel_masks(63, [0] * 63)


def test_benchmark_script_runs():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).parent.parent / "benchmarks" / "bench_backends.py"
    proc = subprocess.run(
        [sys.executable, str(script), "--nodes", "500", "--kernel-n", "8"],
        capture_output=True, text=True, check=True,
    )
    assert "speedup" in proc.stdout

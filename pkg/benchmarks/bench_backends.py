"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_backends.py [--nodes 200000] [--degree 3] [--kernel-n 18]
"""

import argparse
import random
import time

from gamearg import _pure

try:
    from gamearg import _core
except ImportError:
    _core = None


def random_csr(n, degree, seed):
    rng = random.Random(seed)
    edges = sorted({(rng.randrange(n), rng.randrange(n)) for _ in range(n * degree)})
    # a few sinks so the retrograde pass has work to do
    edges = [(u, v) for u, v in edges if u % 17]
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
    for u, v in edges:
        pred_idx[fill[v]] = u
        fill[v] += 1
    return (n, succ_ptr, pred_ptr, pred_idx), len(edges)


def random_masks(n, p, seed):
    rng = random.Random(seed)
    return [sum(1 << j for j in range(n) if rng.random() < p) for _ in range(n)]


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=200_000)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--kernel-n", type=int, default=18)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = [("pure", _pure)] + ([("compiled", _core)] if _core else [])
    csr, m = random_csr(args.nodes, args.degree, args.seed)
    masks = random_masks(args.kernel_n, 0.3, args.seed)

    print(f"solve_csr: {args.nodes} nodes, {m} edges")
    results = {}
    for name, impl in backends:
        t, res = timed(impl.solve_csr, *csr)
        results[name] = (t, res)
        print(f"  {name:9s} {t * 1e3:9.1f} ms")
    if len(results) == 2:
        assert results["pure"][1] == results["compiled"][1]
        print(f"  speedup   {results['pure'][0] / results['compiled'][0]:9.1f}x")

    print(f"kernel_masks: n={args.kernel_n} ({1 << args.kernel_n} subsets)")
    results = {}
    for name, impl in backends:
        t, res = timed(impl.kernel_masks, args.kernel_n, masks, repeat=1)
        results[name] = (t, res)
        print(f"  {name:9s} {t * 1e3:9.1f} ms  ({len(res)} kernels)")
    if len(results) == 2:
        assert results["pure"][1] == results["compiled"][1]
        print(f"  speedup   {results['pure'][0] / results['compiled'][0]:9.1f}x")


if __name__ == "__main__":
    main()

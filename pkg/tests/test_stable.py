import random

import pytest

from gamearg import (
    ArgumentationFramework,
    GameGraph,
    SizeLimitError,
    StableSolution,
    af_to_game,
    enumerate_kernels,
    parse_apx,
    parse_edge_list,
    solve,
    stable_extensions,
    stable_models,
    wfs_stable_report,
)
from gamearg.stable import InputMismatchError, is_kernel

from oracles import random_af, random_games, subset_kernels


def members(kernels):
    return [k.members for k in kernels]


def test_kernel_examples(backend):
    assert members(enumerate_kernels(parse_edge_list("x"))) == [{"x"}]
    assert enumerate_kernels(parse_edge_list("p p")) == []
    assert members(enumerate_kernels(parse_edge_list("x y\ny x"))) == [{"x"}, {"y"}]
    assert members(enumerate_kernels(parse_edge_list("x y\ny z"))) == [{"x", "z"}]
    assert subset_kernels(parse_edge_list("x y\ny z")) == [{"x", "z"}]


def test_empty_graph_has_empty_kernel(backend):
    assert members(enumerate_kernels(GameGraph())) == [frozenset()]


def test_size_limit(backend):
    g = GameGraph.from_edges([], nodes=[f"v{i}" for i in range(5)])
    with pytest.raises(SizeLimitError, match="max_n=4"):
        enumerate_kernels(g, max_n=4)
    with pytest.raises(SizeLimitError):
        stable_extensions(ArgumentationFramework(g.nodes, g.edges), max_n=4)


def test_stable_model_examples():
    (m,) = stable_models(parse_edge_list("x y\ny z"))
    assert m == StableSolution(frozenset({"y"}), frozenset({"x", "z"}))
    assert stable_models(parse_edge_list("p p")) == []
    assert [m.won for m in stable_models(parse_edge_list("x y\ny x"))] == [{"y"}, {"x"}]


def test_stable_extension_examples():
    assert stable_extensions(parse_apx("arg(a). arg(b).")) == [{"a", "b"}]
    assert stable_extensions(parse_apx("arg(p). att(p,p).")) == []
    assert stable_extensions(parse_apx("arg(a). arg(b). att(a,b). att(b,a).")) == [{"a"}, {"b"}]


def test_reports():
    g = parse_edge_list("x y\ny x")
    r = wfs_stable_report(solve(g), stable_models(g))
    assert r.consistent and r.n_models == 2
    g = parse_edge_list("x y\ny z")
    r = wfs_stable_report(solve(g), stable_models(g))
    assert r.consistent and r.coincides
    assert "coincides with well-founded solution" in r.notes
    g = parse_edge_list("p p")
    r = wfs_stable_report(solve(g), stable_models(g))
    assert r.consistent and "no stable model" in r.notes


def test_report_flags_violation():
    g = parse_edge_list("x y\ny z")
    wrong = StableSolution(frozenset({"x"}), frozenset({"y", "z"}))
    r = wfs_stable_report(solve(g), [wrong])
    assert not r.consistent and r.violations


def test_report_input_mismatch():
    g = parse_edge_list("x y")
    with pytest.raises(InputMismatchError):
        wfs_stable_report(solve(g), stable_models(parse_edge_list("p q")))


def test_fig1_models_extend_wfs(fig1_game):
    models = stable_models(fig1_game)
    assert models
    for m in models:
        assert set("bfh") <= m.lost and set("ade") <= m.won
    assert wfs_stable_report(solve(fig1_game), models).consistent


@pytest.mark.parametrize("seed", range(2))
def test_kernels_match_subset_oracle(seed, backend):
    for g in random_games(200 + seed, 40, n_max=9, p=0.3):
        found = members(enumerate_kernels(g))
        assert found == subset_kernels(g)
        assert all(is_kernel(g, k) for k in found)


def test_extensions_commute_with_translation():
    rng = random.Random(7)
    for _ in range(40):
        af = random_af(rng)
        assert stable_extensions(af) == members(enumerate_kernels(af_to_game(af)))
        for s in stable_extensions(af):
            assert not any(a in s and b in s for a, b in af.attacks)
            assert all(any((a, x) in af.attacks for a in s) for x in af.arguments - s)

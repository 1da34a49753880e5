import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from gamearg import (
    ArgLabel,
    ArgumentationFramework,
    GameGraph,
    Status,
    UnknownNodeError,
    af_to_game,
    characteristic_function,
    game_to_af,
    grounded_extension_lfp,
    grounded_labeling,
    parse_apx,
    solve,
)

from checks import check_labeling
from oracles import random_af, random_game

IN, OUT, UNDEC = ArgLabel.IN, ArgLabel.OUT, ArgLabel.UNDEC
CHAIN = parse_apx("arg(a). arg(b). arg(c). att(c,b). att(b,a).")


def defended(af, s, x):
    """Brute-force: every attacker of x is attacked by some member of s."""
    return all(any((z, y) in af.attacks for z in s) for y in af.arguments if (y, x) in af.attacks)


def test_af_to_game_reverses():
    af = ArgumentationFramework(frozenset("ab"), frozenset({("a", "b")}))
    g = af_to_game(af)
    assert g.nodes == {"a", "b"} and g.edges == {("b", "a")}
    assert af_to_game(ArgumentationFramework()) == GameGraph()


def test_game_to_af_reverses():
    g = GameGraph.from_edges([("x", "y")])
    assert game_to_af(g).attacks == {("y", "x")}
    assert game_to_af(GameGraph()) == ArgumentationFramework()


@given(st.integers(0, 10**6))
def test_translation_involution(seed):
    rng = random.Random(seed)
    g = random_game(rng)
    af = random_af(rng)
    assert af_to_game(game_to_af(g)) == g
    assert game_to_af(af_to_game(af)) == af


def test_fig1_labels(fig1_game):
    gl = grounded_labeling(game_to_af(fig1_game))
    assert all(gl.label[x] is IN for x in "bfh")
    assert all(gl.label[x] is OUT for x in "ade")
    assert gl.label["c"] is IN


def test_self_attack_undec():
    gl = grounded_labeling(parse_apx("arg(p). att(p,p)."))
    assert gl.label["p"] is UNDEC and gl.min_max["p"] == math.inf


def test_empty_labeling():
    gl = grounded_labeling(ArgumentationFramework())
    assert dict(gl.label) == {} and dict(gl.min_max) == {}


def test_chain_min_max():
    gl = grounded_labeling(CHAIN)
    assert [(gl.label[x], gl.min_max[x]) for x in "cba"] == [(IN, 1), (OUT, 2), (IN, 3)]


def test_characteristic_function_examples():
    assert characteristic_function(CHAIN, set()) == {"c"}
    assert characteristic_function(CHAIN, {"c"}) == {"c", "a"}
    assert all(defended(CHAIN, {"c"}, x) == (x in {"a", "c"}) for x in "abc")
    assert characteristic_function(CHAIN, CHAIN.arguments) >= characteristic_function(CHAIN, set())
    with pytest.raises(UnknownNodeError):
        characteristic_function(CHAIN, {"zz"})


def test_lfp_examples():
    assert grounded_extension_lfp(ArgumentationFramework()) == frozenset()
    assert grounded_extension_lfp(CHAIN) == {"a", "c"}
    assert grounded_extension_lfp(parse_apx("arg(p). att(p,p).")) == frozenset()


@pytest.mark.parametrize("seed", range(3))
def test_characteristic_function_brute_force_and_monotone(seed):
    rng = random.Random(seed)
    for _ in range(30):
        af = random_af(rng, n_max=6)
        args = sorted(af.arguments)
        subsets = [frozenset(c) for r in range(len(args) + 1) for c in itertools.combinations(args, r)]
        image = {s: characteristic_function(af, s) for s in subsets}
        for s in subsets:
            assert image[s] == {x for x in args if defended(af, s, x)}
            for t in subsets:
                if s <= t:
                    assert image[s] <= image[t]


@pytest.mark.parametrize("seed", range(3))
def test_lfp_oracle_and_isomorphism(seed):
    rng = random.Random(seed)
    to_label = {Status.WON: OUT, Status.LOST: IN, Status.DRAWN: UNDEC}
    for _ in range(50):
        af = random_af(rng)
        gl = grounded_labeling(af)
        lfp = grounded_extension_lfp(af)
        assert lfp == gl.in_set
        assert gl.out_set == {b for a in lfp for b in af.attacked_by(a)}
        assert gl.undec_set == af.arguments - gl.in_set - gl.out_set
        check_labeling(gl)
        g = random_game(rng)
        s = solve(g)
        gl2 = grounded_labeling(game_to_af(g))
        assert {x: to_label[t] for x, t in s.status.items()} == dict(gl2.label)

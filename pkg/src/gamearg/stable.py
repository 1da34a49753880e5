"""Brute-force kernels, stable models and stable extensions.

A kernel is a node set with no edge inside it that every outside node has
an edge into. Kernels are exactly the lost sets of the two-valued (stable)
models of the win rule, and the stable extensions of the attack graph
obtained by reversing the moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _backend
from .af import af_to_game
from .graph import ArgumentationFramework, GameGraph
from .solver import SolvedGame

DEFAULT_MAX_N = 20


class SizeLimitError(ValueError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"graph has {n} nodes, brute-force limit max_n={limit}")


class InputMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Kernel:
    members: frozenset

    def sorted(self):
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class StableSolution:
    won: frozenset
    lost: frozenset


def _masks(g: GameGraph, max_n):
    names = g.sorted_nodes
    if len(names) > max_n:
        raise SizeLimitError(len(names), max_n)
    index = {n: i for i, n in enumerate(names)}
    out = [0] * len(names)
    for u, v in g.edges:
        out[index[u]] |= 1 << index[v]
    found = _backend.kernel_masks(len(names), out)
    sets = [frozenset(names[i] for i in range(len(names)) if (m >> i) & 1) for m in found]
    return sorted(sets, key=lambda s: sorted(s))


def is_kernel(g: GameGraph, members) -> bool:
    members = set(members)
    for u, v in g.edges:
        if u in members and v in members:
            return False
    return all(
        any(v in members for v in g.successors(x))
        for x in g.nodes - members
    )


def enumerate_kernels(g: GameGraph, max_n: int = DEFAULT_MAX_N) -> list[Kernel]:
    return [Kernel(s) for s in _masks(g, max_n)]


def satisfies_win_rule(g: GameGraph, won, lost) -> bool:
    """Two-valued check: x is won iff some move reaches a lost position."""
    if won & lost or (won | lost) != g.nodes:
        return False
    return all(
        (x in won) == any(y in lost for y in g.successors(x)) for x in g.nodes
    )


def stable_models(g: GameGraph, max_n: int = DEFAULT_MAX_N) -> list[StableSolution]:
    models = []
    for k in enumerate_kernels(g, max_n):
        won = g.nodes - k.members
        if not satisfies_win_rule(g, won, k.members):
            raise AssertionError(f"kernel {k.sorted()} fails the win rule")
        models.append(StableSolution(frozenset(won), k.members))
    return models


def stable_extensions(af: ArgumentationFramework, max_n: int = DEFAULT_MAX_N) -> list[frozenset]:
    """Conflict-free sets attacking every argument outside themselves."""
    return _masks(af_to_game(af), max_n)


@dataclass
class StableReport:
    n_models: int
    consistent: bool = True
    coincides: bool = False
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {
            "coincides": self.coincides,
            "consistent": self.consistent,
            "models": self.n_models,
            "notes": list(self.notes),
            "violations": list(self.violations),
        }


def wfs_stable_report(s: SolvedGame, models: list[StableSolution]) -> StableReport:
    """Check that every stable model extends the well-founded solution.

    A violation here means a bug in the solver or the enumerator.
    """
    nodes = s.graph.nodes
    for m in models:
        if (m.won | m.lost) != nodes:
            raise InputMismatchError("stable model does not cover the solved game's nodes")
    won, lost, drawn = s.won, s.lost, s.drawn
    report = StableReport(n_models=len(models))
    for i, m in enumerate(models):
        if not won <= m.won:
            report.violations.append(
                f"model {i}: well-founded won {sorted(won - m.won)} not won")
        if not lost <= m.lost:
            report.violations.append(
                f"model {i}: well-founded lost {sorted(lost - m.lost)} not lost")
    if not drawn:
        if len(models) != 1:
            report.violations.append(
                f"no drawn positions but {len(models)} stable models")
        elif models[0].won == won and models[0].lost == lost:
            report.coincides = True
            report.notes.append("coincides with well-founded solution")
        else:
            report.violations.append("unique stable model differs from well-founded solution")
    if not models:
        report.notes.append("no stable model")
    report.consistent = not report.violations
    return report


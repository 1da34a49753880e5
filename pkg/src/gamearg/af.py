"""Argumentation frameworks as games, and their grounded labelings.

An attack ``y -> x`` is the move ``x -> y`` read backwards: an argument is
defeated exactly when the matching game position is won. Under this
reading won/lost/drawn becomes out/in/undec.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType

from .graph import ArgumentationFramework, GameGraph
from .solver import INF, SolvedGame, Status, solve


class ArgLabel(str, enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"


STATUS_TO_LABEL = {
    Status.WON: ArgLabel.OUT,
    Status.LOST: ArgLabel.IN,
    Status.DRAWN: ArgLabel.UNDEC,
}
LABEL_TO_STATUS = {v: k for k, v in STATUS_TO_LABEL.items()}


@dataclass(frozen=True, eq=False)
class GroundedLabeling:
    af: ArgumentationFramework
    label: MappingProxyType
    min_max: MappingProxyType
    game: SolvedGame

    def with_label(self, label: ArgLabel) -> frozenset:
        return frozenset(a for a, lab in self.label.items() if lab is label)

    @property
    def in_set(self):
        return self.with_label(ArgLabel.IN)

    @property
    def out_set(self):
        return self.with_label(ArgLabel.OUT)

    @property
    def undec_set(self):
        return self.with_label(ArgLabel.UNDEC)


def af_to_game(af: ArgumentationFramework) -> GameGraph:
    return GameGraph(af.nodes, frozenset((x, y) for y, x in af.edges))


def game_to_af(g: GameGraph) -> ArgumentationFramework:
    return ArgumentationFramework(g.nodes, frozenset((y, x) for x, y in g.edges))


def grounded_labeling(af: ArgumentationFramework) -> GroundedLabeling:
    """Solve the reversed attack graph as a game and relabel the result.

    The min-max number of a decided argument is its game length plus one,
    so unattacked arguments are numbered 1.
    """
    solved = solve(af_to_game(af))
    label = {a: STATUS_TO_LABEL[s] for a, s in solved.status.items()}
    min_max = {a: (INF if ln == INF else ln + 1) for a, ln in solved.node_length.items()}
    return GroundedLabeling(af, MappingProxyType(label), MappingProxyType(min_max), solved)


def characteristic_function(af: ArgumentationFramework, s) -> frozenset:
    """Arguments all of whose attackers are attacked by some member of ``s``."""
    s = frozenset(s)
    for a in s:
        af.require(a)
    defeated_by_s = {b for a in s for b in af.attacked_by(a)}
    return frozenset(
        x for x in af.nodes if all(y in defeated_by_s for y in af.attackers(x))
    )


def grounded_extension_lfp(af: ArgumentationFramework) -> frozenset:
    current = frozenset()
    while True:
        nxt = characteristic_function(af, current)
        if nxt == current:
            return current
        current = nxt

"""Well-founded solution of win-move games.

A position is won if some move leads to a lost position, and lost if every
move leads to a won position (so positions without moves are lost). Both
rules are applied in stages until nothing changes; whatever is left is
drawn. The length of a position is the stage at which its status became
known::

    length(lost x) = 1 + max(length(y) for y in succ(x))      # sinks: 0
    length(won x)  = 1 + min(length(y) for lost y in succ(x))
    length(drawn)  = inf
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from types import MappingProxyType

from . import _backend
from .graph import Edge, GameGraph

INF = math.inf


class Status(str, enum.Enum):
    WON = "won"
    LOST = "lost"
    DRAWN = "drawn"


class EdgeType(str, enum.Enum):
    WINNING = "winning"
    DELAYING = "delaying"
    DRAWING = "drawing"
    BAD = "bad"


class SolverInvariantError(AssertionError):
    """A solved game contains a status pair that the rules cannot produce."""


_EDGE_TABLE = {
    (Status.WON, Status.LOST): EdgeType.WINNING,
    (Status.LOST, Status.WON): EdgeType.DELAYING,
    (Status.DRAWN, Status.DRAWN): EdgeType.DRAWING,
    (Status.WON, Status.WON): EdgeType.BAD,
    (Status.WON, Status.DRAWN): EdgeType.BAD,
    (Status.DRAWN, Status.WON): EdgeType.BAD,
}

_GOOD_TYPE = {
    Status.WON: EdgeType.WINNING,
    Status.LOST: EdgeType.DELAYING,
    Status.DRAWN: EdgeType.DRAWING,
}


@dataclass(frozen=True, eq=False)
class SolvedGame:
    graph: GameGraph
    status: MappingProxyType
    node_length: MappingProxyType
    edge_type: MappingProxyType
    edge_length: MappingProxyType
    stages: int

    def __eq__(self, other):
        if not isinstance(other, SolvedGame):
            return NotImplemented
        return (
            self.graph == other.graph
            and dict(self.status) == dict(other.status)
            and dict(self.node_length) == dict(other.node_length)
            and dict(self.edge_type) == dict(other.edge_type)
            and dict(self.edge_length) == dict(other.edge_length)
            and self.stages == other.stages
        )

    __hash__ = None

    def nodes_with(self, status: Status) -> frozenset:
        return frozenset(n for n, s in self.status.items() if s is status)

    @property
    def won(self):
        return self.nodes_with(Status.WON)

    @property
    def lost(self):
        return self.nodes_with(Status.LOST)

    @property
    def drawn(self):
        return self.nodes_with(Status.DRAWN)


def _label_nodes(graph: GameGraph):
    names = graph.sorted_nodes
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    succ_ptr = [0] * (n + 1)
    for u, _ in graph.edges:
        succ_ptr[index[u] + 1] += 1
    pred_ptr = [0] * (n + 1)
    for _, v in graph.edges:
        pred_ptr[index[v] + 1] += 1
    for i in range(n):
        succ_ptr[i + 1] += succ_ptr[i]
        pred_ptr[i + 1] += pred_ptr[i]
    pred_idx = [0] * len(graph.edges)
    fill = pred_ptr[:-1]
    for u, v in graph.sorted_edges:
        j = index[v]
        pred_idx[fill[j]] = index[u]
        fill[j] += 1
    codes, lengths = _backend.solve_csr(n, succ_ptr, pred_ptr, pred_idx)
    decode = {1: Status.WON, -1: Status.LOST, 0: Status.DRAWN}
    status = {}
    node_length = {}
    for name, code, ln in zip(names, codes, lengths):
        status[name] = decode[code]
        node_length[name] = INF if code == 0 else int(ln)
    return status, node_length


def edge_types_for(graph: GameGraph, status, node_length):
    """Type every edge from the endpoint statuses and attach edge lengths.

    Winning and delaying moves ``x -> y`` get length ``1 + length(y)``,
    drawing moves get ``inf``, bad moves get no length at all.
    """
    edge_type = {}
    edge_length = {}
    for e in graph.sorted_edges:
        x, y = e
        pair = (status[x], status[y])
        try:
            t = _EDGE_TABLE[pair]
        except KeyError:
            raise SolverInvariantError(
                f"edge {x}->{y} joins {pair[0].value} to {pair[1].value}"
            ) from None
        edge_type[e] = t
        if t is EdgeType.DRAWING:
            edge_length[e] = INF
        elif t is not EdgeType.BAD:
            edge_length[e] = 1 + node_length[y]
    return edge_type, edge_length


def classify_edges(s: SolvedGame):
    """Return ``(edge_type, edge_length)`` recomputed from ``s``'s node labels."""
    return edge_types_for(s.graph, s.status, s.node_length)


def solve(g: GameGraph) -> SolvedGame:
    status, node_length = _label_nodes(g)
    edge_type, edge_length = edge_types_for(g, status, node_length)
    finite = [ln for ln in node_length.values() if ln != INF]
    stages = max(finite) + 1 if finite else 0
    return SolvedGame(
        graph=g,
        status=MappingProxyType(status),
        node_length=MappingProxyType(node_length),
        edge_type=MappingProxyType(edge_type),
        edge_length=MappingProxyType(edge_length),
        stages=stages,
    )


def good_moves(s: SolvedGame, x: str) -> frozenset[Edge]:
    """Outgoing moves of ``x`` that keep its best achievable outcome."""
    want = _GOOD_TYPE[s.status[s.graph.require(x)]]
    return frozenset(e for e in s.graph.out_edges(x) if s.edge_type[e] is want)

"""Explanation subgraphs of solved games.

The status of a position is explained by the typed paths leaving it::

    won    x . winning . (delaying . winning)*
    lost   x . (delaying . winning)*
    drawn  x . drawing+

The subgraph keeps exactly the edges that lie on at least one path from
the root matching its pattern. It is found by reachability in the product
of the typed edge relation with a small automaton for the pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Union

from .af import GroundedLabeling
from .solver import EdgeType, SolvedGame, Status

W, R, Y = EdgeType.WINNING, EdgeType.DELAYING, EdgeType.DRAWING


@dataclass(frozen=True)
class Pattern:
    start: str
    accepting: frozenset
    delta: MappingProxyType  # (state, edge type) -> state


def _pattern(start, accepting, delta):
    return Pattern(start, frozenset(accepting), MappingProxyType(delta))


PATTERNS = {
    Status.WON: _pattern("need_win", {"need_delay"}, {
        ("need_win", W): "need_delay",
        ("need_delay", R): "need_win",
    }),
    Status.LOST: _pattern("need_delay", {"need_delay"}, {
        ("need_delay", R): "need_win",
        ("need_win", W): "need_delay",
    }),
    Status.DRAWN: _pattern("start", {"drawing"}, {
        ("start", Y): "drawing",
        ("drawing", Y): "drawing",
    }),
}


@dataclass(frozen=True)
class ProvenanceSubgraph:
    root: str
    nodes: frozenset
    edges: MappingProxyType  # edge -> EdgeType
    source: Union[SolvedGame, GroundedLabeling]

    @property
    def edge_set(self):
        return frozenset(self.edges)


def _matching_edges(solved: SolvedGame, root: str):
    pat = PATTERNS[solved.status[root]]
    g = solved.graph
    etype = solved.edge_type

    fwd = {(root, pat.start)}
    stack = [(root, pat.start)]
    product_edges = []
    while stack:
        u, q = stack.pop()
        for v in g.successors(u):
            q2 = pat.delta.get((q, etype[(u, v)]))
            if q2 is None:
                continue
            product_edges.append(((u, q), (v, q2)))
            if (v, q2) not in fwd:
                fwd.add((v, q2))
                stack.append((v, q2))

    rev = {}
    for a, b in product_edges:
        rev.setdefault(b, []).append(a)
    live = {st for st in fwd if st[1] in pat.accepting}
    stack = list(live)
    while stack:
        b = stack.pop()
        for a in rev.get(b, ()):
            if a not in live:
                live.add(a)
                stack.append(a)

    return {(a[0], b[0]) for a, b in product_edges if b in live}


def provenance_subgraph(s: SolvedGame, x: str) -> ProvenanceSubgraph:
    s.graph.require(x)
    kept = _matching_edges(s, x)
    nodes = {x}
    for u, v in kept:
        nodes.add(u)
        nodes.add(v)
    edges = {e: s.edge_type[e] for e in sorted(kept)}
    return ProvenanceSubgraph(x, frozenset(nodes), MappingProxyType(edges), s)


def explain_argument(gl: GroundedLabeling, a: str) -> ProvenanceSubgraph:
    """Explanation of an argument's label, as a subgraph of the attack graph."""
    gl.af.require(a)
    sub = provenance_subgraph(gl.game, a)
    edges = {(v, u): t for (u, v), t in sub.edges.items()}
    return ProvenanceSubgraph(a, sub.nodes, MappingProxyType(dict(sorted(edges.items()))), gl)

"""JSON and Graphviz DOT writers for solved games, labelings and explanations.

Output is byte-stable: nodes and edges are written in lexicographic order
and JSON keys are sorted.
"""

from __future__ import annotations

import json

from .af import GroundedLabeling
from .provenance import ProvenanceSubgraph
from .solver import INF, EdgeType, SolvedGame

NODE_COLORS = {
    "won": "green",
    "lost": "red",
    "drawn": "yellow",
    "out": "orange",
    "in": "blue",
    "undec": "yellow",
}
EDGE_COLORS = {
    EdgeType.WINNING: "green",
    EdgeType.DELAYING: "red",
    EdgeType.DRAWING: "yellow",
}


def _length(value):
    if value is None:
        return None
    return "inf" if value == INF else int(value)


def _rows(obj):
    """Flatten any exportable object into node rows, edge rows and a root."""
    root = None
    if isinstance(obj, ProvenanceSubgraph):
        root = obj.root
        keep_nodes, keep_edges = obj.nodes, obj.edges
        obj = obj.source
    else:
        keep_nodes = keep_edges = None

    if isinstance(obj, SolvedGame):
        names = obj.graph.sorted_nodes
        nodes = [(n, obj.status[n].value, obj.node_length[n]) for n in names]
        edges = [
            (u, v, obj.edge_type[(u, v)], obj.edge_length.get((u, v)))
            for u, v in obj.graph.sorted_edges
        ]
    elif isinstance(obj, GroundedLabeling):
        game = obj.game
        names = obj.af.sorted_nodes
        nodes = [(n, obj.label[n].value, obj.min_max[n]) for n in names]
        # an attack a -> b is the move b -> a
        edges = [
            (a, b, game.edge_type[(b, a)], game.edge_length.get((b, a)))
            for a, b in obj.af.sorted_edges
        ]
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")

    if keep_nodes is not None:
        nodes = [row for row in nodes if row[0] in keep_nodes]
        edges = [row for row in edges if (row[0], row[1]) in keep_edges]
    return nodes, edges, root


def export_json(obj) -> str:
    nodes, edges, root = _rows(obj)
    doc = {
        "nodes": [{"id": n, "status": st, "length": _length(ln)} for n, st, ln in nodes],
        "edges": [
            {"from": u, "to": v, "type": t.value, "length": _length(ln)}
            for u, v, t, ln in edges
        ],
    }
    if root is not None:
        doc["root"] = root
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _q(name):
    return f'"{name}"'


def export_dot(obj, name="G") -> str:
    nodes, edges, root = _rows(obj)
    lines = [f"digraph {name} {{"]
    for n, st, ln in nodes:
        attrs = ["style=filled", f"fillcolor={NODE_COLORS[st]}",
                 f'tooltip="{st} {_length(ln)}"']
        if n == root:
            attrs += ["penwidth=3", "color=black"]
        lines.append(f"  {_q(n)} [{', '.join(attrs)}];")
    for u, v, t, ln in edges:
        if t is EdgeType.BAD:
            attrs = "color=gray, style=dashed"
        else:
            attrs = f'color={EDGE_COLORS[t]}, style=solid, label="{_length(ln)}"'
        lines.append(f"  {_q(u)} -> {_q(v)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

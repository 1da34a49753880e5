"""Directed-graph data model and the two text input formats.

Two flavours of the same structure are used throughout the package: a
``GameGraph`` (positions and moves) and an ``ArgumentationFramework``
(arguments and attacks). Both are immutable and use set semantics for
their relations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

NODE_RE = re.compile(r"[A-Za-z0-9_]+")

Edge = tuple[str, str]


class ParseError(ValueError):
    """Raised on malformed input text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    """Raised when well-formed input violates a structural constraint."""


class UnknownNodeError(LookupError):
    """Raised when a node or argument id is not part of the graph."""

    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node {node!r}")


def check_node_id(name):
    if not isinstance(name, str) or not NODE_RE.fullmatch(name):
        raise ValidationError(f"invalid node id {name!r}")
    return name


def _freeze(nodes, edges):
    edges = frozenset((str(u), str(v)) for u, v in edges)
    nodes = frozenset(nodes)
    for n in nodes:
        check_node_id(n)
    for u, v in edges:
        if u not in nodes or v not in nodes:
            missing = u if u not in nodes else v
            raise ValidationError(f"edge ({u}, {v}) references undeclared node {missing!r}")
    return nodes, edges


@dataclass(frozen=True)
class _Digraph:
    nodes: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        nodes, edges = _freeze(self.nodes, self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], nodes: Iterable[str] = ()):
        """Build a graph whose node set is ``nodes`` plus every edge endpoint."""
        edges = list(edges)
        all_nodes = set(nodes)
        for u, v in edges:
            all_nodes.add(u)
            all_nodes.add(v)
        return cls(frozenset(all_nodes), frozenset(edges))

    @cached_property
    def sorted_nodes(self) -> tuple[str, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _succ(self):
        succ = {n: [] for n in self.nodes}
        for u, v in self.sorted_edges:
            succ[u].append(v)
        return {n: tuple(vs) for n, vs in succ.items()}

    @cached_property
    def _pred(self):
        pred = {n: [] for n in self.nodes}
        for u, v in self.sorted_edges:
            pred[v].append(u)
        return {n: tuple(us) for n, us in pred.items()}

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, node):
        return node in self.nodes

    def require(self, node):
        if node not in self.nodes:
            raise UnknownNodeError(node)
        return node

    def renamed(self, mapping):
        """Return an isomorphic copy with every node ``n`` renamed to ``mapping[n]``."""
        return type(self)(
            frozenset(mapping[n] for n in self.nodes),
            frozenset((mapping[u], mapping[v]) for u, v in self.edges),
        )


class GameGraph(_Digraph):
    """Positions (``nodes``) and moves (``edges``) of a win-move game."""

    def successors(self, node) -> tuple[str, ...]:
        return self._succ[self.require(node)]

    def predecessors(self, node) -> tuple[str, ...]:
        return self._pred[self.require(node)]

    def out_edges(self, node) -> tuple[Edge, ...]:
        return tuple((node, v) for v in self.successors(node))


class ArgumentationFramework(_Digraph):
    """Arguments and attacks; an edge ``(a, b)`` means ``a`` attacks ``b``."""

    @property
    def arguments(self):
        return self.nodes

    @property
    def attacks(self):
        return self.edges

    def attackers(self, arg) -> tuple[str, ...]:
        return self._pred[self.require(arg)]

    def attacked_by(self, arg) -> tuple[str, ...]:
        return self._succ[self.require(arg)]


# -- edge list ---------------------------------------------------------------

def parse_edge_list(text: str) -> GameGraph:
    """Parse ``tail head`` lines into a game graph.

    Blank lines and lines starting with ``#`` are skipped. A line holding a
    single token declares a node without adding an edge.
    """
    nodes = set()
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (1, 2):
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
        for tok in tokens:
            if not NODE_RE.fullmatch(tok):
                raise ParseError(f"invalid node id {tok!r}", lineno)
        nodes.update(tokens)
        if len(tokens) == 2:
            edges.add((tokens[0], tokens[1]))
    return GameGraph(frozenset(nodes), frozenset(edges))


def format_edge_list(graph: _Digraph) -> str:
    """Serialize a graph as an edge list; isolated nodes get their own line."""
    touched = {u for e in graph.edges for u in e}
    lines = [f"{u} {v}" for u, v in graph.sorted_edges]
    lines.extend(n for n in graph.sorted_nodes if n not in touched)
    return "".join(line + "\n" for line in lines)


# -- APX ---------------------------------------------------------------------

_APX_STMT = re.compile(
    r"""\s*(?P<pred>[A-Za-z_][A-Za-z0-9_]*)\s*
        \(\s*(?P<args>[^()]*?)\s*\)\s*\.""",
    re.VERBOSE,
)


def _strip_apx_comments(text):
    return "\n".join(line.split("%", 1)[0] for line in text.splitlines())


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse ASPARTIX-style ``arg(X).`` / ``att(X,Y).`` facts."""
    body = _strip_apx_comments(text)
    args = set()
    attacks = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        m = _APX_STMT.match(body, pos)
        lineno = body.count("\n", 0, pos) + 1
        if m is None:
            raise ParseError(f"malformed statement near {body[pos:pos + 20]!r}", lineno)
        pred = m.group("pred")
        params = [p.strip() for p in m.group("args").split(",")]
        for p in params:
            if not NODE_RE.fullmatch(p):
                raise ParseError(f"invalid argument id {p!r}", lineno)
        if pred == "arg":
            if len(params) != 1:
                raise ParseError("arg/1 expects one argument", lineno)
            args.add(params[0])
        elif pred == "att":
            if len(params) != 2:
                raise ParseError("att/2 expects two arguments", lineno)
            attacks.append((params[0], params[1], lineno))
        else:
            raise ParseError(f"unknown predicate {pred!r}", lineno)
        pos = m.end()
    for a, b, lineno in attacks:
        for x in (a, b):
            if x not in args:
                raise ValidationError(f"line {lineno}: att({a},{b}) references undeclared argument {x!r}")
    return ArgumentationFramework(frozenset(args), frozenset((a, b) for a, b, _ in attacks))


def format_apx(af: ArgumentationFramework) -> str:
    stmts = [f"arg({a})." for a in af.sorted_nodes]
    stmts += [f"att({a},{b})." for a, b in af.sorted_edges]
    return " ".join(stmts) + "\n"

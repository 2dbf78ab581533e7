"""Labeled simple graphs, generators, and the text/JSON graph formats.

Text format::

    # comment
    vertices: 1 2 3 v
    edge: 1 2
    edge: 1 3

The JSON form is ``{"vertices": [...], "edges": [[u, v], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GraphSyntaxError, InputError

__all__ = [
    "Graph",
    "from_edges",
    "complete",
    "empty_graph",
    "disjoint_union",
    "k3_plus_isolated",
    "all_labeled_graphs",
    "parse_graph",
    "parse_graph_json",
    "load_graph",
    "equals",
]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with an ordered vertex list.

    The vertex order is the canonical order used for every enumeration.
    Edges are stored as frozensets of two vertices.
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError(f"duplicate vertex names in {self.vertices}")
        for v in self.vertices:
            if not isinstance(v, str) or not v or any(c.isspace() for c in v):
                raise InputError(f"invalid vertex name {v!r}")
        known = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise InputError(f"self-loop or malformed edge {sorted(e)}")
            for v in e:
                if v not in known:
                    raise InputError(f"edge endpoint {v!r} is not a declared vertex")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, x: str, y: str) -> bool:
        return frozenset((x, y)) in self.edges

    def pairs(self) -> list[tuple[str, str]]:
        """All vertex pairs in canonical order."""
        return list(combinations(self.vertices, 2))

    def edge_list(self) -> list[tuple[str, str]]:
        return [(x, y) for x, y in self.pairs() if self.has_edge(x, y)]

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        lines += [f"edge: {x} {y}" for x, y in self.edge_list()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_list()]})

    def __str__(self) -> str:
        return self.to_text()


def from_edges(vertices: Iterable, pairs: Iterable[tuple]) -> Graph:
    vertices = tuple(str(v) for v in vertices)
    edges = set()
    for pair in pairs:
        pair = tuple(str(v) for v in pair)
        if len(pair) != 2:
            raise InputError(f"edge must have two endpoints, got {pair}")
        if pair[0] == pair[1]:
            raise InputError(f"self-loop on {pair[0]!r}")
        edges.add(frozenset(pair))
    return Graph(vertices, frozenset(edges))


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"graph order must be at least 1, got {k}")


def complete(k: int) -> Graph:
    _check_k(k)
    vs = [str(i) for i in range(1, k + 1)]
    return from_edges(vs, combinations(vs, 2))


def empty_graph(k: int) -> Graph:
    _check_k(k)
    return from_edges([str(i) for i in range(1, k + 1)], [])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with no cross edges; clashing names in ``g2`` get a ``'`` suffix."""
    taken = set(g1.vertices)
    rename = {}
    for v in g2.vertices:
        new = v
        while new in taken:
            new += "'"
        rename[v] = new
        taken.add(new)
    edges = set(g1.edges)
    edges.update(frozenset(rename[v] for v in e) for e in g2.edges)
    return Graph(g1.vertices + tuple(rename[v] for v in g2.vertices), frozenset(edges))


def k3_plus_isolated() -> Graph:
    """A triangle on 1, 2, 3 plus an isolated vertex v: the smallest graph whose
    minimum-length 1-11-representations all contain a cube."""
    return disjoint_union(complete(3), from_edges(["v"], []))


def all_labeled_graphs(vertices: Iterable) -> list[Graph]:
    """Every labeled graph on the given vertices, edge subsets in binary counting order."""
    vertices = tuple(str(v) for v in vertices)
    pairs = list(combinations(vertices, 2))
    graphs = []
    for mask in range(1 << len(pairs)):
        graphs.append(from_edges(vertices, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    return graphs


def equals(g1: Graph, g2: Graph) -> bool:
    """Labeled equality: same vertex set, same edge set. Vertex order is ignored."""
    return set(g1.vertices) == set(g2.vertices) and g1.edges == g2.edges


def parse_graph(text: str) -> Graph:
    vertices = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise GraphSyntaxError(f"expected 'vertices:' or 'edge:', got {line!r}", lineno)
        key = key.strip()
        tokens = rest.split()
        if key == "vertices":
            if vertices is not None:
                raise GraphSyntaxError("duplicate 'vertices:' line", lineno)
            if pairs:
                raise GraphSyntaxError("'vertices:' must precede edges", lineno)
            if not tokens:
                raise GraphSyntaxError("empty vertex list", lineno)
            vertices = tokens
        elif key == "edge":
            if vertices is None:
                raise GraphSyntaxError("edge before 'vertices:' line", lineno)
            if len(tokens) != 2:
                raise GraphSyntaxError(f"edge needs exactly two endpoints, got {len(tokens)}", lineno)
            if tokens[0] == tokens[1]:
                raise GraphSyntaxError(f"self-loop on {tokens[0]!r}", lineno)
            for t in tokens:
                if t not in vertices:
                    raise GraphSyntaxError(f"unknown vertex {t!r}", lineno)
            pairs.append(tokens)
        else:
            raise GraphSyntaxError(f"unknown key {key!r}", lineno)
    if vertices is None:
        raise GraphSyntaxError("missing 'vertices:' line")
    if len(set(vertices)) != len(vertices):
        raise GraphSyntaxError(f"duplicate vertex names in {vertices}", 1)
    return from_edges(vertices, pairs)


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(exc.msg, exc.lineno) from exc
    if not isinstance(data, dict) or "vertices" not in data:
        raise GraphSyntaxError("JSON graph needs a 'vertices' field")
    vertices = [str(v) for v in data["vertices"]]
    edges = data.get("edges", [])
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphSyntaxError(f"edge must be a 2-array, got {e!r}")
        for v in e:
            if str(v) not in vertices:
                raise GraphSyntaxError(f"unknown vertex {v!r}")
    return from_edges(vertices, edges)


def load_graph(text: str) -> Graph:
    """Parse either format, chosen by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph(text)

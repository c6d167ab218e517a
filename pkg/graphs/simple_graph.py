"""Finite simple graphs on vertices 1..n, the families used here, and graph JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

from algebra.errors import GraphError, ParseError
from algebra.monomial import default_names

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] = field(default=())
    name: str = ""

    def __post_init__(self) -> None:
        if self.n_vertices < 1:
            raise GraphError("a graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise GraphError(f"edge {{{u},{v}}} leaves the vertex set 1..{self.n_vertices}")
        if not self.labels:
            object.__setattr__(self, "labels", default_names(self.n_vertices))
        elif len(self.labels) != self.n_vertices:
            raise GraphError(f"{len(self.labels)} labels for {self.n_vertices} vertices")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] = (), name: str = ""
    ) -> "SimpleGraph":
        seen: set[Edge] = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {list(e)} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = _edge(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)
        return cls(n, frozenset(seen), tuple(labels), name)

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edges)
        return G

    def to_json(self) -> dict:
        return {"n": self.n_vertices, "edges": [list(e) for e in sorted(self.edges)]}

    def __str__(self) -> str:
        return self.name or f"graph on {self.n_vertices} vertices, {len(self.edges)} edges"


def complete_bipartite(r: int, s: int) -> SimpleGraph:
    """K_{r,s}: part one is 1..r, part two r+1..r+s."""
    if r < 1 or s < 1:
        raise GraphError(f"K_{{r,s}} needs r, s >= 1, got r={r}, s={s}")
    edges = [(i, j) for i in range(1, r + 1) for j in range(r + 1, r + s + 1)]
    return SimpleGraph.from_edges(r + s, edges, name=f"K{r},{s}")


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError(f"C_n needs n >= 3, got {n}")
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    return SimpleGraph.from_edges(n, edges, name=f"C{n}")


def graph_from_json(data: dict) -> SimpleGraph:
    try:
        n = int(data["n"])
        edges = data.get("edges", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"graph JSON needs an integer 'n' and an 'edges' list: {exc}") from exc
    labels = data.get("labels", ())
    return SimpleGraph.from_edges(n, edges, labels, data.get("name", ""))


def read_graph(path: str | Path) -> SimpleGraph:
    path = Path(path)
    if not path.is_file():
        raise GraphError(f"graph file {path} not found")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON, {exc.msg}", exc.lineno, exc.colno) from exc
    graph = graph_from_json(data)
    return graph if graph.name else SimpleGraph(graph.n_vertices, graph.edges, graph.labels, path.stem)

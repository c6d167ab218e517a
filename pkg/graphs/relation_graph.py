from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import networkx as nx

from algebra.errors import ZeroIdealError
from algebra.ideal import MonomialIdeal


@dataclass(frozen=True)
class LinearRelationGraph:
    """Variables x_i, x_j joined when x_i * u_k = x_j * u_l for generators u_k, u_l."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    ambient_dim: int
    single_degree: bool

    @property
    def r(self) -> int:
        return len(self.vertices)

    @property
    def s(self) -> int:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edges)
        return nx.number_connected_components(G)

    @property
    def depth_bounds(self) -> list[tuple[int, int]]:
        """(t, n-t-1) for t = 1..r-s: upper bounds on depth(R/I^t), single-degree ideals only."""
        if not self.single_degree or not self.vertices:
            return []
        n = self.ambient_dim
        return [(t, n - t - 1) for t in range(1, self.r - self.s + 1)]

    @property
    def depth_zero_power(self) -> Optional[int]:
        """n-1 when Gamma is connected on all n variables: then m is associated to I^(n-1)."""
        if self.single_degree and self.r == self.ambient_dim and self.s == 1:
            return self.ambient_dim - 1
        return None


def _swap(u: tuple[int, ...], v: tuple[int, ...]) -> Optional[tuple[int, int]]:
    """The pair {i, j} with u - v = e_j - e_i, if there is one."""
    plus = minus = None
    for k, (a, b) in enumerate(zip(u, v)):
        d = a - b
        if d == 0:
            continue
        if d == 1 and plus is None:
            plus = k
        elif d == -1 and minus is None:
            minus = k
        else:
            return None
    if plus is None or minus is None:
        return None
    return (min(plus, minus), max(plus, minus))


def linear_relation_graph(I: MonomialIdeal) -> LinearRelationGraph:
    if I.is_zero:
        raise ZeroIdealError("linear_relation_graph")
    edges = {e for u, v in combinations(I.gens, 2) if (e := _swap(u, v)) is not None}
    vertices = frozenset(i for e in edges for i in e)
    return LinearRelationGraph(vertices, frozenset(edges), I.ambient_dim, I.is_equigenerated)

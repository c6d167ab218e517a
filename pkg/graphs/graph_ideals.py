"""Ideals attached to graphs: NI(G), DI(G), partial t-cover ideals, rim intersections."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, Sequence

from algebra.errors import CrossCheckError, GraphError
from algebra.ideal import MonomialIdeal, alexander_dual, intersect_all, minimalize, variables_ideal
from algebra.monomial import Monomial, default_names
from graphs.simple_graph import SimpleGraph
from graphs.transversals import minimal_transversals

log = logging.getLogger(__name__)


def _squarefree(vertices: Iterable[int], n: int) -> Monomial:
    return Monomial.from_support((v - 1 for v in vertices), n)


def ni_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Closed neighborhood ideal: one product of N[v] per vertex."""
    n = G.n_vertices
    return minimalize((_squarefree(G.closed_neighborhood(v), n) for v in G.vertices), n, G.labels)


def minimal_dominating_sets(G: SimpleGraph) -> list[frozenset[int]]:
    """Minimal transversals of the closed neighborhoods, vertices 1-indexed."""
    return minimal_transversals(G.closed_neighborhood(v) for v in G.vertices)


def dominates(G: SimpleGraph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(G.closed_neighborhood(v) & S for v in G.vertices)


def di_ideal(G: SimpleGraph, cross_check: bool = True) -> MonomialIdeal:
    """Dominating ideal from the enumerated dominating sets, checked against NI(G)^dual."""
    n = G.n_vertices
    DI = minimalize((_squarefree(S, n) for S in minimal_dominating_sets(G)), n, G.labels)
    if cross_check:
        dual = alexander_dual(ni_ideal(G))
        if dual != DI:
            raise CrossCheckError(
                f"DI({G}) from dominating sets {DI.render()} differs from the Alexander dual "
                f"of NI(G) {dual.render()}"
            )
        log.debug("DI(%s): enumeration and duality agree on %d generators", G, len(DI.gens))
    return DI


def partial_cover_ideal(G: SimpleGraph, t: int) -> MonomialIdeal:
    """J_t(G): intersection of (x, x_{i_1}, ..., x_{i_t}) over t-subsets of N(x)."""
    if t < 1:
        raise GraphError(f"partial cover ideals need t >= 1, got {t}")
    low = [v for v in G.vertices if G.degree(v) < t]
    if low:
        raise GraphError(f"J_{t} needs every degree >= {t}; vertices {low} fall short")
    n = G.n_vertices
    parts = [
        variables_ideal([x - 1, *(u - 1 for u in nbhd)], n, G.labels)
        for x in G.vertices
        for nbhd in combinations(sorted(G.neighbors(x)), t)
    ]
    return intersect_all(parts, n, G.labels)


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    return partial_cover_ideal(G, 1)


def rim_intersection_ideal(
    n: int,
    excluded: Iterable[int] = (),
    ambient: int | None = None,
    names: Sequence[str] | None = None,
) -> MonomialIdeal:
    """Intersection of (x_{j-1}, x_j, x_{j+1}) over rim indices j not excluded.

    Indices are 1-based and wrap (x_0 = x_n, x_{n+1} = x_1); the rim sits on
    the first n variables of a ring with ``ambient`` variables.
    """
    if n < 3:
        raise GraphError(f"a rim needs n >= 3, got {n}")
    excluded = set(excluded)
    if not excluded <= set(range(1, n + 1)):
        raise GraphError(f"excluded indices {sorted(excluded)} leave the rim 1..{n}")
    ambient = ambient or n
    names = tuple(names or default_names(ambient))
    kept = [j for j in range(1, n + 1) if j not in excluded]
    if not kept:
        log.warning("every rim index excluded: the empty intersection is the unit ideal")
        return MonomialIdeal.unit(ambient, names)
    parts = [variables_ideal([(j - 2) % n, j - 1, j % n], ambient, names) for j in kept]
    return intersect_all(parts, ambient, names)

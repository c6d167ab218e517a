"""Minimal transversals (hitting sets) by Berge's incremental dualization."""

from __future__ import annotations

import logging
from typing import Iterable

from tools.budget import checkpoint

log = logging.getLogger(__name__)


def min_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal members, smallest first."""
    kept: list[frozenset[int]] = []
    for s in sorted(set(sets), key=lambda s: (len(s), sorted(s))):
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def minimal_transversals(edges: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    """All inclusion-minimal sets meeting every edge.

    Edges are absorbed one at a time; the frontier is re-minimised after each.
    An empty edge list has the empty set as its only transversal.
    """
    hyperedges = min_sets(frozenset(e) for e in edges)
    if any(not e for e in hyperedges):
        raise ValueError("an empty hyperedge has no transversal")
    frontier: list[frozenset[int]] = [frozenset()]
    for e in hyperedges:
        checkpoint()
        grown = []
        for T in frontier:
            if T & e:
                grown.append(T)
            else:
                grown.extend(T | {v} for v in e)
        frontier = min_sets(grown)
        log.debug("transversal frontier after edge %s: %d sets", sorted(e), len(frontier))
    return sorted(frontier, key=lambda s: (len(s), sorted(s)))

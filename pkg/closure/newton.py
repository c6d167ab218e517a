"""Integral closure of monomial ideals through the Newton polyhedron.

``a`` lies in the integral closure of ``I^t`` iff ``a / t`` lies in
``NP(I) = conv(G(I)) + R^n_{>=0}``; the convex-combination weights come from
an exact simplex and their common denominator gives ``k`` with
``(x^a)^k in (I^t)^k``.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from algebra.errors import DimensionMismatch, ZeroIdealError
from algebra.ideal import MonomialIdeal, divides, minimal_antichain, power
from algebra.monomial import Exponents, Monomial
from closure.simplex import convex_feasibility
from decomposition.irreducible import artinian_closure, staircase_corners
from tools.budget import checkpoint
from tools.settings import get_settings

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonMembershipCertificate:
    verdict: bool
    query: Exponents
    scale: int = 1
    generators: tuple[Exponents, ...] = ()
    weights: Optional[tuple[Fraction, ...]] = None
    power_witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.verdict

    def multiplicities(self) -> tuple[int, ...]:
        """How often each generator occurs in the product bounding ``(x^a)^k``."""
        if not self.verdict:
            return ()
        k = self.power_witness
        return tuple(int(w * k * self.scale) for w in self.weights)

    def validate(self) -> bool:
        """Recheck a positive certificate by direct monomial division."""
        if not self.verdict:
            return True
        w = self.weights
        if any(x < 0 for x in w) or sum(w) != 1:
            return False
        for j, a in enumerate(self.query):
            if sum(x * g[j] for x, g in zip(w, self.generators)) * self.scale > a:
                return False
        k = self.power_witness
        mult = self.multiplicities()
        if any(Fraction(m) != x * k * self.scale for m, x in zip(mult, w)):
            return False
        if sum(mult) != k * self.scale:
            return False
        bound = [sum(m * g[j] for m, g in zip(mult, self.generators)) for j in range(len(self.query))]
        return divides(tuple(bound), tuple(k * a for a in self.query))


def _query(a: Monomial | Sequence[int]) -> Exponents:
    return a.exps if isinstance(a, Monomial) else tuple(a)


def np_contains(I: MonomialIdeal, a: Monomial | Sequence[int], scale: int = 1) -> NewtonMembershipCertificate:
    """Decide ``a in closure(I^scale)`` exactly, with a certificate."""
    if I.is_zero:
        raise ZeroIdealError("np_contains")
    a = _query(a)
    if len(a) != I.ambient_dim:
        raise DimensionMismatch(I.ambient_dim, len(a), "monomial")
    t = scale

    for i, g in enumerate(I.gens):
        if all(t * x <= y for x, y in zip(g, a)):
            w = tuple(Fraction(int(k == i)) for k in range(len(I.gens)))
            return NewtonMembershipCertificate(True, a, t, I.gens, w, 1)
    if sum(a) < t * min(I.degrees):
        return NewtonMembershipCertificate(False, a, t, I.gens)

    # a generator touching a variable absent from a must get weight 0
    usable = [k for k, g in enumerate(I.gens) if all(y or not x for x, y in zip(g, a))]
    if not usable:
        return NewtonMembershipCertificate(False, a, t, I.gens)
    rhs = [Fraction(y, t) for y in a]
    lam = convex_feasibility([I.gens[k] for k in usable], rhs)
    if lam is None:
        return NewtonMembershipCertificate(False, a, t, I.gens)

    weights = [Fraction(0)] * len(I.gens)
    for k, x in zip(usable, lam):
        weights[k] = x
    k = math.lcm(*(x.denominator for x in weights))
    return NewtonMembershipCertificate(True, a, t, I.gens, tuple(weights), k)


def _box_points(bounds: Sequence[int]) -> np.ndarray:
    grids = np.indices(tuple(b + 1 for b in bounds)).reshape(len(bounds), -1).T
    return grids.astype(np.int64)


def _outside(points: np.ndarray, gens: Sequence[Exponents]) -> np.ndarray:
    inside = np.zeros(len(points), dtype=bool)
    for g in gens:
        inside |= (points >= np.asarray(g)).all(axis=1)
    return ~inside


def integral_closure(I: MonomialIdeal, threads: int | None = None) -> MonomialIdeal:
    """Scan the box [0, max exponents] in graded order, keeping Newton members."""
    if I.is_zero:
        raise ZeroIdealError("integral_closure")
    if _trivially_closed(I):
        return I
    threads = threads or get_settings().threads
    n = I.ambient_dim
    pts = _box_points(I.max_exponents)
    pts = pts[_outside(pts, I.gens)]
    degs = pts.sum(axis=1)

    found: list[Exponents] = []
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for d in np.unique(degs):
            checkpoint()
            level = [tuple(int(x) for x in p) for p in pts[degs == d]]
            # points of one degree never divide each other
            level = [p for p in level if not any(divides(f, p) for f in found)]
            if pool is not None:
                verdicts = list(pool.map(lambda p: np_contains(I, p).verdict, level))
            else:
                verdicts = [np_contains(I, p).verdict for p in level]
            found.extend(p for p, ok in zip(level, verdicts) if ok)
    finally:
        if pool is not None:
            pool.shutdown()
    log.debug("closure box scan over %d points found %d new generators", len(pts), len(found))
    return MonomialIdeal(n, minimal_antichain(I.gens + tuple(found)), I.variable_names)


def _trivially_closed(I: MonomialIdeal) -> bool:
    # principal ideals and monomial primes are normal
    return len(I.gens) == 1 or all(sum(g) == 1 for g in I.gens)


@dataclass(frozen=True)
class ClosureCheck:
    closed: bool
    power: int = 1
    witness: Optional[Exponents] = None
    corners_tested: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.closed


def _shrink(I: MonomialIdeal, c: Exponents, t: int) -> Exponents:
    """Greedily lower coordinates of c while it stays in closure(I^t).

    One pass is enough: the closure is upward closed, so a coordinate that
    cannot drop now cannot drop later either.
    """
    w = list(c)
    for j in range(len(w)):
        while w[j] > 0:
            w[j] -= 1
            if not np_contains(I, w, t).verdict:
                w[j] += 1
                break
    return tuple(w)


def power_is_integrally_closed(I: MonomialIdeal, t: int = 1) -> ClosureCheck:
    """Is I^t integrally closed?

    closure(I^t) differs from I^t iff some corner of the Artinian closure of
    I^t lies in t * NP(I); only the corners are tested.
    """
    if I.is_zero:
        raise ZeroIdealError("power_is_integrally_closed")
    if _trivially_closed(I):
        return ClosureCheck(True, t)
    It = power(I, t)
    corners = staircase_corners(artinian_closure(It.gens, It.max_exponents))
    for k, c in enumerate(corners):
        if k % 64 == 0:
            checkpoint()
        if np_contains(I, c, t).verdict:
            w = _shrink(I, c, t)
            log.debug("I^%d not integrally closed: corner %s shrinks to %s", t, c, w)
            return ClosureCheck(False, t, w, k + 1)
    return ClosureCheck(True, t, None, len(corners))


def is_integrally_closed(I: MonomialIdeal) -> ClosureCheck:
    return power_is_integrally_closed(I, 1)

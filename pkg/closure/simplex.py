"""Exact dictionary-form simplex over ``Fraction`` with Bland's rule.

Row ``i`` of the tableau reads ``sum_l A[i][l] * x_nb[l] + x_b[i] = b[i]``
and the objective ``z = z0 + sum_l c[l] * x_nb[l]`` is maximised.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

log = logging.getLogger(__name__)

Frac = Fraction


class SimplexTableau:
    def __init__(self, m: int, n: int) -> None:
        self.m = m
        self.n = n
        self.A: list[list[Fraction]] = [[Frac(0)] * n for _ in range(m)]
        self.b: list[Fraction] = [Frac(0)] * m
        self.c: list[Fraction] = [Frac(0)] * n
        self.z0 = Frac(0)
        # variable labels: 0..n-1 start nonbasic, n..n+m-1 start basic (slacks)
        self.nb_vars = list(range(n))
        self.b_vars = list(range(n, n + m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        row = self.A[i]
        for l in range(self.n):
            self.c[l] -= delta * row[l]
        self.c[j] = -delta
        self.z0 += delta * self.b[i]

        for l in range(self.n):
            row[l] = 1 / piv if l == j else row[l] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            other = self.A[k]
            for l in range(self.n):
                other[l] = -f / piv if l == j else other[l] - f * row[l]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min(
                (self.b[i] / self.A[i][j], self.b_vars[i], i)
                for i in range(self.m)
                if self.A[i][j] > 0
            )
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def maximise(self) -> str:
        while True:
            status = self.bland_step()
            if status != "go_on":
                log.debug("simplex %s after %d pivots, z=%s", status, self.pivots, self.z0)
                return status

    def value_of(self, var: int) -> Fraction:
        try:
            return self.b[self.b_vars.index(var)]
        except ValueError:
            return Frac(0)


def convex_feasibility(points: Sequence[Sequence[int]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Weights ``lam >= 0`` with ``sum(lam) == 1`` and ``sum lam_i p_i <= rhs``, or None.

    Solved as ``max sum(lam)`` under ``sum(lam) <= 1``; the slack basis is
    feasible from the start because ``rhs >= 0``, so one phase suffices and
    the system is feasible exactly when the optimum reaches 1.
    """
    s = len(points)
    dim = len(rhs)
    tab = SimplexTableau(dim + 1, s)
    for j in range(dim):
        for i, p in enumerate(points):
            tab.A[j][i] = Frac(p[j])
        tab.b[j] = Frac(rhs[j])
    tab.A[dim] = [Frac(1)] * s
    tab.b[dim] = Frac(1)
    tab.c = [Frac(1)] * s

    if tab.maximise() != "optimal" or tab.z0 != 1:
        return None
    return [tab.value_of(i) for i in range(s)]

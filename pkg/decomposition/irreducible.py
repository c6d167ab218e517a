"""Irreducible decomposition of monomial ideals.

Two methods give the same irredundant set:

* ``staircase``: read the components off the corners (maximal standard
  monomials) of the Artinian closure ``I + (x_j^(M_j+1))``.
* ``split``: the generator-splitting recursion
  ``I = (I + (x_i^a)) & (I + (w))`` for a mixed generator ``x_i^a * w``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from algebra.errors import UnitIdealError, ZeroIdealError
from algebra.ideal import MonomialIdeal, divides, intersect_all, minimal_antichain
from algebra.monomial import Exponents, Monomial, PrimeSupport, default_names
from tools.budget import checkpoint

log = logging.getLogger(__name__)

Method = Literal["staircase", "split"]


@dataclass(frozen=True, slots=True)
class IrreducibleComponent:
    """(x_i^{a_i} : a_i > 0) stored as the full exponent tuple, 0 meaning absent."""

    exps: Exponents

    def __post_init__(self) -> None:
        if not any(self.exps):
            raise ValueError("an irreducible component needs at least one pure power")

    @property
    def pure_powers(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.exps) if a}

    @property
    def prime(self) -> PrimeSupport:
        return PrimeSupport(frozenset(self.pure_powers))

    def to_ideal(self, names: Sequence[str] | None = None) -> MonomialIdeal:
        n = len(self.exps)
        gens = [Monomial.variable(i, n, a).exps for i, a in self.pure_powers.items()]
        return MonomialIdeal(n, minimal_antichain(gens), tuple(names or default_names(n)))

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(len(self.exps))
        parts = [names[i] if a == 1 else f"{names[i]}^{a}" for i, a in self.pure_powers.items()]
        return "(" + ", ".join(parts) + ")"


# -- staircase corners -------------------------------------------------------


def artinian_closure(gens: Sequence[Exponents], bounds: Sequence[int]) -> tuple[Exponents, ...]:
    """Minimal generators of (gens) + (x_j^(bounds_j + 1) : all j)."""
    n = len(bounds)
    pure = [tuple(b + 1 if k == j else 0 for k in range(n)) for j, b in enumerate(bounds)]
    return minimal_antichain(list(gens) + pure)


@lru_cache(maxsize=8192)
def staircase_corners(gens: tuple[Exponents, ...]) -> tuple[Exponents, ...]:
    """Maximal monomials outside an Artinian monomial ideal.

    Recurses on the last variable: between consecutive x_n-levels the slice
    ideal in the remaining variables is constant, and a corner of the slice
    at level e survives when it is no longer standard at the next level.
    """
    n = len(gens[0])
    if n == 1:
        return ((min(g[0] for g in gens) - 1,),)
    levels = sorted({g[-1] for g in gens})
    corners: list[Exponents] = []
    current = minimal_antichain(g[:-1] for g in gens if g[-1] <= levels[0])
    for e, nxt in zip(levels, levels[1:]):
        checkpoint()
        upper = minimal_antichain(g[:-1] for g in gens if g[-1] <= nxt)
        for c in staircase_corners(current):
            if any(divides(h, c) for h in upper):
                corners.append(c + (nxt - 1,))
        current = upper
    return tuple(corners)


def _staircase(gens: tuple[Exponents, ...], n: int) -> list[Exponents]:
    # only variables in the support take part; the rest are padded with 0
    supp = sorted({i for g in gens for i, e in enumerate(g) if e})
    local = minimal_antichain(tuple(g[i] for i in supp) for g in gens)
    bounds = [max(g[k] for g in local) for k in range(len(supp))]
    out: set[Exponents] = set()
    for c in staircase_corners(artinian_closure(local, bounds)):
        full = [0] * n
        for k, i in enumerate(supp):
            b = c[k] + 1
            full[i] = 0 if b == bounds[k] + 1 else b
        out.add(tuple(full))
    return sorted(out)


# -- splitting recursion -----------------------------------------------------


def _is_pure(g: Exponents) -> bool:
    return sum(1 for e in g if e) <= 1


@lru_cache(maxsize=8192)
def _split(gens: tuple[Exponents, ...]) -> frozenset[Exponents]:
    checkpoint()
    # lex-first mixed generator, split on its highest exponent (lowest index on ties)
    mixed = min((g for g in gens if not _is_pure(g)), key=lambda g: tuple(-e for e in g), default=None)
    if mixed is None:
        leaf = [0] * len(gens[0])
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    leaf[i] = e
        return frozenset({tuple(leaf)})
    a = max(mixed)
    i = mixed.index(a)
    pure = tuple(a if k == i else 0 for k in range(len(mixed)))
    rest = mixed[:i] + (0,) + mixed[i + 1 :]
    left = _split(minimal_antichain(gens + (pure,)))
    right = _split(minimal_antichain(gens + (rest,)))
    return frozenset(_prune(list(left | right)))


# -- redundancy ----------------------------------------------------------------


def _prune(components: list[Exponents], chunk: int = 512) -> list[Exponents]:
    """Drop every component that contains another one."""
    if len(components) < 2:
        return components
    C = np.asarray(components, dtype=np.int64)
    # absent variables compare as +inf on the "other" side
    C_inf = np.where(C == 0, np.iinfo(np.int64).max, C)
    redundant = np.zeros(len(C), dtype=bool)
    for start in range(0, len(C), chunk):
        Q1 = C[start : start + chunk, None, :]
        # Q1 contained in Q2 iff every pure power of Q1 is met by a smaller one of Q2
        inside = ((Q1 == 0) | (C_inf[None, :, :] <= Q1)).all(axis=2)
        for k in range(inside.shape[0]):
            inside[k, start + k] = False
        redundant |= inside.any(axis=0)
    return [tuple(int(x) for x in row) for row, r in zip(C, redundant) if not r]


def _components_key(exps: Exponents) -> tuple:
    return (sum(1 for e in exps if e), tuple(-e for e in exps))


def irreducible_decomposition(
    I: MonomialIdeal, method: Method = "staircase"
) -> list[IrreducibleComponent]:
    if I.is_zero:
        raise ZeroIdealError("irreducible_decomposition")
    if I.is_unit:
        raise UnitIdealError("irreducible_decomposition")
    if method == "staircase":
        comps = _prune(_staircase(I.gens, I.ambient_dim))
    elif method == "split":
        comps = list(_split(I.gens))
    else:
        raise ValueError(f"unknown decomposition method {method!r}")
    comps.sort(key=_components_key)
    log.debug("%s decomposition of %d generators: %d components", method, len(I.gens), len(comps))
    return [IrreducibleComponent(c) for c in comps]


def reconstruct(components: Sequence[IrreducibleComponent], I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the components, in I's ring."""
    return intersect_all(
        (c.to_ideal(I.variable_names) for c in components), I.ambient_dim, I.variable_names
    )

"""Monomial ideals held by their canonical minimal generating set G(I).

Every public operation returns an already-minimal ideal, so structural
equality of the generator tuples is ideal equality.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from algebra.errors import (
    DimensionMismatch,
    ExponentOverflow,
    IdealError,
    NotSquarefreeError,
    ZeroIdealError,
)
from algebra.monomial import (
    MAX_EXPONENT,
    Exponents,
    Monomial,
    PrimeSupport,
    default_names,
    graded_key,
)


def divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def minimal_antichain(candidates: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """Divisibility-minimal elements in graded-lex order."""
    kept: list[Exponents] = []
    for c in sorted(set(candidates), key=graded_key):
        # anything dividing c has degree <= deg(c) and is already placed
        if not any(divides(k, c) for k in kept):
            kept.append(c)
    return tuple(kept)


def _guard(gens: tuple[Exponents, ...]) -> tuple[Exponents, ...]:
    for g in gens:
        for e in g:
            if e > MAX_EXPONENT:
                raise ExponentOverflow(e, MAX_EXPONENT)
    return gens


@dataclass(frozen=True, eq=False, slots=True)
class MonomialIdeal:
    ambient_dim: int
    gens: tuple[Exponents, ...]
    variable_names: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise IdealError("ambient dimension must be positive")
        if len(self.variable_names) != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, len(self.variable_names), "variable names")

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, n: int, names: Sequence[str] | None = None) -> "MonomialIdeal":
        return cls(n, (), tuple(names or default_names(n)))

    @classmethod
    def unit(cls, n: int, names: Sequence[str] | None = None) -> "MonomialIdeal":
        return cls(n, ((0,) * n,), tuple(names or default_names(n)))

    @classmethod
    def from_exponents(
        cls, gens: Iterable[Sequence[int]], n: int, names: Sequence[str] | None = None
    ) -> "MonomialIdeal":
        return minimalize([Monomial(tuple(g)) for g in gens], n, names)

    # -- views -------------------------------------------------------------

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(g) for g in self.gens)

    @property
    def names(self) -> tuple[str, ...]:
        return self.variable_names

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def max_exponents(self) -> Exponents:
        if not self.gens:
            return (0,) * self.ambient_dim
        return tuple(map(max, *self.gens)) if len(self.gens) > 1 else self.gens[0]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees)) == 1

    def render(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(Monomial(g).render(self.variable_names) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self.render()}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.gens))

    def __contains__(self, m: Monomial | Exponents) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return sum_ideals(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, t: int) -> "MonomialIdeal":
        return power(self, t)


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient_dim != J.ambient_dim:
        raise DimensionMismatch(I.ambient_dim, J.ambient_dim, "ideal")


def _exps(m: Monomial | Sequence[int], n: int) -> Exponents:
    exps = m.exps if isinstance(m, Monomial) else tuple(m)
    if len(exps) != n:
        raise DimensionMismatch(n, len(exps), "monomial")
    return exps


# -- the closed set of operations ------------------------------------------


def minimalize(
    gens: Iterable[Monomial | Sequence[int]], n: int, names: Sequence[str] | None = None
) -> MonomialIdeal:
    exps = [_exps(g, n) for g in gens]
    return MonomialIdeal(n, minimal_antichain(exps), tuple(names or default_names(n)))


def contains(I: MonomialIdeal, m: Monomial | Sequence[int]) -> bool:
    a = _exps(m, I.ambient_dim)
    return any(divides(g, a) for g in I.gens)


def sum_ideals(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return MonomialIdeal(I.ambient_dim, minimal_antichain(I.gens + J.gens), I.variable_names)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    gens = minimal_antichain(tuple(map(operator.add, a, b)) for a in I.gens for b in J.gens)
    return MonomialIdeal(I.ambient_dim, _guard(gens), I.variable_names)


@lru_cache(maxsize=1024)
def _power_gens(gens: tuple[Exponents, ...], t: int) -> tuple[Exponents, ...]:
    if t == 1:
        return gens
    prev = _power_gens(gens, t - 1)
    return _guard(minimal_antichain(tuple(map(operator.add, a, b)) for a in prev for b in gens))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise IdealError(f"power exponent must be >= 1, got {t}; build the unit ideal explicitly")
    if I.is_zero:
        return I
    return MonomialIdeal(I.ambient_dim, _power_gens(I.gens, t), I.variable_names)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    gens = minimal_antichain(tuple(map(max, a, b)) for a in I.gens for b in J.gens)
    return MonomialIdeal(I.ambient_dim, gens, I.variable_names)


def intersect_all(
    ideals: Iterable[MonomialIdeal], n: int | None = None, names: Sequence[str] | None = None
) -> MonomialIdeal:
    """n-ary intersection; the empty intersection is the unit ideal."""
    ideals = list(ideals)
    if not ideals:
        if n is None:
            raise IdealError("empty intersection needs an explicit ambient dimension")
        return MonomialIdeal.unit(n, names)
    # smallest first keeps the intermediate lcm sets short
    ideals.sort(key=lambda I: len(I.gens))
    return reduce(intersect, ideals)


def colon(I: MonomialIdeal, u: Monomial | Sequence[int]) -> MonomialIdeal:
    b = _exps(u, I.ambient_dim)
    gens = minimal_antichain(tuple(x - y if x > y else 0 for x, y in zip(g, b)) for g in I.gens)
    return MonomialIdeal(I.ambient_dim, gens, I.variable_names)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    if J.is_zero:
        raise ZeroIdealError("colon_ideal")
    return intersect_all(colon(I, v) for v in J.gens)


def support(I: MonomialIdeal) -> frozenset[int]:
    return frozenset(i for g in I.gens for i, e in enumerate(g) if e)


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I.gens == J.gens


def variables_ideal(vars_: Iterable[int], n: int, names: Sequence[str] | None = None) -> MonomialIdeal:
    """(x_i : i in vars_); the zero ideal when vars_ is empty."""
    gens = []
    for i in sorted(set(vars_)):
        e = [0] * n
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(n, minimal_antichain(gens), tuple(names or default_names(n)))


def prime_ideal(p: PrimeSupport, n: int, names: Sequence[str] | None = None) -> MonomialIdeal:
    if max(p.vars) >= n:
        raise DimensionMismatch(n, max(p.vars) + 1, "prime support")
    return variables_ideal(p.vars, n, names)


def prime_support(I: MonomialIdeal) -> PrimeSupport | None:
    """The PrimeSupport I expands from, or None when I is not a monomial prime."""
    if I.is_zero or any(sum(g) != 1 for g in I.gens):
        return None
    return PrimeSupport(frozenset(g.index(1) for g in I.gens))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero:
        raise ZeroIdealError("alexander_dual")
    for g in I.gens:
        if any(e > 1 for e in g):
            raise NotSquarefreeError("alexander_dual", Monomial(g).render(I.variable_names))
    n = I.ambient_dim
    parts = [variables_ideal((i for i, e in enumerate(g) if e), n, I.variable_names) for g in I.gens]
    return intersect_all(parts, n, I.variable_names)


def principal(u: Monomial, names: Sequence[str] | None = None) -> MonomialIdeal:
    return MonomialIdeal(u.n, (u.exps,), tuple(names or default_names(u.n)))


def scale(I: MonomialIdeal, u: Monomial | Sequence[int]) -> MonomialIdeal:
    """u * I."""
    b = _exps(u, I.ambient_dim)
    gens = tuple(tuple(map(operator.add, g, b)) for g in I.gens)
    return MonomialIdeal(I.ambient_dim, _guard(minimal_antichain(gens)), I.variable_names)


def saturate_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """(I : x_i^oo), i.e. I with x_i set to 1."""
    gens = (g[:i] + (0,) + g[i + 1 :] for g in I.gens)
    return MonomialIdeal(I.ambient_dim, minimal_antichain(gens), I.variable_names)


@lru_cache(maxsize=4096)
def localize(I: MonomialIdeal, keep: frozenset[int]) -> MonomialIdeal:
    """I(p) for p = (x_i : i in keep): every variable outside keep is set to 1."""
    gens = (tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in I.gens)
    return MonomialIdeal(I.ambient_dim, minimal_antichain(gens), I.variable_names)


def embed(
    I: MonomialIdeal, n: int, positions: Sequence[int] | None = None, names: Sequence[str] | None = None
) -> MonomialIdeal:
    """Extend I to a ring with n variables; variable i of I lands on positions[i]."""
    positions = list(positions if positions is not None else range(I.ambient_dim))
    if len(positions) != I.ambient_dim or len(set(positions)) != len(positions):
        raise IdealError("embedding positions must be distinct, one per variable")
    if n < I.ambient_dim or max(positions, default=0) >= n:
        raise DimensionMismatch(n, max(positions, default=0) + 1, "embedding")
    gens = []
    for g in I.gens:
        e = [0] * n
        for i, p in enumerate(positions):
            e[p] = g[i]
        gens.append(tuple(e))
    if names is None:
        base = list(default_names(n))
        for i, p in enumerate(positions):
            base[p] = I.variable_names[i]
        names = base
    return MonomialIdeal(n, minimal_antichain(gens), tuple(names))

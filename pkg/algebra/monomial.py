"""Monomials as exponent vectors, and monomial primes as variable subsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from algebra.errors import DimensionMismatch, ExponentOverflow, IdealError

# exponents live in signed 32-bit range; anything larger is a bug at desk scale
MAX_EXPONENT = 2**31 - 1

Exponents = tuple[int, ...]


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def checked(exps: Iterable[int]) -> Exponents:
    out = tuple(exps)
    for e in out:
        if e > MAX_EXPONENT:
            raise ExponentOverflow(e, MAX_EXPONENT)
    return out


@dataclass(frozen=True, slots=True)
class Monomial:
    """x_1^{a_1} ... x_n^{a_n}, stored as the exponent tuple (a_1, ..., a_n)."""

    exps: Exponents

    def __post_init__(self) -> None:
        for e in self.exps:
            if not isinstance(e, int) or e < 0:
                raise IdealError(f"exponents must be non-negative integers, got {self.exps}")
        checked(self.exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[i] = power
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        exps = [0] * n
        for i in support:
            exps[i] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exps) if e)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def _same_n(self, other: "Monomial") -> None:
        if other.n != self.n:
            raise DimensionMismatch(self.n, other.n, "monomial")

    def divides(self, other: "Monomial") -> bool:
        self._same_n(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_n(other)
        return Monomial(checked(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise IdealError("negative monomial power")
        return Monomial(checked(a * k for a in self.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._same_n(other)
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._same_n(other)
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the generator of ((self) : other)."""
        self._same_n(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.n)
        factors = [
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(self.exps)
            if e
        ]
        return "*".join(factors) if factors else "1"

    def __str__(self) -> str:
        return self.render()


def graded_key(exps: Exponents) -> tuple:
    """Graded-lex sort key: lower degree first, then x1 > x2 > ... lexicographically."""
    return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True, slots=True)
class PrimeSupport:
    """The monomial prime (x_i : i in vars), variables 0-indexed."""

    vars: frozenset[int]

    def __post_init__(self) -> None:
        if not self.vars:
            raise IdealError("a monomial prime needs at least one variable")
        if any(i < 0 for i in self.vars):
            raise IdealError(f"negative variable index in {sorted(self.vars)}")

    @classmethod
    def of(cls, *vars_: int) -> "PrimeSupport":
        return cls(frozenset(vars_))

    @classmethod
    def maximal(cls, n: int) -> "PrimeSupport":
        return cls(frozenset(range(n)))

    def is_maximal(self, n: int) -> bool:
        return self.vars == frozenset(range(n))

    def sort_key(self) -> tuple:
        return (len(self.vars), tuple(sorted(self.vars)))

    def label(self, names: Sequence[str] | None = None) -> str:
        ordered = sorted(self.vars)
        if names is None:
            names = default_names(ordered[-1] + 1)
        return "(" + ",".join(names[i] for i in ordered) + ")"

    def __lt__(self, other: "PrimeSupport") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.label()

"""Associated and minimal primes, symbolic powers and the depth-zero test.

Associated primes are found by localisation: with ``I_S`` the ideal obtained
by setting every variable outside ``S`` to 1,

    p_S in Ass(I)  iff  I_S != (I_S : m_S^oo) = intersection of (I_S : x_i^oo), i in S.

A witness ``v`` with ``(I : v) = p_S`` is climbed out of the saturation.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Optional, Sequence

from more_itertools import powerset
from pydantic import BaseModel

from algebra.errors import CrossCheckError, NotSquarefreeError, UnitIdealError, ZeroIdealError
from algebra.ideal import (
    MonomialIdeal,
    colon,
    contains,
    intersect_all,
    is_squarefree,
    localize,
    power,
    prime_ideal,
    saturate_variable,
    support,
)
from algebra.monomial import Exponents, Monomial, PrimeSupport
from decomposition.irreducible import irreducible_decomposition
from graphs.transversals import minimal_transversals
from tools.budget import checkpoint

log = logging.getLogger(__name__)

AssMethod = Literal["localization", "decomposition"]
WitnessSource = Literal["saturation", "box-search"]


@dataclass(frozen=True)
class AssWitness:
    prime: PrimeSupport
    witness: Exponents
    source: WitnessSource

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for e in self.witness)


def _require_proper(I: MonomialIdeal, op: str) -> None:
    if I.is_zero:
        raise ZeroIdealError(op)
    if I.is_unit:
        raise UnitIdealError(op)


def minimal_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    """Minimal vertex covers of the generator supports."""
    _require_proper(I, "minimal_primes")
    edges = [{i for i, e in enumerate(g) if e} for g in I.gens]
    return sorted(PrimeSupport(T) for T in minimal_transversals(edges))


def _saturation(J: MonomialIdeal, S: frozenset[int]) -> MonomialIdeal:
    return intersect_all((saturate_variable(J, i) for i in sorted(S)), J.ambient_dim, J.variable_names)


def _climb(J: MonomialIdeal, w: Exponents, S: frozenset[int]) -> Exponents:
    """Multiply w by variables of S while it stays outside J."""
    w = list(w)
    moved = True
    while moved:
        moved = False
        for i in sorted(S):
            w[i] += 1
            if contains(J, w):
                w[i] -= 1
            else:
                moved = True
    return tuple(w)


def _box_witness(I: MonomialIdeal, p: PrimeSupport) -> Optional[Exponents]:
    target = prime_ideal(p, I.ambient_dim, I.variable_names)
    for v in itertools.product(*(range(m + 1) for m in I.max_exponents)):
        if colon(I, v) == target:
            return v
    return None


def witness_for(I: MonomialIdeal, S: frozenset[int], sat: MonomialIdeal | None = None) -> AssWitness:
    """A monomial v with (I : v) = p_S, assuming p_S is associated to I."""
    p = PrimeSupport(S)
    J = localize(I, S)
    sat = sat if sat is not None else _saturation(J, S)
    start = next((g for g in sat.gens if not contains(J, g)), None)
    if start is not None:
        w = _climb(J, start, S)
        M = I.max_exponents
        v = tuple(w[i] if i in S else M[i] for i in range(I.ambient_dim))
        if colon(I, v) == prime_ideal(p, I.ambient_dim, I.variable_names):
            return AssWitness(p, v, "saturation")
    log.warning("saturation witness for %s failed; falling back to box search", p.label(I.variable_names))
    v = _box_witness(I, p)
    if v is None:
        raise AssertionError(f"{p.label(I.variable_names)} claimed associated but has no witness")
    return AssWitness(p, v, "box-search")


def _candidates(I: MonomialIdeal, mins: Sequence[PrimeSupport]) -> list[frozenset[int]]:
    supp = sorted(support(I))
    out = []
    for S in powerset(supp):
        S = frozenset(S)
        if S and any(m.vars <= S for m in mins):
            out.append(S)
    return out


def _by_localization(I: MonomialIdeal) -> list[AssWitness]:
    mins = minimal_primes(I)
    # squarefree ideals have no embedded primes
    candidates = [m.vars for m in mins] if is_squarefree(I) else _candidates(I, mins)
    found = []
    for S in candidates:
        checkpoint()
        J = localize(I, S)
        sat = _saturation(J, S)
        if sat != J:
            found.append(witness_for(I, S, sat))
    return found


def _by_decomposition(I: MonomialIdeal, method: str) -> list[AssWitness]:
    primes = {c.prime.vars for c in irreducible_decomposition(I, method)}
    return [witness_for(I, S) for S in primes]


@lru_cache(maxsize=512)
def ass_witnesses(I: MonomialIdeal, method: AssMethod = "localization", decomposition: str = "staircase") -> tuple[AssWitness, ...]:
    """Associated primes of I with a checked witness for each."""
    _require_proper(I, "associated_primes")
    if method == "localization":
        found = _by_localization(I)
    elif method == "decomposition":
        found = _by_decomposition(I, decomposition)
    else:
        raise ValueError(f"unknown Ass method {method!r}")
    found.sort(key=lambda w: w.prime.sort_key())
    for w in found:
        if colon(I, w.witness) != prime_ideal(w.prime, I.ambient_dim, I.variable_names):
            shown = Monomial(w.witness).render(I.variable_names)
            raise CrossCheckError(f"(I : {shown}) is not the prime {w.prime.label(I.variable_names)}")
    log.debug("Ass of %d generators: %d primes", len(I.gens), len(found))
    return tuple(found)


def associated_primes(I: MonomialIdeal, method: AssMethod = "localization") -> list[PrimeSupport]:
    return [w.prime for w in ass_witnesses(I, method)]


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Intersection of p^k over the minimal primes of a squarefree I."""
    _require_proper(I, "symbolic_power")
    if k < 1:
        raise ValueError(f"symbolic power exponent must be >= 1, got {k}")
    for g in I.gens:
        if any(e > 1 for e in g):
            raise NotSquarefreeError("symbolic_power", Monomial(g).render(I.variable_names))
    parts = [power(prime_ideal(p, I.ambient_dim, I.variable_names), k) for p in minimal_primes(I)]
    return intersect_all(parts, I.ambient_dim, I.variable_names)


def depth_zero(I: MonomialIdeal) -> bool:
    """m in Ass(I), i.e. depth(R/I) = 0."""
    _require_proper(I, "depth_zero")
    full = frozenset(range(I.ambient_dim))
    if support(I) != full:
        return False
    return _saturation(I, full) != I


# -- serialised form ---------------------------------------------------------


class PrimeModel(BaseModel):
    vars: list[int]
    label: str

    @classmethod
    def of(cls, p: PrimeSupport, names: Sequence[str]) -> "PrimeModel":
        return cls(vars=sorted(p.vars), label=p.label(names))


class WitnessModel(BaseModel):
    prime: PrimeModel
    witness: str
    source: WitnessSource
    squarefree: bool


class PowerAss(BaseModel):
    k: int
    ass: list[PrimeModel]
    maximal_ideal_present: bool
    witnesses: list[WitnessModel] = []


class AssProfile(BaseModel):
    ideal: str
    bound: int
    min_primes: list[PrimeModel]
    per_power: list[PowerAss]
    depth_zero_onset: Optional[int] = None
    complete: bool = True
    bounded: str = "evidence covers k = 1..bound only"

    def ass_at(self, k: int) -> set[frozenset[int]]:
        for row in self.per_power:
            if row.k == k:
                return {frozenset(p.vars) for p in row.ass}
        raise KeyError(k)

    def is_ascending(self) -> bool:
        rows = sorted(self.per_power, key=lambda r: r.k)
        return all(
            {frozenset(p.vars) for p in a.ass} <= {frozenset(p.vars) for p in b.ass}
            for a, b in zip(rows, rows[1:])
        )


def power_ass(I: MonomialIdeal, k: int, method: AssMethod = "localization") -> PowerAss:
    Ik = power(I, k)
    names = I.variable_names
    ws = ass_witnesses(Ik, method)
    return PowerAss(
        k=k,
        ass=[PrimeModel.of(w.prime, names) for w in ws],
        maximal_ideal_present=any(w.prime.is_maximal(I.ambient_dim) for w in ws),
        witnesses=[
            WitnessModel(
                prime=PrimeModel.of(w.prime, names),
                witness=Monomial(w.witness).render(names),
                source=w.source,
                squarefree=w.squarefree,
            )
            for w in ws
        ],
    )

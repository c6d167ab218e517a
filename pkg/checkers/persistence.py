"""Persistence-type properties checked power by power up to a bound K."""

from __future__ import annotations

import logging
from typing import Optional

from algebra.errors import (
    BudgetExceeded,
    CrossCheckError,
    IdealError,
    NotSquarefreeError,
    UnitIdealError,
    ZeroIdealError,
)
from algebra.ideal import MonomialIdeal, colon_ideal, contains, is_squarefree, power
from algebra.monomial import Monomial, PrimeSupport
from checkers.verdicts import Counterexample, Property, PropertyVerdict
from decomposition.primes import (
    AssProfile,
    PrimeModel,
    ass_witnesses,
    depth_zero,
    minimal_primes,
    power_ass,
    symbolic_power,
)
from tools.budget import checkpoint
from tools.settings import get_settings

log = logging.getLogger(__name__)


def _require_proper(I: MonomialIdeal, op: str) -> None:
    if I.is_zero:
        raise ZeroIdealError(op)
    if I.is_unit:
        raise UnitIdealError(op)


def _require_squarefree(I: MonomialIdeal, op: str) -> None:
    for g in I.gens:
        if any(e > 1 for e in g):
            raise NotSquarefreeError(op, Monomial(g).render(I.variable_names))


def _bound(K: Optional[int], op: str) -> int:
    """K, or the configured property bound when K is None. K must be at least 1."""
    K = get_settings().property_bound if K is None else K
    if K < 1:
        raise IdealError(f"{op} needs a bound K >= 1, got {K}")
    return K


def _missing(big: MonomialIdeal, small: MonomialIdeal) -> Optional[str]:
    """A generator of ``big`` outside ``small``, rendered, if any."""
    for g in big.gens:
        if not contains(small, g):
            return Monomial(g).render(big.variable_names)
    return None


def _colon_scan(
    prop: Property, I: MonomialIdeal, K: int, nth, base: MonomialIdeal
) -> PropertyVerdict:
    """(nth(k+1) : base) == nth(k) for k = 1..K."""
    verdict = dict(property=prop, ideal=I.render(), bound=K)
    done = 0
    try:
        for k in range(1, K + 1):
            checkpoint()
            lhs = colon_ideal(nth(k + 1), base)
            rhs = nth(k)
            if lhs != rhs:
                extra = _missing(lhs, rhs) or _missing(rhs, lhs)
                log.info("%s fails at k=%d", prop.value, k)
                return PropertyVerdict(
                    holds=False,
                    holds_up_to=done,
                    counterexample=Counterexample(k=k, evidence=f"colon and power differ at {extra}"),
                    **verdict,
                )
            done = k
            log.info("%s holds at k=%d", prop.value, k)
    except BudgetExceeded as exc:
        exc.partial = PropertyVerdict(holds=False, holds_up_to=done, complete=False, **verdict)
        raise
    return PropertyVerdict(holds=True, holds_up_to=K, **verdict)


def strong_persistence(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """(I^{k+1} : I) = I^k for k = 1..K."""
    _require_proper(I, "strong_persistence")
    K = _bound(K, "strong_persistence")
    return _colon_scan(Property.strong_persistence, I, K, lambda k: power(I, k), I)


def symbolic_strong_persistence(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """(I^(k+1) : I^(1)) = I^(k) for k = 1..K, squarefree I only."""
    _require_proper(I, "symbolic_strong_persistence")
    _require_squarefree(I, "symbolic_strong_persistence")
    K = _bound(K, "symbolic_strong_persistence")
    verdict = _colon_scan(
        Property.symbolic_strong_persistence, I, K, lambda k: symbolic_power(I, k), symbolic_power(I, 1)
    )
    verdict.notes.append("symbolic strong persistence is checked; the weaker 'symbolic persistence' is not defined separately")
    return verdict


def _primes_at(I: MonomialIdeal, k: int) -> set[frozenset[int]]:
    method = get_settings().ass_method
    return {w.prime.vars for w in ass_witnesses(power(I, k), method)}


def persistence(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """Ass(I^k) inside Ass(I^{k+1}) for k = 1..K."""
    _require_proper(I, "persistence")
    K = _bound(K, "persistence")
    verdict = dict(property=Property.persistence, ideal=I.render(), bound=K)
    names = I.variable_names
    done = 0
    try:
        current = _primes_at(I, 1)
        for k in range(1, K + 1):
            checkpoint()
            nxt = _primes_at(I, k + 1)
            lost = sorted(current - nxt, key=lambda s: (len(s), sorted(s)))
            if lost:
                primes = [PrimeModel.of(PrimeSupport(s), names) for s in lost]
                return PropertyVerdict(
                    holds=False,
                    holds_up_to=done,
                    counterexample=Counterexample(
                        k=k,
                        evidence=f"{', '.join(p.label for p in primes)} in Ass(I^{k}) but not in Ass(I^{k + 1})",
                        primes=primes,
                    ),
                    **verdict,
                )
            done = k
            current = nxt
    except BudgetExceeded as exc:
        exc.partial = PropertyVerdict(holds=False, holds_up_to=done, complete=False, **verdict)
        raise
    return PropertyVerdict(holds=True, holds_up_to=K, **verdict)


def depth_zero_onset(I: MonomialIdeal, K: int | None = None) -> Optional[int]:
    """Least k <= K with m in Ass(I^k)."""
    _require_proper(I, "depth_zero_onset")
    K = _bound(K, "depth_zero_onset")
    for k in range(1, K + 1):
        checkpoint()
        if depth_zero(power(I, k)):
            return k
    return None


def ass_profile(I: MonomialIdeal, K: int | None = None) -> AssProfile:
    _require_proper(I, "ass_profile")
    K = _bound(K, "ass_profile")
    method = get_settings().ass_method
    names = I.variable_names
    mins: list[PrimeModel] = []
    rows = []
    try:
        mins = [PrimeModel.of(p, names) for p in minimal_primes(I)]
        for k in range(1, K + 1):
            checkpoint()
            rows.append(power_ass(I, k, method))
            log.info("Ass(I^%d): %s", k, ", ".join(p.label for p in rows[-1].ass))
    except BudgetExceeded as exc:
        exc.partial = AssProfile(ideal=I.render(), bound=K, min_primes=mins, per_power=rows, complete=False)
        raise
    onset = next((r.k for r in rows if r.maximal_ideal_present), None)
    profile = AssProfile(ideal=I.render(), bound=K, min_primes=mins, per_power=rows, depth_zero_onset=onset)
    if is_squarefree(I) and profile.ass_at(1) != {frozenset(p.vars) for p in mins}:
        raise CrossCheckError(f"Ass(I) of the squarefree ideal {I.render()} differs from Min(I)")
    return profile

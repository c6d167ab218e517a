"""Bounded normality decision for monomial ideals."""

from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from algebra.errors import BudgetExceeded, CrossCheckError, ZeroIdealError
from algebra.ideal import MonomialIdeal, contains, power
from algebra.monomial import Monomial
from closure.newton import np_contains, power_is_integrally_closed

log = logging.getLogger(__name__)

DECISION_BOUND_NOTE = (
    "decision bound n-1: an ideal in n variables whose powers up to n-1 are "
    "integrally closed is normal (external result)"
)


class PowerCheck(BaseModel):
    t: int
    integrally_closed: bool


class NormalityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    ideal: str
    normal: bool
    powers_checked: list[PowerCheck] = Field(default_factory=list)
    failure_power: Optional[int] = None
    failure_witness: Optional[str] = None
    failure_witness_exponents: Optional[list[int]] = None
    bound_used: int
    decision_bound: int
    complete: bool = True
    note: str = DECISION_BOUND_NOTE

    @property
    def full_bound_covered(self) -> bool:
        return self.complete and self.bound_used >= self.decision_bound

    @property
    def verified_up_to(self) -> int:
        return max((p.t for p in self.powers_checked if p.integrally_closed), default=0)

    def summary(self) -> str:
        if self.failure_power is not None:
            return f"not normal: I^{self.failure_power} misses {self.failure_witness} from its closure"
        if self.normal:
            return f"normal (bound n-1={self.decision_bound} covered)"
        return f"verified up to t={self.verified_up_to} (decision bound {self.decision_bound} not covered)"


def decision_bound(I: MonomialIdeal) -> int:
    return max(1, I.ambient_dim - 1)


def is_normal(I: MonomialIdeal, bound: int | None = None) -> NormalityReport:
    """Check I^t for t = 1..min(bound, n-1); claim normality only if n-1 is reached."""
    if I.is_zero:
        raise ZeroIdealError("is_normal")
    full = decision_bound(I)
    limit = full if bound is None else min(bound, full)
    if bound is not None and bound < full:
        log.warning("normality bound %d is below the decision bound %d; the verdict is bounded", bound, full)

    base = dict(ideal=I.render(), bound_used=limit, decision_bound=full)
    if I.is_unit:
        return NormalityReport(normal=True, powers_checked=[PowerCheck(t=1, integrally_closed=True)], **base)

    checked: list[PowerCheck] = []
    for t in range(1, limit + 1):
        try:
            result = power_is_integrally_closed(I, t)
        except BudgetExceeded as exc:
            exc.partial = NormalityReport(
                normal=False, powers_checked=checked, complete=False, **{**base, "bound_used": t - 1}
            )
            raise
        checked.append(PowerCheck(t=t, integrally_closed=result.closed))
        log.info("power %d: %s", t, "integrally closed" if result.closed else "not integrally closed")
        if not result.closed:
            w = Monomial(result.witness)
            if not np_contains(I, w, t).verdict or contains(power(I, t), w):
                shown = w.render(I.variable_names)
                raise CrossCheckError(f"witness {shown} is not in closure(I^{t}) minus I^{t}")
            return NormalityReport(
                normal=False,
                powers_checked=checked,
                failure_power=t,
                failure_witness=w.render(I.variable_names),
                failure_witness_exponents=list(w.exps),
                **base,
            )
    return NormalityReport(normal=limit >= full, powers_checked=checked, **base)

"""Serialised verdicts of the bounded property checks."""

from __future__ import annotations

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, Field

from closure.normality import NormalityReport
from decomposition.primes import PrimeModel


class Property(str, Enum):
    persistence = "persistence"
    strong_persistence = "strong_persistence"
    symbolic_strong_persistence = "symbolic_strong_persistence"
    ntf = "ntf"
    nntf = "nntf"


class Counterexample(BaseModel):
    k: int
    evidence: str
    primes: list[PrimeModel] = Field(default_factory=list)


class PropertyVerdict(BaseModel):
    property: Property
    ideal: str
    # None: the test ran but reached no decision either way
    holds: Optional[bool]
    holds_up_to: int
    bound: int
    counterexample: Optional[Counterexample] = None
    threshold: Optional[int] = None
    extra_prime: Optional[PrimeModel] = None
    complete: bool = True
    notes: list[str] = Field(default_factory=list)
    bounded: str = "checked for k = 1..bound only; no claim beyond the bound"

    def summary(self) -> str:
        name = self.property.value.replace("_", " ")
        if self.holds is None:
            reason = self.notes[-1] if self.notes else "no decision"
            return f"{name} undecided: {reason}"
        if self.counterexample is not None:
            return f"{name} fails at k={self.counterexample.k}: {self.counterexample.evidence}"
        if not self.complete:
            return f"{name} holds up to k={self.holds_up_to} (budget exhausted before {self.bound})"
        return f"{name} holds for k <= {self.holds_up_to}"


Outcome = Literal["verified", "not-applicable", "counterexample", "inconclusive"]


class HypothesisCheck(BaseModel):
    name: str
    passed: bool
    certified: bool = True
    detail: str = ""


class CriterionReport(BaseModel):
    kind: str
    hypotheses: list[HypothesisCheck]
    outcome: Outcome
    constructed: Optional[str] = None
    conclusion: Optional[NormalityReport] = None
    power_cap: int
    notes: list[str] = Field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    def summary(self) -> str:
        failed = [h.name for h in self.hypotheses if not h.passed]
        if failed:
            return f"{self.kind}: not applicable ({'; '.join(failed)})"
        if self.conclusion is None:
            return f"{self.kind}: {self.outcome}"
        return f"{self.kind}: {self.outcome}; L = {self.constructed}: {self.conclusion.summary()}"

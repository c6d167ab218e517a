"""Instance-level verification of the normality transfer criteria.

Each kind states hypotheses on its inputs and a construction L. Hypotheses
are validated first; only then is L built and tested with ``is_normal`` up
to ``min(power_cap, n - 1)``. A failed hypothesis makes the instance
"not-applicable" and is never reported as a counterexample.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, Sequence

from algebra.errors import IdealError, ParseError
from algebra.ideal import (
    MonomialIdeal,
    colon,
    embed,
    intersect,
    is_squarefree,
    product,
    scale,
    sum_ideals,
    variables_ideal,
)
from algebra.monomial import Monomial, default_names
from algebra.textio import parse_ideal
from checkers.verdicts import CriterionReport, HypothesisCheck
from closure.normality import NormalityReport, is_normal
from tools.settings import get_settings

log = logging.getLogger(__name__)


class CriterionKind(str, Enum):
    """L = I + x_d^c H, I + hH, I + JH, IS & (x_n, x_{n+1}^l), IS & (x_n..x_{n+m}), I & (x_n, x_{n+1})."""

    x_power = "I+xcH"
    monomial_multiple = "I+hH"
    coprime_product = "I+JH"
    pinched = "vI+wJ"
    cone = "cor"
    last_pair = "xn-xn1"


@dataclass(frozen=True)
class CriterionInputs:
    I: MonomialIdeal
    H: Optional[MonomialIdeal] = None
    J: Optional[MonomialIdeal] = None
    d: Optional[int] = None
    c: int = 1
    h: Optional[Monomial] = None
    ell: int = 1
    m: int = 1
    names: tuple[str, ...] = field(default=())


def _coprime(u: Sequence[int], v: Sequence[int]) -> bool:
    return not any(a and b for a, b in zip(u, v))


class _Checks:
    """Collects hypothesis outcomes, certified or only bounded."""

    def __init__(self, bound: int | None) -> None:
        self.bound = bound
        self.items: list[HypothesisCheck] = []

    def require(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append(HypothesisCheck(name=name, passed=ok, detail=detail))
        return ok

    def normal(self, name: str, I: Optional[MonomialIdeal]) -> bool:
        if I is None or I.is_zero:
            return self.require(name, False, "missing or zero ideal")
        report = is_normal(I, self.bound)
        ok = report.failure_power is None
        self.items.append(
            HypothesisCheck(name=name, passed=ok, certified=ok and report.normal, detail=report.summary())
        )
        return ok

    @property
    def passed(self) -> bool:
        return all(h.passed for h in self.items)

    @property
    def certified(self) -> bool:
        return all(h.certified for h in self.items)


def _x_power(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I, H, d = inp.I, inp.H, inp.d
    if H is None or d is None:
        raise IdealError("I+xcH needs H and the variable d")
    ch.require("c >= 1", inp.c >= 1, f"c = {inp.c}")
    ch.require(
        "gcd(v, x_d) = 1 on G(I) and G(H)",
        all(g[d] == 0 for g in I.gens + H.gens),
        f"x_d = {I.variable_names[d]}",
    )
    ch.normal("I normal", I)
    ch.normal("H normal", H)
    ch.normal("I+H normal", sum_ideals(I, H))
    if not ch.passed:
        return None
    return sum_ideals(I, scale(H, Monomial.variable(d, I.ambient_dim, inp.c)))


def _monomial_multiple(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I, H, h = inp.I, inp.H, inp.h
    if H is None or h is None:
        raise IdealError("I+hH needs H and the monomial h")
    ch.require("gcd(v, h) = 1 on G(I) and G(H)", all(_coprime(g, h.exps) for g in I.gens + H.gens), f"h = {h.render(I.variable_names)}")
    ch.normal("I normal", I)
    ch.normal("H normal", H)
    ch.normal("I+H normal", sum_ideals(I, H))
    if not ch.passed:
        return None
    return sum_ideals(I, scale(H, h))


def _coprime_product(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I, H, J = inp.I, inp.H, inp.J
    if H is None or J is None or J.is_zero:
        raise IdealError("I+JH needs H and a nonzero J")
    ch.require("I inside H", all(g in H for g in I.gens))
    ch.require(
        "G(J) pairwise coprime",
        all(_coprime(u, v) for k, u in enumerate(J.gens) for v in J.gens[k + 1 :]),
    )
    ch.require(
        "G(J) coprime to G(I) and G(H)",
        all(_coprime(u, v) for u in I.gens + H.gens for v in J.gens),
    )
    ch.normal("I normal", I)
    ch.normal("H normal", H)
    if not ch.passed:
        return None
    return sum_ideals(I, product(J, H))


def _squarefree_normal(I: MonomialIdeal, ch: _Checks) -> None:
    ch.require("I squarefree", is_squarefree(I))
    ch.normal("I normal", I)


def _pinched(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I, n = inp.I, inp.I.ambient_dim
    ch.require("l >= 1", inp.ell >= 1, f"l = {inp.ell}")
    _squarefree_normal(I, ch)
    if not ch.passed:
        return None
    names = inp.names or (*I.variable_names, f"x{n + 1}")
    S = embed(I, n + 1, names=names)
    last = MonomialIdeal.from_exponents(
        [Monomial.variable(n - 1, n + 1).exps, Monomial.variable(n, n + 1, inp.ell).exps], n + 1, names
    )
    return intersect(S, last)


def _cone(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I, n, m = inp.I, inp.I.ambient_dim, inp.m
    ch.require("m >= 1", m >= 1, f"m = {m}")
    _squarefree_normal(I, ch)
    if not ch.passed:
        return None
    names = inp.names or (*I.variable_names, *(f"x{n + j}" for j in range(1, m + 1)))
    S = embed(I, n + m, names=names)
    return intersect(S, variables_ideal(range(n - 1, n + m), n + m, names))


def _last_pair(inp: CriterionInputs, ch: _Checks) -> Optional[MonomialIdeal]:
    I = inp.I
    n1 = I.ambient_dim
    if n1 < 2:
        raise IdealError("I & (x_n, x_{n+1}) needs at least two variables")
    xn, xn1 = n1 - 2, n1 - 1
    _squarefree_normal(I, ch)
    side = sum_ideals(
        intersect(I, variables_ideal([xn], n1, I.variable_names)),
        colon(I, Monomial.variable(xn1, n1)),
    )
    ch.normal("I & (x_n) + (I : x_{n+1}) normal", side)
    if not ch.passed:
        return None
    return intersect(I, variables_ideal([xn, xn1], n1, I.variable_names))


_BUILDERS: dict[CriterionKind, Callable[[CriterionInputs, _Checks], Optional[MonomialIdeal]]] = {
    CriterionKind.x_power: _x_power,
    CriterionKind.monomial_multiple: _monomial_multiple,
    CriterionKind.coprime_product: _coprime_product,
    CriterionKind.pinched: _pinched,
    CriterionKind.cone: _cone,
    CriterionKind.last_pair: _last_pair,
}


def verify_criterion(kind: CriterionKind | str, inputs: CriterionInputs, power_cap: int | None = None) -> CriterionReport:
    kind = CriterionKind(kind)
    cap = power_cap or get_settings().criterion_power_cap
    checks = _Checks(get_settings().normality_bound)
    L = _BUILDERS[kind](inputs, checks)
    base = dict(kind=kind.value, hypotheses=checks.items, power_cap=cap)
    if L is None:
        return CriterionReport(outcome="not-applicable", **base)

    notes = []
    if not checks.certified:
        notes.append("hypothesis normality verified only below the decision bound")
    if L.is_zero:
        return CriterionReport(outcome="not-applicable", constructed="(0)", notes=notes + ["L is the zero ideal"], **base)
    bound = min(cap, max(1, L.ambient_dim - 1))
    conclusion: NormalityReport = is_normal(L, bound)
    if conclusion.failure_power is None:
        outcome = "verified"
    elif checks.certified:
        outcome = "counterexample"
    else:
        outcome = "inconclusive"
    log.info("%s on %s: %s", kind.value, L.render(), outcome)
    return CriterionReport(outcome=outcome, constructed=L.render(), conclusion=conclusion, notes=notes, **base)


# -- JSON inputs ----------------------------------------------------------------


def _ideal(names: Sequence[str], gens: Sequence[str]) -> MonomialIdeal:
    return parse_ideal("vars: " + " ".join(names) + "\n" + "\n".join(gens))


def _monomial(names: Sequence[str], text: str) -> Monomial:
    ideal = _ideal(names, [text])
    return ideal.generators[0]


def _variable(names: Sequence[str], name: str) -> int:
    try:
        return list(names).index(name)
    except ValueError:
        raise ParseError(f"unknown variable {name!r}", 1, 1) from None


def inputs_from_json(data: dict) -> tuple[CriterionKind, CriterionInputs]:
    """``{"kind": "I+hH", "vars": [...], "I": [...], "H": [...], "h": "x1", ...}``"""
    try:
        kind = CriterionKind(data["kind"])
        names = list(data.get("vars") or default_names(int(data["n"])))
    except (KeyError, ValueError) as exc:
        raise IdealError(f"criterion JSON needs a valid 'kind' and 'vars': {exc}") from exc
    opt = lambda key: _ideal(names, data[key]) if key in data else None  # noqa: E731
    inputs = CriterionInputs(
        I=_ideal(names, data.get("I", [])),
        H=opt("H"),
        J=opt("J"),
        d=_variable(names, data["d"]) if "d" in data else None,
        c=int(data.get("c", 1)),
        h=_monomial(names, data["h"]) if "h" in data else None,
        ell=int(data.get("ell", 1)),
        m=int(data.get("m", 1)),
    )
    return kind, inputs


def read_criterion(path: str | Path) -> tuple[CriterionKind, CriterionInputs]:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"criterion JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    return inputs_from_json(data)

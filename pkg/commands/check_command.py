"""`check` command: bounded property checks and criterion verification."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence

from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from algebra.errors import IdealError, ParseError
from algebra.monomial import Monomial
from checkers import (
    ass_profile,
    nearly_ntf,
    nntf_by_localization,
    normally_torsion_free,
    persistence,
    read_criterion,
    strong_persistence,
    symbolic_strong_persistence,
    verify_criterion,
)
from checkers.verdicts import CriterionReport, PropertyVerdict
from closure import is_integrally_closed, is_normal
from closure.normality import decision_bound
from commands.common import Options, run_guarded, show, status
from commands.targets import IdealTarget, ideal_target
from decomposition.primes import AssProfile
from tools.report import ExitCode, RunReport, digest
from tools.settings import get_settings

log = logging.getLogger(__name__)

CHECK_PROPERTIES = (
    "normal",
    "integrally-closed",
    "ass",
    "persistence",
    "strong-persistence",
    "ssp",
    "ntf",
    "nntf",
    "criterion",
)

_SCANS = {
    "persistence": persistence,
    "strong-persistence": strong_persistence,
    "ssp": symbolic_strong_persistence,
    "ntf": normally_torsion_free,
    "nntf": nearly_ntf,
}

_CRITERION_EXIT = {
    "verified": ExitCode.VERIFIED,
    "counterexample": ExitCode.REFUTED,
    "not-applicable": ExitCode.INAPPLICABLE,
    # a failure with only bounded hypotheses refutes nothing
    "inconclusive": ExitCode.INAPPLICABLE,
}


def _verdict_panel(opts: Options, title: str, text: str, ok: bool) -> None:
    show(opts, Panel(escape(text), title=title, border_style="green" if ok else "red"))


def _ass_table(profile: AssProfile) -> Table:
    table = Table(title=f"Ass(I^k) for {profile.ideal}")
    table.add_column("k", justify="right")
    table.add_column("associated primes")
    table.add_column("m", justify="center")
    for row in profile.per_power:
        table.add_row(
            str(row.k),
            escape(", ".join(p.label for p in row.ass)),
            "yes" if row.maximal_ideal_present else "no",
        )
    return table


def _check_ideal(prop: str, target: IdealTarget, bound: Optional[int], report: RunReport, opts: Options) -> tuple[str, ExitCode]:
    I = target.ideal
    settings = get_settings()

    if prop == "normal":
        limit = bound if bound is not None else settings.normality_bound
        report.bounds["normality"] = limit if limit is not None else decision_bound(I)
        with report.phase("normality"), status("Checking powers for integral closedness…"):
            result = is_normal(I, limit)
        report.verdicts.append(result)
        _verdict_panel(opts, "Normality", result.summary(), result.failure_power is None)
        if result.failure_power is not None:
            return "refuted", ExitCode.REFUTED
        return ("normal" if result.normal else "verified-to-bound"), ExitCode.VERIFIED

    if prop == "integrally-closed":
        with report.phase("closure"), status("Testing staircase corners…"):
            check = is_integrally_closed(I)
        if check.closed:
            report.details["integrally_closed"] = True
            _verdict_panel(opts, "Integral closure", f"{I.render()} is integrally closed", True)
            return "verified", ExitCode.VERIFIED
        witness = Monomial(check.witness).render(I.variable_names)
        report.details.update(integrally_closed=False, witness=witness)
        _verdict_panel(opts, "Integral closure", f"{witness} lies in the closure but not in I", False)
        return "refuted", ExitCode.REFUTED

    K = bound if bound is not None else settings.property_bound
    report.bounds["property"] = K

    if prop == "ass":
        with report.phase("ass"), status("Computing associated primes of powers…"):
            profile = ass_profile(I, K)
        report.verdicts.append(profile)
        show(opts, _ass_table(profile))
        onset = profile.depth_zero_onset
        show(opts, f"depth zero onset: {onset if onset is not None else f'none up to k={K}'}")
        return "reported", ExitCode.VERIFIED

    scan = _SCANS.get(prop)
    if scan is None:
        raise IdealError(f"unknown property {prop!r}; choose from {', '.join(CHECK_PROPERTIES)}")
    with report.phase(prop), status(f"Checking {prop} up to k={K}…"):
        verdict: PropertyVerdict = scan(I, K)
    report.verdicts.append(verdict)
    _verdict_panel(opts, prop, verdict.summary(), verdict.holds)

    if prop == "nntf":
        with report.phase("nntf-localization"):
            local = nntf_by_localization(I, K)
        report.verdicts.append(local)
        show(opts, f"localisation test: {'applies' if local.holds else 'undecided'}")
    return ("holds" if verdict.holds else "refuted"), (ExitCode.VERIFIED if verdict.holds else ExitCode.REFUTED)


def _check_criterion(path: str, bound: Optional[int], report: RunReport, opts: Options) -> tuple[str, ExitCode]:
    if not path.endswith(".json"):
        raise ParseError(f"criterion inputs must be a .json file, got {path!r}", 1, 1)
    if not Path(path).is_file():
        raise ParseError(f"criterion file {path} not found", 1, 1)
    raw = Path(path).read_text(encoding="utf-8")
    report.inputs.append(digest("file", path, raw))
    kind, inputs = read_criterion(path)
    cap = bound if bound is not None else get_settings().criterion_power_cap
    report.bounds["power_cap"] = cap
    with report.phase("criterion"), status(f"Verifying {kind.value}…"):
        result: CriterionReport = verify_criterion(kind, inputs, cap)
    report.verdicts.append(result)

    table = Table(title=f"Hypotheses of {kind.value}")
    table.add_column("hypothesis")
    table.add_column("passed", justify="center")
    table.add_column("certified", justify="center")
    for h in result.hypotheses:
        table.add_row(escape(h.name), "yes" if h.passed else "no", "yes" if h.certified else "bounded")
    show(opts, table)
    _verdict_panel(opts, "Criterion", result.summary(), result.outcome == "verified")
    return result.outcome, _CRITERION_EXIT[result.outcome]


def run_check(
    prop: str,
    target: str,
    bound: Optional[int] = None,
    opts: Options = Options(),
    argv: Sequence[str] = (),
) -> int:
    report = RunReport(command=list(argv) or ["check", prop, target])

    def body() -> tuple[str, ExitCode]:
        if bound is not None and bound < 1:
            raise IdealError(f"--bound must be >= 1, got {bound}")
        if prop == "criterion":
            return _check_criterion(target, bound, report, opts)
        with report.phase("parse"):
            t = ideal_target(target)
        report.inputs.append(t.source)
        return _check_ideal(prop, t, bound, report, opts)

    return run_guarded(report, opts, body)

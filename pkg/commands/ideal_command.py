"""`ideal` command: arithmetic on ideals read from files, families or inline text."""

from __future__ import annotations

import logging
from functools import reduce
from typing import Callable, Optional, Sequence

from rich.markup import escape
from rich.panel import Panel

from algebra import (
    MonomialIdeal,
    alexander_dual,
    colon,
    colon_ideal,
    format_ideal,
    intersect,
    power,
    product,
    sum_ideals,
)
from algebra.errors import CrossCheckError, IdealError
from closure import integral_closure
from commands.common import Options, run_guarded, show, status
from commands.targets import IdealTarget, ideal_target, inline_ideal
from decomposition import irreducible_decomposition, reconstruct
from graphs import linear_relation_graph
from tools.report import ExitCode, RunReport
from tools.settings import get_settings

log = logging.getLogger(__name__)

IDEAL_OPS = ("sum", "product", "power", "intersect", "colon", "dual", "closure", "decompose", "relations")

_FOLDS: dict[str, Callable[[MonomialIdeal, MonomialIdeal], MonomialIdeal]] = {
    "sum": sum_ideals,
    "product": product,
    "intersect": intersect,
}


def _collect(paths: Sequence[str], exprs: Sequence[str]) -> list[IdealTarget]:
    return [ideal_target(p) for p in paths] + [inline_ideal(e) for e in exprs]


def _need(op: str, targets: list[IdealTarget], count: int, exact: bool = True) -> list[MonomialIdeal]:
    if len(targets) < count or (exact and len(targets) > count):
        want = f"exactly {count}" if exact else f"at least {count}"
        raise IdealError(f"'ideal {op}' takes {want} input ideal(s), got {len(targets)}")
    return [t.ideal for t in targets]


def _show_ideal(opts: Options, title: str, I: MonomialIdeal) -> None:
    show(opts, Panel(escape(format_ideal(I).rstrip()), title=f"{title} ({len(I.gens)} generators)", border_style="green"))


def run_ideal(
    op: str,
    paths: Sequence[str] = (),
    exprs: Sequence[str] = (),
    t: Optional[int] = None,
    opts: Options = Options(),
    argv: Sequence[str] = (),
) -> int:
    report = RunReport(command=list(argv) or ["ideal", op])
    settings = get_settings()

    def body() -> tuple[str, ExitCode]:
        with report.phase("parse"):
            targets = _collect(paths, exprs)
        report.inputs.extend(t_.source for t_ in targets)

        with report.phase(op), status(f"Computing {op}…"):
            if op in _FOLDS:
                result = reduce(_FOLDS[op], _need(op, targets, 2, exact=False))
            elif op == "power":
                if t is None or t < 1:
                    raise IdealError("'ideal power' needs --t N with N >= 1")
                report.bounds["t"] = t
                result = power(*_need(op, targets, 1), t)
            elif op == "colon":
                I, J = _need(op, targets, 2)
                result = colon(I, J.generators[0]) if len(J.gens) == 1 else colon_ideal(I, J)
            elif op == "dual":
                result = alexander_dual(*_need(op, targets, 1))
            elif op == "closure":
                result = integral_closure(*_need(op, targets, 1), threads=settings.threads)
            elif op == "decompose":
                (I,) = _need(op, targets, 1)
                comps = irreducible_decomposition(I, settings.decomposition_method)
                if reconstruct(comps, I) != I:
                    raise CrossCheckError(
                        f"the {len(comps)} irreducible components do not intersect back to the input ideal"
                    )
                rendered = [c.render(I.variable_names) for c in comps]
                report.details["components"] = rendered
                report.result = " & ".join(rendered)
                show(opts, Panel(escape("\n".join(rendered)), title=f"Irreducible components ({len(comps)})", border_style="green"))
                return "ok", ExitCode.VERIFIED
            elif op == "relations":
                (I,) = _need(op, targets, 1)
                gamma = linear_relation_graph(I)
                names = I.variable_names
                edges = [f"{names[i]}-{names[j]}" for i, j in sorted(gamma.edges)]
                report.details.update(
                    edges=edges,
                    r=gamma.r,
                    s=gamma.s,
                    single_degree=gamma.single_degree,
                    depth_zero_power=gamma.depth_zero_power,
                    depth_bounds=[f"depth(R/I^{t}) <= {d}" for t, d in gamma.depth_bounds],
                )
                lines = [f"edges: {', '.join(edges) or '(none)'}", f"r = {gamma.r}, s = {gamma.s}"]
                lines += report.details["depth_bounds"]
                if gamma.depth_zero_power is not None:
                    lines.append(f"m is associated to I^{gamma.depth_zero_power}")
                show(opts, Panel(escape("\n".join(lines)), title="Linear relation graph", border_style="green"))
                return "ok", ExitCode.VERIFIED
            else:
                raise IdealError(f"unknown ideal operation {op!r}; choose from {', '.join(IDEAL_OPS)}")

        report.result = format_ideal(result)
        _show_ideal(opts, op, result)
        log.info("ideal %s: %d generators", op, len(result.gens))
        return "ok", ExitCode.VERIFIED

    return run_guarded(report, opts, body)

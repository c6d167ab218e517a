"""`graph` command: NI, DI, J_t ideals and dominating sets of a graph target."""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from algebra import format_ideal
from algebra.errors import IdealError
from commands.common import Options, run_guarded, show, status
from commands.targets import graph_target
from graphs import (
    di_ideal,
    has_consecutive_radial,
    minimal_dominating_sets,
    ni_ideal,
    partial_cover_ideal,
    wheel_decomposition,
)
from tools.report import ExitCode, RunReport

log = logging.getLogger(__name__)

GRAPH_OUTPUTS = ("ni", "di", "jt", "domsets")


def run_graph(
    target: str,
    out: str = "ni",
    t: Optional[int] = None,
    opts: Options = Options(),
    argv: Sequence[str] = (),
) -> int:
    report = RunReport(command=list(argv) or ["graph", target, "--out", out])

    def body() -> tuple[str, ExitCode]:
        with report.phase("build"):
            g = graph_target(target)
        report.inputs.append(g.source)
        G = g.graph
        report.details["graph"] = str(G)

        with report.phase(out), status(f"Computing {out} of {G}…"):
            if out == "ni":
                I = ni_ideal(G)
            elif out == "di":
                # raises CrossCheckError when the two paths disagree
                I = di_ideal(G, cross_check=True)
                report.details["cross_check"] = "minimal dominating sets agree with the Alexander dual of NI"
            elif out == "jt":
                if t is None:
                    raise IdealError("'--out jt' needs --t N")
                report.bounds["t"] = t
                I = partial_cover_ideal(G, t)
            elif out == "domsets":
                sets = minimal_dominating_sets(G)
                rendered = ["{" + ", ".join(G.labels[v - 1] for v in sorted(s)) + "}" for s in sets]
                report.details["dominating_sets"] = rendered
                report.result = "\n".join(rendered)
                table = Table(title=f"Minimal dominating sets of {G}")
                table.add_column("#", justify="right")
                table.add_column("set")
                for k, s in enumerate(rendered, start=1):
                    table.add_row(str(k), escape(s))
                show(opts, table)
                return "ok", ExitCode.VERIFIED
            else:
                raise IdealError(f"unknown graph output {out!r}; choose from {', '.join(GRAPH_OUTPUTS)}")

        if g.wheel is not None:
            spec = g.wheel
            report.details.update(
                radial_number=spec.k,
                radial_lengths=[str(x) for x in spec.radial_lengths],
                three_consecutive_radial=has_consecutive_radial(spec, 3),
            )
            if out == "di":
                split = wheel_decomposition(spec)
                report.details["rim_decomposition_holds"] = split.holds

        report.result = format_ideal(I)
        title = f"{out.upper()}({G}) ({len(I.gens)} generators)"
        show(opts, Panel(escape(format_ideal(I).rstrip()), title=title, border_style="green"))
        if "cross_check" in report.details:
            show(opts, "[green]DI cross-check: dual path agrees.[/]")
        log.info("%s of %s: %d generators", out, G, len(I.gens))
        return "ok", ExitCode.VERIFIED

    return run_guarded(report, opts, body)

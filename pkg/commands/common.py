"""Shared plumbing for the command runners: console, options, error mapping."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from rich.console import Console, RenderableType
from rich.markup import escape
from rich.panel import Panel

from algebra.errors import BudgetExceeded, CrossCheckError, HWheelError, IdealError
from tools.budget import deadline
from tools.report import ExitCode, RunReport, emit

log = logging.getLogger(__name__)

console = Console()
status_console = Console(stderr=True)


@dataclass(frozen=True)
class Options:
    as_json: bool = False
    report_path: Optional[str] = None
    timeout_sec: Optional[float] = None


def show(opts: Options, renderable: RenderableType) -> None:
    if not opts.as_json:
        console.print(renderable)


def error(opts: Options, renderable: RenderableType) -> None:
    (status_console if opts.as_json else console).print(renderable)


def status(message: str):
    return status_console.status(f"[bold blue]{message}")


def run_guarded(report: RunReport, opts: Options, body: Callable[[], tuple[str, ExitCode]]) -> int:
    """Run ``body`` under the time budget, map failures to exit codes and emit the report."""
    try:
        with deadline(opts.timeout_sec):
            outcome, code = body()
        report.finish(outcome, code)
    except BudgetExceeded as exc:
        if exc.partial is not None:
            report.verdicts.append(exc.partial)
        report.finish("budget-exceeded", ExitCode.BUDGET, str(exc))
        summary = exc.partial.summary() if hasattr(exc.partial, "summary") else "no partial evidence"
        show(opts, Panel(escape(f"{exc}\npartial: {summary}"), title="Budget Exceeded", border_style="yellow"))
    except HWheelError as exc:
        report.details["violated_conditions"] = [str(c) for c in exc.violated]
        report.finish("error", ExitCode.INAPPLICABLE, str(exc))
        error(opts, f"[bold red]ERROR[/] {escape(str(exc))}")
    except IdealError as exc:
        report.finish("error", ExitCode.INAPPLICABLE, str(exc))
        error(opts, f"[bold red]ERROR[/] {escape(str(exc))}")
    except CrossCheckError as exc:
        log.error("cross-check failed: %s", exc)
        report.finish("cross-check-failed", ExitCode.REFUTED, str(exc))
        error(opts, Panel(escape(str(exc)), title="Cross-check Failed", border_style="red"))
    return emit(report, console, opts.as_json, opts.report_path)

# main.py   top-level CLI router
import argparse
import json
import sys
from typing import Optional, Sequence

from pydantic import ValidationError
from rich.markup import escape

from commands.check_command import CHECK_PROPERTIES, run_check
from commands.common import Options, console
from commands.graph_command import GRAPH_OUTPUTS, run_graph
from commands.ideal_command import IDEAL_OPS, run_ideal
from commands.targets import __doc__ as TARGET_GRAMMAR
from tools.logs import configure_logging
from tools.settings import load_settings, use_settings

EXIT_CODES = "exit codes: 0 verified to bound, 1 refuted with witness, 2 inapplicable or bad input, 3 budget exceeded"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        _usage()
        return 2

    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings(args.config) if args.config else None
        settings = use_settings(settings, threads=args.threads, timeout_sec=args.timeout_sec)
    except (ValidationError, json.JSONDecodeError) as exc:
        console.print(f"[bold red]ERROR[/] bad settings: {escape(str(exc))}")
        return 2
    level = {0: None, 1: "INFO"}.get(args.verbose, "DEBUG")
    configure_logging(level)

    opts = Options(as_json=args.json, report_path=args.report, timeout_sec=settings.timeout_sec)

    # ------------------------------------------------------------------ #
    # ideal arithmetic
    # ------------------------------------------------------------------ #
    if args.cmd == "ideal":
        return run_ideal(args.op, args.inputs, args.exprs, args.t, opts, argv)

    # ------------------------------------------------------------------ #
    # graph ideals
    # ------------------------------------------------------------------ #
    if args.cmd == "graph":
        return run_graph(args.target, args.out, args.t, opts, argv)

    # ------------------------------------------------------------------ #
    # bounded checks
    # ------------------------------------------------------------------ #
    return run_check(args.property, args.target, args.bound, opts, argv)


# ---------------------------------------------------------------------- #
# utilities
# ---------------------------------------------------------------------- #
def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the run report as JSON on stdout")
    common.add_argument("--report", metavar="PATH", help="also write the run report JSON to PATH")
    common.add_argument("--timeout-sec", type=float, help="abort with partial evidence after this many seconds")
    common.add_argument("--threads", type=int, help="worker threads for the closure scan")
    common.add_argument("--config", metavar="PATH", help="alternate config.json")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Monomial ideals of graphs: closure, normality, associated primes and bounded properties.",
        epilog=f"{TARGET_GRAMMAR}\n{EXIT_CODES}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    ideal = sub.add_parser("ideal", parents=[common], help="ideal arithmetic")
    ideal.add_argument("op", choices=IDEAL_OPS)
    ideal.add_argument("--in", dest="inputs", action="append", default=[], metavar="TARGET",
                       help="ideal file (.txt) or family ideal such as K2,2-ni; repeatable")
    ideal.add_argument("--expr", dest="exprs", action="append", default=[], metavar="TEXT",
                       help='inline ideal, e.g. "vars: x y; x^2; x*y"; repeatable')
    ideal.add_argument("--t", type=int, help="exponent for power")

    graph = sub.add_parser("graph", parents=[common], help="NI, DI, J_t and dominating sets",
                           epilog=TARGET_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    graph.add_argument("target", help="Kr,s | Cn | wheel:h,rim,[i,..] | graph.json")
    graph.add_argument("--out", choices=GRAPH_OUTPUTS, default="ni")
    graph.add_argument("--t", type=int, help="t for --out jt")

    check = sub.add_parser("check", parents=[common], help="bounded property checks",
                           epilog=f"{TARGET_GRAMMAR}\n{EXIT_CODES}",
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    check.add_argument("property", choices=CHECK_PROPERTIES)
    check.add_argument("target", help="ideal target, or a criterion .json file for 'criterion'")
    check.add_argument("--bound", type=int, help="normality power bound, scan bound K, or criterion power cap")
    return parser


def _usage() -> None:
    console.print(
        "Usage:\n"
        "  python main.py ideal {sum,product,power,intersect,colon,dual,closure,decompose,relations} "
        "--in TARGET [--in TARGET] [--expr TEXT] [--t N]\n"
        "  python main.py graph TARGET --out {ni,di,jt,domsets} [--t N]\n"
        "  python main.py check PROPERTY TARGET [--bound K]\n"
        "      global flags: --json, --report PATH, --timeout-sec S, --threads N, -v\n"
        "      python main.py --help lists the target grammar",
        highlight=False,
        markup=False,
    )


if __name__ == "__main__":
    sys.exit(main())

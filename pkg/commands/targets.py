"""Command-line targets: graph family shorthand, graph JSON, ideal files.

Frozen grammar::

    Kr,s                  complete bipartite graph K_{r,s}
    Cn                    cycle C_n (n >= 3)
    wheel:h,rim,[i,j,..]  h-wheel on an odd rim with radial vertices i, j, ..
    PATH.json             graph JSON {"n": .., "edges": [[u, v], ..]}

An ideal target is a graph target with a suffix, ``-ni``, ``-di`` or
``-j<t>``, or a ``.txt`` ideal file. Anything else is an error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from algebra.errors import GraphError, ParseError
from algebra.ideal import MonomialIdeal
from algebra.textio import parse_ideal
from graphs import (
    HWheelSpec,
    SimpleGraph,
    build_h_wheel,
    complete_bipartite,
    cycle,
    di_ideal,
    ni_ideal,
    partial_cover_ideal,
    read_graph,
)
from tools.report import InputDigest, digest

FAMILY_HELP = (
    "targets: Kr,s | Cn | wheel:h,rim,[i,j,..] | graph.json; "
    "ideal targets add -ni, -di or -j<t> (e.g. K2,2-ni) or name a .txt ideal file"
)

_BIPARTITE = re.compile(r"K(\d+),(\d+)")
_CYCLE = re.compile(r"C(\d+)")
_WHEEL = re.compile(r"wheel:(\d+),(\d+),\[([\d,\s]*)\]")
_SUFFIX = re.compile(r"(.+)-(ni|di|j(\d+))")


@dataclass(frozen=True)
class GraphTarget:
    graph: SimpleGraph
    source: InputDigest
    wheel: Optional[HWheelSpec] = None


@dataclass(frozen=True)
class IdealTarget:
    ideal: MonomialIdeal
    source: InputDigest
    graph: Optional[GraphTarget] = None


def parse_wheel(text: str) -> HWheelSpec:
    m = _WHEEL.fullmatch(text.replace(" ", ""))
    if m is None:
        raise GraphError(f"cannot read wheel shorthand {text!r}; expected wheel:h,rim,[i,j,..]")
    radial = tuple(int(x) for x in m.group(3).split(",") if x)
    return HWheelSpec(h=int(m.group(1)), rim_length=int(m.group(2)), radial=radial)


def graph_target(text: str) -> GraphTarget:
    if text.endswith(".json"):
        graph = read_graph(text)
        return GraphTarget(graph, digest("file", text, Path(text).read_bytes()))

    source = digest("family", text)
    if m := _BIPARTITE.fullmatch(text):
        return GraphTarget(complete_bipartite(int(m.group(1)), int(m.group(2))), source)
    if m := _CYCLE.fullmatch(text):
        return GraphTarget(cycle(int(m.group(1))), source)
    if text.startswith("wheel:"):
        spec = parse_wheel(text)
        return GraphTarget(build_h_wheel(spec), source, spec)
    raise GraphError(f"unknown graph family {text!r}; {FAMILY_HELP}")


def ideal_target(text: str) -> IdealTarget:
    if text.endswith(".txt"):
        path = Path(text)
        if not path.is_file():
            raise ParseError(f"ideal file {text} not found", 1, 1)
        raw = path.read_text(encoding="utf-8")
        return IdealTarget(parse_ideal(raw), digest("file", text, raw))

    m = _SUFFIX.fullmatch(text)
    if m is None:
        raise GraphError(f"{text!r} names no ideal; {FAMILY_HELP}")
    g = graph_target(m.group(1))
    kind = m.group(2)
    if kind == "ni":
        I = ni_ideal(g.graph)
    elif kind == "di":
        I = di_ideal(g.graph)
    else:
        I = partial_cover_ideal(g.graph, int(m.group(3)))
    return IdealTarget(I, digest("family", text), g)


def inline_ideal(expr: str) -> IdealTarget:
    """``--expr "vars: x y; x^2; x*y"``"""
    return IdealTarget(parse_ideal(expr), digest("inline", expr))

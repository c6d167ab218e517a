"""Plain-text ideal format.

    # comment
    vars: x1 x2 x3
    x1^2*x3
    x2
    1

One monomial per line after the ``vars:`` header; ``;`` may replace newlines
for inline specs on the command line.
"""

from __future__ import annotations

import re
from pathlib import Path

from algebra.errors import ParseError
from algebra.ideal import MonomialIdeal, minimalize
from algebra.monomial import Monomial

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([0-9]+))?\s*")


def _parse_header(body: str, lineno: int, offset: int) -> list[str]:
    names = body.split()
    if not names:
        raise ParseError("'vars:' header lists no variables", lineno, offset + 1)
    seen: set[str] = set()
    col = offset
    for name in names:
        col = body.index(name, col - offset) + offset
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", lineno, col + 1)
        if name in seen:
            raise ParseError(f"duplicate variable {name!r}", lineno, col + 1)
        seen.add(name)
        col += len(name)
    return names


def _parse_monomial(text: str, names: list[str], lineno: int, offset: int) -> Monomial:
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    if text.strip() == "1":
        return Monomial(tuple(exps))
    pos = 0
    for chunk in text.split("*"):
        m = _FACTOR.fullmatch(chunk)
        if m is None:
            stripped = len(chunk) - len(chunk.lstrip())
            raise ParseError(f"cannot read factor {chunk.strip()!r}", lineno, offset + pos + stripped + 1)
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", lineno, offset + pos + m.start(1) + 1)
        exps[index[name]] += int(power) if power is not None else 1
        pos += len(chunk) + 1
    return Monomial(tuple(exps))


def parse_ideal(text: str) -> MonomialIdeal:
    names: list[str] | None = None
    monomials: list[Monomial] = []
    # comments end at the physical line; a ";" inside one is not a separator
    segments = (part for raw in text.splitlines() for part in raw.split("#", 1)[0].split(";"))
    for lineno, line in enumerate(segments, start=1):
        if not line.strip():
            continue
        offset = len(line) - len(line.lstrip())
        stripped = line.strip()
        if stripped.startswith("vars:"):
            if names is not None:
                raise ParseError("second 'vars:' header", lineno, offset + 1)
            body_offset = offset + len("vars:")
            names = _parse_header(line[body_offset:], lineno, body_offset)
            continue
        if names is None:
            raise ParseError("monomial before the 'vars:' header", lineno, offset + 1)
        monomials.append(_parse_monomial(stripped, names, lineno, offset))
    if names is None:
        raise ParseError("missing 'vars:' header", 1, 1)
    return minimalize(monomials, len(names), names)


def format_ideal(I: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(I.variable_names)]
    lines.extend(m.render(I.variable_names) for m in I.generators)
    return "\n".join(lines) + "\n"


def read_ideal(path: str | Path) -> MonomialIdeal:
    with open(path, "r", encoding="utf-8") as f:
        return parse_ideal(f.read())


def write_ideal(I: MonomialIdeal, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_ideal(I))

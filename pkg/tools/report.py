"""Run report: the JSON document every command emits, plus exit codes."""

from __future__ import annotations

import hashlib
import json
import time
from contextlib import contextmanager
from enum import IntEnum
from pathlib import Path
from typing import Iterator, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console

from checkers.verdicts import CriterionReport, PropertyVerdict
from closure.normality import NormalityReport
from decomposition.primes import AssProfile

SCHEMA_VERSION = 1


class ExitCode(IntEnum):
    VERIFIED = 0
    REFUTED = 1
    INAPPLICABLE = 2
    BUDGET = 3


class InputDigest(BaseModel):
    kind: Literal["family", "file", "inline"]
    value: str
    sha256: str


class PhaseTiming(BaseModel):
    name: str
    seconds: float


Verdict = Union[NormalityReport, AssProfile, PropertyVerdict, CriterionReport]


class RunReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: list[str]
    inputs: list[InputDigest] = Field(default_factory=list)
    bounds: dict[str, Optional[int]] = Field(default_factory=dict)
    result: Optional[str] = None
    details: dict[str, Union[bool, int, str, list[str], None]] = Field(default_factory=dict)
    verdicts: list[Verdict] = Field(default_factory=list)
    timings: list[PhaseTiming] = Field(default_factory=list)
    outcome: str = "ok"
    exit_code: int = ExitCode.VERIFIED
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2)

    def finish(self, outcome: str, code: ExitCode, error: str | None = None) -> "RunReport":
        self.outcome = outcome
        self.exit_code = int(code)
        self.error = error
        return self

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings.append(PhaseTiming(name=name, seconds=round(time.perf_counter() - start, 6)))


def digest(kind: Literal["family", "file", "inline"], value: str, content: str | bytes | None = None) -> InputDigest:
    data = value if content is None else content
    if isinstance(data, str):
        data = data.encode("utf-8")
    return InputDigest(kind=kind, value=value, sha256=hashlib.sha256(data).hexdigest())


def emit(report: RunReport, console: Console, as_json: bool = False, path: str | Path | None = None) -> int:
    """Write the report file and/or JSON to stdout; returns the exit code."""
    text = report.to_json()
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    if as_json:
        console.out(text, highlight=False)
    return report.exit_code

"""Cooperative time budget.

Long loops call ``checkpoint()``; inside a ``deadline(seconds)`` block an
expired budget raises ``BudgetExceeded``. Outside any block it is a no-op.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from algebra.errors import BudgetExceeded

_deadline: ContextVar[Optional[float]] = ContextVar("deadline", default=None)


@contextmanager
def deadline(seconds: float | None) -> Iterator[None]:
    if seconds is None:
        yield
        return
    token = _deadline.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def checkpoint() -> None:
    limit = _deadline.get()
    if limit is not None and time.monotonic() > limit:
        raise BudgetExceeded()

"""Degree cap for intermediate polynomials.

The library runs uncapped by default.  The CLI installs the cap from
``SKEWLUROTH_MAX_DEGREE`` for the duration of a command.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import DegreeCapExceeded

ENV_VAR = "SKEWLUROTH_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 64

_cap: ContextVar[int | None] = ContextVar("skewluroth_degree_cap", default=None)


def env_max_degree() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DEGREE
    value = int(raw)
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be a positive integer")
    return value


@contextmanager
def degree_cap(limit: int | None):
    token = _cap.set(limit)
    try:
        yield
    finally:
        _cap.reset(token)


def check_degree(deg: int) -> None:
    cap = _cap.get()
    if cap is not None and deg > cap:
        raise DegreeCapExceeded(f"intermediate degree {deg} exceeds cap {cap}")

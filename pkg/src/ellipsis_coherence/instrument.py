"""Records which syntactic reconstruction operations ran, and under which
inference family.  Used to check that Coherent Situation inference never
triggers copying."""
from __future__ import annotations

import contextlib
from contextvars import ContextVar

_family: ContextVar[str | None] = ContextVar("family", default=None)
_log: ContextVar[list | None] = ContextVar("reconstruction_log", default=None)


def note_reconstruction(op: str) -> None:
    log = _log.get()
    if log is not None:
        log.append((op, _family.get()))


@contextlib.contextmanager
def inference_family(family: str):
    token = _family.set(family)
    try:
        yield
    finally:
        _family.reset(token)


@contextlib.contextmanager
def recording():
    """Collect ``(operation, family)`` pairs for everything run inside."""
    log: list = []
    token = _log.set(log)
    try:
        yield log
    finally:
        _log.reset(token)

"""Exception types shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class StructureError(ValueError):
    """Malformed input: indices out of range, ill-typed tables, bad JSON."""


class Refused(ValueError):
    """A precondition of an operation does not hold.

    ``witness`` names the offending element(s) so callers can report it.
    """

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check, with the first counterexample on failure."""

    ok: bool
    witness: Any = None
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.ok

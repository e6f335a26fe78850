"""Deterministic check reports: JSON with a fixed field order, or text lines
``CHECK <id> PASS|FAIL [witness]``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .errors import Verdict
from .serialize import encode_label


def _plain(x: Any) -> Any:
    """Witnesses made JSON-safe, deterministically."""
    if isinstance(x, Verdict):
        return {"ok": x.ok, "witness": _plain(x.witness), "detail": x.detail}
    if isinstance(x, dict) and all(isinstance(k, str) for k in x):
        return {k: _plain(x[k]) for k in sorted(x)}
    if isinstance(x, dict):
        return [[_plain(k), _plain(v)] for k, v in sorted(x.items(), key=lambda kv: repr(kv[0]))]
    if hasattr(x, "__dataclass_fields__"):
        return {k: _plain(getattr(x, k)) for k in x.__dataclass_fields__}
    return encode_label(x)


@dataclass
class Check:
    id: str
    ok: bool
    witness: Any = None
    detail: str = ""

    @classmethod
    def of(cls, id: str, v: Verdict | bool, detail: str = "") -> "Check":
        if isinstance(v, Verdict):
            return cls(id, v.ok, None if v.ok else v.witness, detail or v.detail)
        return cls(id, bool(v), None, detail)

    def to_dict(self) -> dict:
        return {"id": self.id, "ok": self.ok, "witness": _plain(self.witness), "detail": self.detail}

    def line(self) -> str:
        out = f"CHECK {self.id} {'PASS' if self.ok else 'FAIL'}"
        if not self.ok and self.witness is not None:
            out += " " + json.dumps(_plain(self.witness), ensure_ascii=False, separators=(",", ":"))
        return out


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def add(self, id: str, v: Verdict | bool, detail: str = "") -> Check:
        c = Check.of(id, v, detail)
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": "report",
            "tool": "cptinv",
            "version": __version__,
            "command": self.command,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "stats": {k: _plain(v) for k, v in self.stats.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=1)

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines += [f"STAT {k} {json.dumps(_plain(v), ensure_ascii=False)}" for k, v in self.stats.items()]
        return "\n".join(lines)

"""Verdicts and run reports with byte-deterministic serialization."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Verdict:
    name: str
    ok: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def passed(name: str, detail: str = "") -> Verdict:
    return Verdict(name, True, None, detail)


def failed(name: str, witness: Any = None, detail: str = "") -> Verdict:
    return Verdict(name, False, witness, detail)


@dataclass
class RunReport:
    pipeline: str
    input_digest: str = ""
    verdicts: list[Verdict] = field(default_factory=list)
    sizes: dict[str, Any] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)
    timing: dict[str, float] | None = None

    def add(self, v: Verdict) -> Verdict:
        self.verdicts.append(v)
        return v

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "pipeline": self.pipeline,
            "input_digest": self.input_digest,
            "verdicts": [v.to_json() for v in self.verdicts],
            "sizes": self.sizes,
            "ok": self.ok,
        }
        if self.data:
            out["data"] = self.data
        if self.timing is not None:
            out["timing"] = self.timing
        return out


def digest(obj: Any) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def emit_report(r: RunReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(r.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"pipeline: {r.pipeline}"]
    if r.input_digest:
        lines.append(f"input: {r.input_digest}")
    for k in sorted(r.sizes):
        lines.append(f"{k}: {r.sizes[k]}")
    for k in sorted(r.data):
        if isinstance(r.data[k], (bool, int, str)):
            lines.append(f"{k}: {json.dumps(r.data[k])}")
    for v in r.verdicts:
        line = f"[{'PASS' if v.ok else 'FAIL'}] {v.name}"
        if v.detail:
            line += f" - {v.detail}"
        if v.witness is not None:
            line += f" (witness: {json.dumps(v.witness, sort_keys=True, ensure_ascii=False)})"
        lines.append(line)
    if r.timing is not None:
        for k in sorted(r.timing):
            lines.append(f"time {k}: {r.timing[k]:.3f}s")
    lines.append("ok" if r.ok else "FAILED")
    return ("\n".join(lines) + "\n").encode()

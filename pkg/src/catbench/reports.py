"""Certificates and report emission.

A Certificate is a named list of individually named pass/fail checks; every
validator in the package returns one, so a failed law is always reported by
name rather than as a bare boolean.  Reports aggregate certificates for the
command-line interface; the structured format is deterministic (sorted keys,
no timing data) so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"  [{mark}] {self.name}{suffix}"


@dataclass
class Certificate:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def require(self) -> "Certificate":
        if not self.ok:
            names = ", ".join(c.name for c in self.failures())
            raise ValueError(f"{self.title}: failed checks: {names}")
        return self

    def lines(self) -> list:
        head = f"{self.title}: {'PASS' if self.ok else 'FAIL'}"
        return [head] + [c.line() for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


@dataclass
class Report:
    command: str
    certificates: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, cert: Certificate) -> None:
        self.certificates.append(cert)

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.certificates)

    def emit(self, fmt: str = "plain") -> str:
        if fmt == "structured":
            payload = {
                "command": self.command,
                "ok": self.ok,
                "certificates": [c.to_dict() for c in self.certificates],
                "notes": list(self.notes),
            }
            return json.dumps(payload, indent=2, sort_keys=True)
        out = []
        for cert in self.certificates:
            out.extend(cert.lines())
        out.extend(self.notes)
        out.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(out)

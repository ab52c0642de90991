"""Probe reports and their text / JSON serializations."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field


class Verdict(enum.Enum):
    WITNESS = "Witness"
    COUNTEREXAMPLE = "CounterexampleShown"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass
class ProbeReport:
    name: str
    verdict: Verdict
    witness: list = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def witness_text(self) -> list[str]:
        return [str(w) for w in self.witness]

    def to_dict(self) -> dict:
        # exact values travel as strings so nothing is rounded
        return {
            "probe": self.name,
            "verdict": self.verdict.value,
            "witness": self.witness_text(),
            "trace": list(self.trace),
        }

    def to_text(self) -> str:
        lines = [f"probe: {self.name}", f"verdict: {self.verdict.value}"]
        lines += [f"witness: {w}" for w in self.witness_text()]
        lines += [f"trace: {t}" for t in self.trace]
        return "\n".join(lines) + "\n"


def format_report(report: ProbeReport, fmt: str = "text") -> str:
    if fmt == "text":
        return report.to_text()
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

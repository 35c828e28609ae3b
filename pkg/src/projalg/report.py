"""Structured pass/fail reports with deterministic JSON serialization.

Reports collect named numeric checks (max residual vs. tolerance). The JSON
form is canonical: keys sorted, floats printed with 17 significant digits
(round-trip safe for doubles), no whitespace variation.  Wall-clock timing is
kept on the object but deliberately left out of the serialization so that
identical runs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    max_residual: float
    tolerance: float
    passed: bool
    detail: str | None = None

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_seconds: float | None = None

    def add(self, name: str, max_residual: float, tolerance: float,
            detail: str | None = None) -> CheckResult:
        res = CheckResult(name, float(max_residual), float(tolerance),
                          bool(float(max_residual) < float(tolerance)), detail)
        self.checks.append(res)
        return res

    def extend(self, other: "VerificationReport", prefix: str | None = None) -> None:
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(CheckResult(name, c.max_residual, c.tolerance,
                                           c.passed, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return dumps_canonical(self.to_dict())

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}: residual {c.max_residual:.3e}"
                         f" (tol {c.tolerance:.1e})")
        lines.append(f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return lines


def dumps_canonical(obj) -> str:
    """Deterministic JSON text for reports and CLI outputs."""
    out: list[str] = []
    _write(obj, out)
    return "".join(out)


def _write(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float in report: {obj!r}")
        out.append(format(obj, ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings, got {key!r}")
            if i:
                out.append(",")
            out.append(json.dumps(key))
            out.append(":")
            _write(obj[key], out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} deterministically")

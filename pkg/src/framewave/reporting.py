"""Deterministic check reports and their CSV/JSON serialization.

A report is a named list of check results plus metadata.  Serialization is
byte-reproducible for a fixed scenario and seed: numbers are written with 17
significant digits (lossless for binary doubles), keys are emitted in sorted
order, and the only non-deterministic content (wall time) lives in a separate
``timing`` block that CSV output omits and JSON output can drop.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

CSV_HEADER = "check_name,status,metric,value,tolerance"

PASS = "pass"
FAIL = "fail"
INFO = "info"


def format_number(value) -> str:
    return f"{float(value):.17g}"


@dataclass
class CheckResult:
    """One verified quantity: value against tolerance, plus what it tests."""

    name: str
    status: str
    metric: str
    value: float
    tolerance: float | None = None
    detail: str = ""

    @classmethod
    def compare(cls, name, metric, value, tolerance, detail="", larger_is_better=False):
        value = float(value)
        ok = value >= tolerance if larger_is_better else value <= tolerance
        return cls(name, PASS if ok else FAIL, metric, value, float(tolerance), detail)

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass
class Report:
    """Results of one scenario or verification suite."""

    name: str
    checks: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)
    # Raw arrays backing figures; never serialized.
    curves: dict = field(default_factory=dict, repr=False)

    @property
    def failed(self) -> bool:
        return any(check.failed for check in self.checks)

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for check in self.checks:
            tolerance = "" if check.tolerance is None else format_number(check.tolerance)
            lines.append(
                f"{check.name},{check.status},{check.metric},"
                f"{format_number(check.value)},{tolerance}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self, include_timing: bool = True) -> str:
        document = {
            "name": self.name,
            "checks": [
                {
                    "name": check.name,
                    "status": check.status,
                    "metric": check.metric,
                    "value": check.value,
                    "tolerance": check.tolerance,
                    "detail": check.detail,
                }
                for check in self.checks
            ],
            "metadata": self.metadata,
        }
        if include_timing:
            document["timing"] = self.timing
        return dumps(document) + "\n"


def _json_escape(text: str) -> str:
    out = []
    for ch in text:
        if ch in '"\\':
            out.append("\\" + ch)
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def dumps(value, indent: int = 0) -> str:
    """Minimal JSON writer with 17-significant-digit floats and sorted keys."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        return "null"
    if isinstance(value, bool) or isinstance(value, np.bool_):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        number = float(value)
        if not np.isfinite(number):
            return f'"{number!r}"'
        return format_number(number)
    if isinstance(value, str):
        return f'"{_json_escape(value)}"'
    if isinstance(value, dict):
        if not value:
            return "{}"
        parts = [
            f'{inner}"{_json_escape(str(key))}": {dumps(value[key], indent + 1)}'
            for key in sorted(value)
        ]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not len(value):
            return "[]"
        parts = [f"{inner}{dumps(item, indent + 1)}" for item in value]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(value).__name__}")

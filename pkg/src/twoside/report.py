"""Outcome records shared by every checker module."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .exact_core import Bracket, rat_to_str

PASS = "PASS"
FAIL = "FAIL"
EXPECTED_FAIL = "EXPECTED-FAIL"
WARN = "WARN"


def render_value(v: Any) -> str:
    """Stable string form for report fields: rationals as "p/q", never floats."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return rat_to_str(v)
    if isinstance(v, Bracket):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(render_value(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class IdentityReport:
    """One verified (lhs, rhs) comparison.

    ``witness`` is present exactly when the comparison failed; for numeric
    identity checks it is the parameter point at which the two sides differ.
    """

    suite: str
    params: tuple
    lhs: Any
    rhs: Any
    passed: bool
    witness: tuple | None = None
    detail: Mapping[str, Any] | None = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("witness must be absent on a passing report")
        if not self.passed and self.witness is None:
            raise ValueError("failing report requires a witness")

    def row(self, case: str | None = None, expected_fail: bool = False) -> dict:
        """Flatten into the CLI/JSON row shape."""
        if self.passed:
            status = FAIL if expected_fail else PASS
        else:
            status = EXPECTED_FAIL if expected_fail else FAIL
        row = {
            "suite": self.suite,
            "case": case if case is not None else render_value(self.params),
            "params": [render_value(p) for p in self.params],
            "lhs": render_value(self.lhs),
            "rhs": render_value(self.rhs),
            "status": status,
            "witness": (None if self.witness is None
                        else [render_value(w) for w in self.witness]),
        }
        for key, value in (("lhs", self.lhs), ("rhs", self.rhs)):
            if isinstance(value, Bracket):
                row[f"{key}_enclosure"] = value.to_json()
        if self.detail:
            row["detail"] = {k: render_value(v) for k, v in self.detail.items()}
        return row


def report_equal(suite: str, params: Sequence, lhs, rhs,
                 witness: tuple | None = None,
                 detail: Mapping[str, Any] | None = None) -> IdentityReport:
    """Report exact equality of two already-computed sides."""
    passed = lhs == rhs
    return IdentityReport(suite, tuple(params), lhs, rhs, passed,
                          None if passed else (witness or tuple(params)),
                          detail)

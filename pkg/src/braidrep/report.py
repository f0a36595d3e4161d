"""Uniform pass/fail reporting for the structural check suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one exact check.

    ``witness`` carries whatever pinpoints a failure (typically a
    (row, column, difference-string) triple); it stays None on success.
    """

    check: str
    params: dict = field(default_factory=dict)
    passed: bool = True
    witness: object = None

    def to_json(self):
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "witness": self.witness,
        }


def all_passed(reports):
    return all(r.passed for r in reports)

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    label: str
    passed: bool
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"label": self.label, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class CheckReport:
    """Outcome of one check: a list of labelled verdicts.

    A failing verdict carries a witness so the failure can be reproduced.
    ``experimental`` marks checks of conjectured (unproved) statements.
    """

    name: str
    params: dict[str, Any]
    verdicts: list[Verdict] = field(default_factory=list)
    experimental: bool = False

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self):
        return self.passed

    def add(self, label: str, passed: bool, **witness) -> None:
        self.verdicts.append(Verdict(label, bool(passed), None if passed else witness or None))

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "experimental": self.experimental,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

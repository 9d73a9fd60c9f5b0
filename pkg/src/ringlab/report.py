"""Structured results of exhaustive checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    passed: bool
    witness: tuple | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = [int(w) if not isinstance(w, (tuple, list)) else list(w) for w in self.witness]
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    """Outcome of one check suite.

    A report whose hypotheses do not hold for the ring is *skipped*
    (``applicable=False``); that is never counted as a pass or a failure.
    ``vacuous`` marks applicable reports whose conditional premise was false.
    """

    name: str
    items: list = field(default_factory=list)
    applicable: bool = True
    reason: str = ""
    vacuous: bool = False

    @property
    def passed(self) -> bool:
        return self.applicable and all(item.passed for item in self.items)

    @property
    def skipped(self) -> bool:
        return not self.applicable

    @property
    def status(self) -> str:
        if not self.applicable:
            return "skipped"
        return "pass" if self.passed else "fail"

    def add(self, name, passed, witness=None, note="") -> CheckItem:
        item = CheckItem(name, bool(passed), None if witness is None else tuple(witness), note)
        self.items.append(item)
        return item

    def item(self, name) -> CheckItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def failures(self) -> list:
        return [it for it in self.items if not it.passed]

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.vacuous:
            d["vacuous"] = True
        if self.reason:
            d["reason"] = self.reason
        d["items"] = [it.to_dict() for it in self.items]
        return d

    def summary(self) -> str:
        lines = [f"{self.name}: {self.status.upper()}" + (" (vacuous)" if self.vacuous else "")]
        if self.reason:
            lines[0] += f" - {self.reason}"
        for it in self.items:
            mark = "ok  " if it.passed else "FAIL"
            extra = f" witness={it.witness}" if it.witness is not None else ""
            note = f" ({it.note})" if it.note else ""
            lines.append(f"  [{mark}] {it.name}{extra}{note}")
        return "\n".join(lines)


def skipped(name: str, reason: str) -> CheckReport:
    return CheckReport(name, applicable=False, reason=reason)

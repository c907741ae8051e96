"""Pass/fail reports for exhaustive identity sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class VerificationError(AssertionError):
    """Raised in strict mode when a must-pass identity fails."""


@dataclass
class Entry:
    name: str
    passed: bool
    witness: tuple | None = None
    checked: int = 0
    informational: bool = False
    note: str = ""
    kinds: str = ""  # one letter per witness slot, e.g. "mmg" or "bb"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": None if self.witness is None else list(self.witness),
            "checked": self.checked,
            "informational": self.informational,
            "note": self.note,
            "kinds": self.kinds,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Entry":
        w = d.get("witness")
        return cls(
            d["name"],
            bool(d["passed"]),
            None if w is None else tuple(w),
            int(d.get("checked", 0)),
            bool(d.get("informational", False)),
            d.get("note", ""),
            d.get("kinds", ""),
        )


@dataclass
class VerificationReport:
    title: str = ""
    entries: list[Entry] = field(default_factory=list)

    def add(self, name, passed, witness=None, checked=1, informational=False, note="", kinds=""):
        self.entries.append(Entry(name, bool(passed), witness, checked, informational, note, kinds))
        return self

    def sweep(self, name: str, cases: Iterable[tuple], informational=False, note="", kinds=""):
        """Record the first failing tuple of ``cases``.

        ``cases`` yields ``(tuple, ok)`` pairs in lexicographic order.
        """
        witness = None
        n = 0
        for args, ok in cases:
            n += 1
            if not ok and witness is None:
                witness = tuple(args)
        return self.add(name, witness is None, witness, n, informational, note, kinds)

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for e in other.entries:
            self.entries.append(
                Entry(prefix + e.name, e.passed, e.witness, e.checked, e.informational, e.note,
                      e.kinds)
            )
        return self

    @property
    def ok(self) -> bool:
        """True when every mandatory (non-informational) entry passed."""
        return all(e.passed for e in self.entries if not e.informational)

    def __getitem__(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed and not e.informational]

    def first_failure(self) -> Entry | None:
        fails = self.failures()
        return fails[0] if fails else None

    def assert_ok(self) -> "VerificationReport":
        bad = self.failures()
        if bad:
            lines = ", ".join(f"{e.name} at {e.witness}" for e in bad)
            raise VerificationError(f"{self.title or 'verification'} failed: {lines}")
        return self

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d.get("title", ""), [Entry.from_dict(e) for e in d["entries"]])

    def format(self, namer=None) -> str:
        lines = [self.title] if self.title else []
        for e in self.entries:
            mark = "PASS" if e.passed else ("INFO" if e.informational else "FAIL")
            line = f"  [{mark}] {e.name} ({e.checked} checked)"
            if e.witness is not None:
                w = namer(e) if namer else e.witness
                line += f" witness={w}"
            if e.note:
                line += f" -- {e.note}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()

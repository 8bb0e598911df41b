"""Check reports: verdicts plus a bounded, sorted list of witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

DEFAULT_WITNESS_CAP = 16


@dataclass(frozen=True)
class Witness:
    identity: str
    indices: tuple[int, ...]
    lhs: Any
    rhs: Any

    def sort_key(self):
        return (self.identity, self.indices)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive identity sweep.

    ``violations`` counts every failing instance; ``witnesses`` keeps at most
    ``witness_cap`` of them, sorted by (identity, indices).
    """

    name: str
    passed: bool
    checked: int = 0
    violations: int = 0
    witnesses: tuple[Witness, ...] = ()
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def combine(cls, name: str, reports: Iterable[CheckReport], witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
        reports = list(reports)
        wits = sorted((w for r in reports for w in r.witnesses), key=Witness.sort_key)
        return cls(
            name=name,
            passed=all(r.passed for r in reports),
            checked=sum(r.checked for r in reports),
            violations=sum(r.violations for r in reports),
            witnesses=tuple(wits[:witness_cap]),
            notes=tuple(n for r in reports for n in r.notes),
        )


@dataclass
class Collector:
    """Accumulates comparisons for one report."""

    name: str
    witness_cap: int = DEFAULT_WITNESS_CAP
    checked: int = 0
    violations: int = 0
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def compare(self, identity: str, indices: tuple[int, ...], lhs, rhs) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        self.fail(identity, indices, lhs, rhs)
        return False

    def fail(self, identity: str, indices: tuple[int, ...], lhs=None, rhs=None) -> None:
        self.violations += 1
        self.witnesses.append(Witness(identity, tuple(indices), lhs, rhs))
        if len(self.witnesses) > 4 * self.witness_cap:
            self._trim()

    def _trim(self) -> None:
        self.witnesses.sort(key=Witness.sort_key)
        del self.witnesses[self.witness_cap :]

    def report(self) -> CheckReport:
        self._trim()
        return CheckReport(
            name=self.name,
            passed=self.violations == 0,
            checked=self.checked,
            violations=self.violations,
            witnesses=tuple(self.witnesses),
            notes=tuple(self.notes),
        )

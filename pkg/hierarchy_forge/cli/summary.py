from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from hierarchy_forge.cli.serialization import document
from hierarchy_forge.verification import CheckStatus

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.verification import CheckResult, VerificationOutcome


@dataclass(frozen=True)
class VerificationSummary:
    """
    Machine-readable result of one ``verify`` run. The wall time is only part
    of the document when asked for, so repeated runs produce identical JSON.
    """

    suite: str
    results: tuple[CheckResult, ...]
    wall_time: float | None = None

    @classmethod
    def from_outcome(cls, outcome: VerificationOutcome, wall_time: float | None = None) -> VerificationSummary:
        return cls(suite=outcome.suite.value, results=outcome.results, wall_time=wall_time)

    @property
    def passed(self) -> bool:
        return not any(result.failed for result in self.results)

    def counts(self) -> dict[str, int]:
        counter = Counter(result.status for result in self.results)
        return {status.value: counter.get(status, 0) for status in CheckStatus}

    def with_status(self, status: CheckStatus) -> list[CheckResult]:
        return [result for result in self.results if result.status is status]

    def to_data(self, *, include_timing: bool = False) -> dict[str, Any]:
        extra: dict[str, Any] = {"suite": self.suite, "passed": self.passed, "counts": self.counts()}
        if include_timing and self.wall_time is not None:
            extra["wall_time"] = round(self.wall_time, 3)
        checks = [
            {"suite": r.suite, "name": r.name, "status": r.status.value, "residual": r.residual}
            for r in self.results
        ]
        return document("verification", checks, **extra)

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.hamiltonian import IdentityCheck


class CheckStatus(str, Enum):
    """
    ``REPORTED`` marks a known discrepancy with the published formulas: it is
    listed in the summary but never counts as a failure.
    """

    PASS = "pass"
    FAIL = "fail"
    REPORTED = "reported"


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    status: CheckStatus
    residual: str = ""

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL

    @classmethod
    def from_outcome(
        cls,
        suite: str,
        name: str,
        *,
        holds: bool,
        asserted: bool = True,
        residual: str = "",
    ) -> CheckResult:
        if holds:
            status = CheckStatus.PASS
        elif asserted:
            status = CheckStatus.FAIL
        else:
            status = CheckStatus.REPORTED
        return cls(suite=suite, name=name, status=status, residual="" if holds else residual)

    @classmethod
    def from_identity(cls, suite: str, check: IdentityCheck) -> CheckResult:
        return cls.from_outcome(
            suite,
            check.name,
            holds=check.holds,
            asserted=check.asserted,
            residual=check.detail,
        )

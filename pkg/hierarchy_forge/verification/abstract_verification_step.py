from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

from hierarchy_forge.exceptions import AlreadyProcessedError

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.verification.types import CheckResult
    from hierarchy_forge.verification.verification_log import VerificationLog


class AbstractVerificationStep(ABC):
    """
    A unit of a verification suite that produces a list of check results.
    Suites are sequences of steps, so new checks plug in without touching
    the runner.

    Each instance of a step is designed to be used for a single
    verification run, keeping any state it builds isolated to that run.
    """

    suite: str = "custom"

    def __init__(self) -> None:
        self._already_processed = False

    @property
    def origin(self) -> str:
        return self.__class__.__name__

    def verify(self, log: VerificationLog | None = None) -> list[CheckResult]:
        if self._already_processed:
            msg = (
                "This Step instance has already run its checks. "
                "Each Step instance is designed for a single "
                "verification run. Please create a new instance "
                "of the Step to run the checks again."
            )
            raise AlreadyProcessedError(msg)

        self._already_processed = True
        results = self._verify()
        if log is not None:
            log.record(origin=self.origin, description=self.describe(), results=results)
        return results

    def describe(self) -> str:
        return self.origin

    @abstractmethod
    def _verify(self) -> list[CheckResult]:
        """Run the checks of this step."""
        raise NotImplementedError  # pragma: no cover

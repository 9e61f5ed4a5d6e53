from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from frozendict import frozendict
from loguru import logger

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.verification.types import CheckResult


@dataclass(frozen=True)
class LogItem:
    """Status counts of the checks one step produced."""

    origin: str
    description: str
    counts: frozendict[str, int]

    @property
    def checks(self) -> int:
        return sum(self.counts.values())


class VerificationLog:
    """Records every step of a verification run, in run order."""

    def __init__(self) -> None:
        self._items: list[LogItem] = []

    def record(
        self,
        *,
        origin: str,
        description: str,
        results: Iterable[CheckResult],
    ) -> LogItem:
        counts = Counter(result.status.value for result in results)
        item = LogItem(origin, description, frozendict(sorted(counts.items())))
        logger.trace("{} ({}): {}", description, origin, dict(item.counts))
        self._items.append(item)
        return item

    def get_items(self) -> tuple[LogItem, ...]:
        return tuple(self._items)

    def totals(self) -> dict[str, int]:
        total: Counter[str] = Counter()
        for item in self._items:
            total.update(item.counts)
        return dict(sorted(total.items()))

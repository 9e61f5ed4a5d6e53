"""
Truncated Laurent series in the spectral parameter.

A series stores its known coefficients by exponent of lambda. A truncated series
knows every coefficient down to ``lambda^(-truncation_depth)``; coefficients
below that are unknown, not zero. Products narrow the window so an unknown
coefficient never leaks into a coefficient reported as known.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterator, Mapping

from frozendict import frozendict

from hierarchy_forge.diffpoly import DiffPoly, d_x, format_text, is_semantically_zero
from hierarchy_forge.diffpoly.polynomial import as_diffpoly
from hierarchy_forge.exceptions import WindowExceeded

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import SemanticComparer
    from hierarchy_forge.diffpoly.polynomial import Scalar


def _clean(
    terms: Mapping[int, DiffPoly],
    truncation_depth: int | None,
) -> frozendict[int, DiffPoly]:
    return frozendict(
        {
            exponent: value
            for exponent, value in terms.items()
            if not value.is_zero()
            and (truncation_depth is None or exponent >= -truncation_depth)
        },
    )


@dataclass(frozen=True)
class LaurentSeries:
    terms: frozendict[int, DiffPoly]
    truncation_depth: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean(self.terms, self.truncation_depth))

    @classmethod
    def build(
        cls,
        terms: Mapping[int, DiffPoly | Scalar] | None = None,
        truncation_depth: int | None = None,
    ) -> LaurentSeries:
        converted = {k: as_diffpoly(v) for k, v in (terms or {}).items()}
        return cls(frozendict(converted), truncation_depth)

    @classmethod
    def zero(cls) -> LaurentSeries:
        return cls(frozendict())

    @classmethod
    def constant(cls, value: DiffPoly | Scalar) -> LaurentSeries:
        return cls.monomial(value, 0)

    @classmethod
    def monomial(cls, value: DiffPoly | Scalar, exponent: int) -> LaurentSeries:
        return cls(frozendict({exponent: as_diffpoly(value)}))

    @property
    def is_exact(self) -> bool:
        return self.truncation_depth is None

    @property
    def lowest_known(self) -> int | None:
        if self.truncation_depth is None:
            return None
        return -self.truncation_depth

    @property
    def top(self) -> int | None:
        """Highest exponent that may carry a nonzero coefficient, known or not."""
        candidates = list(self.terms)
        if self.truncation_depth is not None:
            candidates.append(-self.truncation_depth - 1)
        return max(candidates) if candidates else None

    def knows(self, exponent: int) -> bool:
        return self.truncation_depth is None or exponent >= -self.truncation_depth

    def coefficient(self, exponent: int) -> DiffPoly:
        if not self.knows(exponent):
            msg = (
                f"The coefficient of lambda^{exponent} lies outside the window "
                f"(known down to lambda^{self.lowest_known})."
            )
            raise WindowExceeded(msg)
        return self.terms.get(exponent, DiffPoly())

    def exponents(self) -> list[int]:
        return sorted(self.terms, reverse=True)

    def __iter__(self) -> Iterator[tuple[int, DiffPoly]]:
        return iter((k, self.terms[k]) for k in self.exponents())

    def truncated(self, depth: int) -> LaurentSeries:
        if self.truncation_depth is not None:
            depth = min(depth, self.truncation_depth)
        return LaurentSeries(self.terms, depth)

    def _merge_depth(self, other: LaurentSeries) -> int | None:
        depths = [d for d in (self.truncation_depth, other.truncation_depth) if d is not None]
        return min(depths) if depths else None

    def __add__(self, other: LaurentSeries | DiffPoly | Scalar) -> LaurentSeries:
        other_series = as_series(other)
        merged = dict(self.terms)
        for exponent, value in other_series.terms.items():
            merged[exponent] = merged.get(exponent, DiffPoly()) + value
        return LaurentSeries(frozendict(merged), self._merge_depth(other_series))

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return self.map(lambda p: -p)

    def __sub__(self, other: LaurentSeries | DiffPoly | Scalar) -> LaurentSeries:
        return self + (-as_series(other))

    def __rsub__(self, other: LaurentSeries | DiffPoly | Scalar) -> LaurentSeries:
        return as_series(other) + (-self)

    def __mul__(self, other: LaurentSeries | DiffPoly | Scalar) -> LaurentSeries:
        other_series = as_series(other)
        if (self.is_exact and not self.terms) or (other_series.is_exact and not other_series.terms):
            return LaurentSeries.zero()
        lows = []
        if self.truncation_depth is not None and other_series.top is not None:
            lows.append(other_series.top - self.truncation_depth)
        if other_series.truncation_depth is not None and self.top is not None:
            lows.append(self.top - other_series.truncation_depth)
        product: dict[int, DiffPoly] = {}
        for left_exponent, left in self.terms.items():
            for right_exponent, right in other_series.terms.items():
                exponent = left_exponent + right_exponent
                product[exponent] = product.get(exponent, DiffPoly()) + left * right
        depth = -max(lows) if lows else None
        return LaurentSeries(frozendict(product), depth)

    __rmul__ = __mul__

    def shift(self, power: int) -> LaurentSeries:
        """Multiply by ``lambda^power``."""
        depth = None if self.truncation_depth is None else self.truncation_depth - power
        return LaurentSeries(
            frozendict({k + power: v for k, v in self.terms.items()}),
            depth,
        )

    def map(self, function: Callable[[DiffPoly], DiffPoly]) -> LaurentSeries:
        return LaurentSeries(
            frozendict({k: function(v) for k, v in self.terms.items()}),
            self.truncation_depth,
        )

    def d_x(self) -> LaurentSeries:
        return self.map(d_x)

    def plus_part(self) -> LaurentSeries:
        """Exponents >= 0; the result is exact."""
        if not self.knows(0):
            msg = f"The nonnegative part is not known: window ends at lambda^{self.lowest_known}."
            raise WindowExceeded(msg)
        return LaurentSeries(frozendict({k: v for k, v in self.terms.items() if k >= 0}))

    def minus_part(self) -> LaurentSeries:
        return LaurentSeries(
            frozendict({k: v for k, v in self.terms.items() if k < 0}),
            self.truncation_depth,
        )

    def is_zero(self, comparer: SemanticComparer | None = None) -> bool:
        """True when every known coefficient vanishes."""
        return all(is_semantically_zero(v, comparer) for v in self.terms.values())

    def to_text(self) -> str:
        if not self.terms:
            text = "0"
        else:
            pieces = []
            for exponent, value in self:
                body = format_text(value)
                if exponent == 0:
                    pieces.append(f"({body})")
                elif exponent == 1:
                    pieces.append(f"({body})*lam")
                else:
                    pieces.append(f"({body})*lam^{exponent}")
            text = " + ".join(pieces)
        if self.truncation_depth is not None:
            text += f" + O(lam^{-self.truncation_depth - 1})"
        return text

    def __str__(self) -> str:
        return self.to_text()


def as_series(value: LaurentSeries | DiffPoly | Scalar) -> LaurentSeries:
    if isinstance(value, LaurentSeries):
        return value
    return LaurentSeries.constant(value)


def split_plus_minus(series: LaurentSeries, n: int) -> tuple[LaurentSeries, LaurentSeries]:
    """
    Split ``lambda^n * series`` into the part with exponents >= 0 and the rest.
    The index ``n`` term belongs to the plus part only, so the two parts add up
    to ``lambda^n * series`` exactly.
    """
    shifted = series.shift(n)
    if not shifted.knows(0):
        msg = (
            f"Cannot split at n={n}: the series is only known down to "
            f"lambda^{series.lowest_known}."
        )
        raise WindowExceeded(msg)
    return shifted.plus_part(), shifted.minus_part()

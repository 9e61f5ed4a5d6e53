from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterator, Mapping, Sequence

from hierarchy_forge.diffpoly import DiffPoly, is_semantically_zero, normalize, substitute
from hierarchy_forge.exceptions import DimensionMismatch
from hierarchy_forge.spectral.laurent_series import LaurentSeries, as_series

if TYPE_CHECKING:  # pragma: no cover
    from sympy import ImmutableMatrix

    from hierarchy_forge.diffpoly import SemanticComparer
    from hierarchy_forge.diffpoly.generators import Generator
    from hierarchy_forge.diffpoly.polynomial import Scalar


@dataclass(frozen=True)
class MatrixExpr:
    """Square matrix whose entries are Laurent series in the spectral parameter."""

    rows: tuple[tuple[LaurentSeries, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                msg = f"A matrix expression must be square, got a row of length {len(row)} in size {size}."
                raise DimensionMismatch(msg)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentSeries | DiffPoly | Scalar]]) -> MatrixExpr:
        return cls(tuple(tuple(as_series(value) for value in row) for row in rows))

    @classmethod
    def zero(cls, size: int) -> MatrixExpr:
        return cls(tuple(tuple(LaurentSeries.zero() for _ in range(size)) for _ in range(size)))

    @classmethod
    def identity(cls, size: int) -> MatrixExpr:
        return cls.from_rows(
            [[1 if row == column else 0 for column in range(size)] for row in range(size)],
        )

    @classmethod
    def from_constant(
        cls,
        matrix: ImmutableMatrix,
        substitutions: Mapping[Generator, DiffPoly] | None = None,
    ) -> MatrixExpr:
        """Convert a constant sympy matrix, replacing parameters such as epsilon."""
        rows = []
        for row in range(matrix.shape[0]):
            entries = []
            for column in range(matrix.shape[1]):
                value = normalize(matrix[row, column])
                if substitutions:
                    value = substitute(value, substitutions)
                entries.append(LaurentSeries.constant(value))
            rows.append(tuple(entries))
        return cls(tuple(rows))

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, row: int, column: int) -> LaurentSeries:
        return self.rows[row][column]

    def __iter__(self) -> Iterator[tuple[int, int, LaurentSeries]]:
        for row, entries in enumerate(self.rows):
            for column, value in enumerate(entries):
                yield row, column, value

    def _check_size(self, other: MatrixExpr) -> None:
        if self.size != other.size:
            msg = f"Matrix sizes differ: {self.size} and {other.size}."
            raise DimensionMismatch(msg)

    def _zip(self, other: MatrixExpr, function: Callable[[LaurentSeries, LaurentSeries], LaurentSeries]) -> MatrixExpr:
        self._check_size(other)
        return MatrixExpr(
            tuple(
                tuple(function(left, right) for left, right in zip(left_row, right_row))
                for left_row, right_row in zip(self.rows, other.rows)
            ),
        )

    def map(self, function: Callable[[LaurentSeries], LaurentSeries]) -> MatrixExpr:
        return MatrixExpr(tuple(tuple(function(value) for value in row) for row in self.rows))

    def __add__(self, other: MatrixExpr) -> MatrixExpr:
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: MatrixExpr) -> MatrixExpr:
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> MatrixExpr:
        return self.map(lambda a: -a)

    def scaled(self, factor: LaurentSeries | DiffPoly | Scalar) -> MatrixExpr:
        series = as_series(factor)
        return self.map(lambda a: series * a)

    def __matmul__(self, other: MatrixExpr) -> MatrixExpr:
        self._check_size(other)
        size = self.size
        rows = []
        for row in range(size):
            entries = []
            for column in range(size):
                total = LaurentSeries.zero()
                for middle in range(size):
                    left = self.rows[row][middle]
                    right = other.rows[middle][column]
                    if (left.is_exact and not left.terms) or (right.is_exact and not right.terms):
                        continue
                    total = total + left * right
                entries.append(total)
            rows.append(tuple(entries))
        return MatrixExpr(tuple(rows))

    def commutator(self, other: MatrixExpr) -> MatrixExpr:
        return (self @ other) - (other @ self)

    def d_x(self) -> MatrixExpr:
        return self.map(LaurentSeries.d_x)

    def truncated(self, depth: int) -> MatrixExpr:
        return self.map(lambda a: a.truncated(depth))

    def exponents(self) -> list[int]:
        found = {exponent for _, _, value in self for exponent in value.terms}
        return sorted(found, reverse=True)

    def lowest_known(self) -> int | None:
        lows = [value.lowest_known for _, _, value in self if value.lowest_known is not None]
        return max(lows) if lows else None

    def coefficient(self, exponent: int) -> tuple[tuple[DiffPoly, ...], ...]:
        """The constant matrix multiplying ``lambda^exponent``."""
        return tuple(tuple(value.coefficient(exponent) for value in row) for row in self.rows)

    def nonzero_entries(
        self,
        comparer: SemanticComparer | None = None,
    ) -> list[tuple[int, int, int, DiffPoly]]:
        """``(row, column, exponent, coefficient)`` for every known coefficient that does not vanish."""
        found = []
        for row, column, value in self:
            for exponent, coefficient in value:
                if not is_semantically_zero(coefficient, comparer):
                    found.append((row, column, exponent, coefficient))
        return found

    def is_zero(self, comparer: SemanticComparer | None = None) -> bool:
        return not self.nonzero_entries(comparer)

    def to_text(self) -> str:
        return "\n".join("[" + ", ".join(value.to_text() for value in row) + "]" for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()

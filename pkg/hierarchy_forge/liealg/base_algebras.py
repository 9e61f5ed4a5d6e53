"""
The three-dimensional matrix Lie algebras the extended algebras are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import sympy
from sympy import ImmutableMatrix, Rational

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Expr

EPSILON = sympy.Symbol("epsilon")


def expand_matrix(matrix: ImmutableMatrix) -> ImmutableMatrix:
    return ImmutableMatrix(matrix.applyfunc(sympy.expand))


def is_zero_matrix(matrix: ImmutableMatrix) -> bool:
    return all(sympy.expand(entry) == 0 for entry in matrix)


@dataclass(frozen=True)
class BaseAlgebra:
    """
    A basis of three constant square matrices. ``coordinates`` writes any matrix
    of the same order in this basis, returning the coefficients together with the
    part of the matrix that lies outside the span.
    """

    name: str
    labels: tuple[str, ...]
    generators: tuple[ImmutableMatrix, ...]

    @property
    def order(self) -> int:
        return int(self.generators[0].shape[0])

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def _columns(self) -> ImmutableMatrix:
        return ImmutableMatrix.hstack(*(g.reshape(self.order**2, 1) for g in self.generators))

    @cached_property
    def _projection(self) -> ImmutableMatrix:
        columns = self._columns
        return ImmutableMatrix((columns.T * columns).inv() * columns.T)

    def coordinates(self, matrix: ImmutableMatrix) -> tuple[tuple[Expr, ...], ImmutableMatrix]:
        flat = ImmutableMatrix(matrix).reshape(self.order**2, 1)
        coefficients = tuple(sympy.expand(c) for c in self._projection * flat)
        spanned = self._columns * ImmutableMatrix(coefficients)
        residual = expand_matrix(ImmutableMatrix(flat - spanned).reshape(self.order, self.order))
        return coefficients, residual

    @cached_property
    def structure_constants(self) -> tuple[tuple[tuple[Expr, ...], ...], ...]:
        """``constants[a][b][c]`` is the coefficient of generator c in ``[g_a, g_b]``."""
        table = []
        for left in self.generators:
            row = []
            for right in self.generators:
                coefficients, _ = self.coordinates(left * right - right * left)
                row.append(coefficients)
            table.append(tuple(row))
        return tuple(table)


SL2 = BaseAlgebra(
    name="sl2",
    labels=("h", "e", "f"),
    generators=(
        ImmutableMatrix([[1, 0], [0, -1]]),
        ImmutableMatrix([[0, 1], [0, 0]]),
        ImmutableMatrix([[0, 0], [1, 0]]),
    ),
)

# [hbar, ebar] = fbar, [hbar, fbar] = ebar, [ebar, fbar] = -hbar
SL2_SYMMETRIC = BaseAlgebra(
    name="sl2-symmetric",
    labels=("hbar", "ebar", "fbar"),
    generators=(
        ImmutableMatrix([[Rational(1, 2), 0], [0, Rational(-1, 2)]]),
        ImmutableMatrix([[0, Rational(1, 2)], [Rational(1, 2), 0]]),
        ImmutableMatrix([[0, Rational(1, 2)], [Rational(-1, 2), 0]]),
    ),
)

SO3 = BaseAlgebra(
    name="so3",
    labels=("f1", "f2", "f3"),
    generators=(
        ImmutableMatrix([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]),
        ImmutableMatrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
        ImmutableMatrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
    ),
)

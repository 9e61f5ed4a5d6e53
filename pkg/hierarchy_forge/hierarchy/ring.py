"""
Arithmetic in the block ring ``R_N = Q[S]/(S^N - eps_eff)``.

An element is the tuple ``(a_1, ..., a_N)`` standing for ``sum_k a_k S^(k-1)``; the
extended sl(2) algebras of all three models are sl(2) tensored with this ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

from hierarchy_forge.diffpoly import DiffPoly
from hierarchy_forge.diffpoly.polynomial import as_diffpoly
from hierarchy_forge.exceptions import DimensionMismatch

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import Scalar

RingElement = tuple[DiffPoly, ...]


@dataclass(frozen=True)
class BlockRing:
    size: int
    epsilon: DiffPoly

    def element(self, values: Sequence[DiffPoly | Scalar]) -> RingElement:
        if len(values) != self.size:
            msg = f"A ring element has {self.size} components, got {len(values)}."
            raise DimensionMismatch(msg)
        return tuple(as_diffpoly(v) for v in values)

    def zero(self) -> RingElement:
        return (DiffPoly(),) * self.size

    def unit(self) -> RingElement:
        return (DiffPoly.one(),) + (DiffPoly(),) * (self.size - 1)

    def all_ones(self) -> RingElement:
        """``1 + S + ... + S^(N-1)``, the element carried by the spectral drift."""
        return (DiffPoly.one(),) * self.size

    def fields(self) -> RingElement:
        return tuple(DiffPoly.jet(k, 0) for k in range(1, self.size + 1))

    def multiply(self, left: RingElement, right: RingElement) -> RingElement:
        n = self.size
        product = [DiffPoly() for _ in range(n)]
        for i, a in enumerate(left):
            if a.is_zero():
                continue
            for j, b in enumerate(right):
                if b.is_zero():
                    continue
                position = i + j
                if position < n:
                    product[position] = product[position] + a * b
                else:
                    product[position - n] = product[position - n] + self.epsilon * a * b
        return tuple(product)

    def add(self, *elements: RingElement) -> RingElement:
        total = self.zero()
        for element in elements:
            total = tuple(a + b for a, b in zip(total, element))
        return total

    def scale(self, element: RingElement, factor: DiffPoly | Scalar) -> RingElement:
        factor = as_diffpoly(factor)
        return tuple(factor * a for a in element)

    def map(self, element: RingElement, function: Callable[[DiffPoly], DiffPoly]) -> RingElement:
        return tuple(function(a) for a in element)

    def multiplication_matrix(self, element: RingElement) -> tuple[tuple[DiffPoly, ...], ...]:
        """
        Matrix of ``v -> element * v``: entry (k, j) is ``a_{k-j+1}`` for k >= j and
        ``eps_eff * a_{N+k-j+1}`` above the diagonal.
        """
        n = self.size
        rows = []
        for k in range(n):
            row = []
            for j in range(n):
                if k >= j:
                    row.append(element[k - j])
                else:
                    row.append(self.epsilon * element[n + k - j])
            rows.append(tuple(row))
        return tuple(rows)

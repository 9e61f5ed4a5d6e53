"""
Solve the stationary zero-curvature equation order by order.

With ``U = (1/4) lambda e_1 + f_1 - sum_k u_k e_k`` (e_k, f_k, h_k the sl(2)
generators at block k) and ``W = sum_m (A_m h + B_m e + C_m f) lambda^(-m)`` with ring
valued coefficients, matching powers of lambda gives

    A_m = 1/2 C_m,x
    I_m = D^{-1}(U_bar C_m,x)
    C_{m+1} = C_m,xx + 2 U_bar C_m + 2 I_m + 1/2 k_m x omega
    B_m = -1/4 C_{m+1} + I_m + 1/4 k_m x omega

where ``U_bar = (u_1, ..., u_N)``, ``omega`` is the all-ones ring element and the
products are taken in the block ring. ``W`` also carries a top-grade companion
``B_{-1} = 1/4 C_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from hierarchy_forge.diffpoly import DiffPoly, X, d_x, int_x
from hierarchy_forge.exceptions import HierarchyForgeValueError, OrderExceeded
from hierarchy_forge.hierarchy.ring import BlockRing, RingElement
from hierarchy_forge.spectral import SpectralModel

HALF = DiffPoly.constant("1/2")
QUARTER = DiffPoly.constant("1/4")


@dataclass(frozen=True)
class RecursionTable:
    """
    Coefficients ``a_{k,m}``, ``b_{k,m}``, ``c_{k,m}`` of the stationary solution.
    ``a`` and ``c`` are stored for m = 0..order+1, ``b`` for m = 0..order. Blocks
    are 1-based; for the coupled model block 2 holds the ``e, f, g`` family.
    """

    model: SpectralModel
    order: int
    a_columns: tuple[RingElement, ...]
    b_columns: tuple[RingElement, ...]
    c_columns: tuple[RingElement, ...]
    integrals: tuple[RingElement, ...]

    @property
    def ring(self) -> BlockRing:
        return ring_for(self.model)

    def _lookup(self, columns: tuple[RingElement, ...], letter: str, k: int, m: int) -> DiffPoly:
        if not 1 <= k <= self.model.n_components:
            msg = f"Block {k} is outside 1..{self.model.n_components}."
            raise HierarchyForgeValueError(msg)
        if not 0 <= m < len(columns):
            msg = f"{letter}_{{{k},{m}}} is not stored; the table reaches index {len(columns) - 1}."
            raise OrderExceeded(msg)
        return columns[m][k - 1]

    def a(self, k: int, m: int) -> DiffPoly:
        return self._lookup(self.a_columns, "a", k, m)

    def b(self, k: int, m: int) -> DiffPoly:
        return self._lookup(self.b_columns, "b", k, m)

    def c(self, k: int, m: int) -> DiffPoly:
        return self._lookup(self.c_columns, "c", k, m)

    def companion(self, k: int) -> DiffPoly:
        """``b_{k,-1}``."""
        return QUARTER * self.c(k, 0)

    def column(self, letter: str, m: int) -> RingElement:
        columns = {"a": self.a_columns, "b": self.b_columns, "c": self.c_columns}[letter]
        if not 0 <= m < len(columns):
            msg = f"Column {letter}_{m} is not stored; the table reaches index {len(columns) - 1}."
            raise OrderExceeded(msg)
        return columns[m]

    def truncated(self, order: int) -> RecursionTable:
        if order > self.order:
            msg = f"Cannot truncate a table of order {self.order} to order {order}."
            raise OrderExceeded(msg)
        return RecursionTable(
            model=self.model,
            order=order,
            a_columns=self.a_columns[: order + 2],
            b_columns=self.b_columns[: order + 1],
            c_columns=self.c_columns[: order + 2],
            integrals=self.integrals[: order + 1],
        )

    def entries(self) -> list[tuple[str, int, int, DiffPoly]]:
        """``(letter, k, m, value)`` in table order."""
        rows = []
        for m in range(self.order + 2):
            for k in range(1, self.model.n_components + 1):
                rows.append(("a", k, m, self.a(k, m)))
                if m <= self.order:
                    rows.append(("b", k, m, self.b(k, m)))
                rows.append(("c", k, m, self.c(k, m)))
        return rows


def ring_for(model: SpectralModel) -> BlockRing:
    return BlockRing(model.n_components, model.epsilon_effective)


@lru_cache(maxsize=None)
def _columns(model: SpectralModel, n: int) -> tuple[tuple[RingElement, ...], ...]:
    """``(C_0..C_{n+1}, I_0..I_n)``."""
    ring = ring_for(model)
    fields = ring.fields()
    if n < 0:
        return (ring.element(model.seeds),), ()
    c_columns, integrals = _columns(model, n - 1)
    current = c_columns[n]
    current_x = ring.map(current, d_x)
    integral = ring.map(ring.multiply(fields, current_x), int_x)
    drift = ring.scale(ring.all_ones(), HALF * model.time_coefficient(n) * DiffPoly.from_generator(X))
    following = ring.add(
        ring.map(current, lambda p: d_x(p, 2)),
        ring.scale(ring.multiply(fields, current), 2),
        ring.scale(integral, 2),
        drift,
    )
    logger.debug("Solved recursion order {} for {}", n + 1, model.label)
    return (*c_columns, following), (*integrals, integral)


def solve_recursion(model: SpectralModel, n: int) -> RecursionTable:
    if n < 0:
        msg = f"The hierarchy order must be nonnegative, got {n}."
        raise HierarchyForgeValueError(msg)
    ring = ring_for(model)
    c_columns, integrals = _columns(model, n)
    x = DiffPoly.from_generator(X)
    a_columns = tuple(ring.scale(ring.map(c, d_x), HALF) for c in c_columns)
    b_columns = tuple(
        ring.add(
            ring.scale(c_columns[m + 1], -QUARTER),
            integrals[m],
            ring.scale(ring.all_ones(), QUARTER * model.time_coefficient(m) * x),
        )
        for m in range(n + 1)
    )
    return RecursionTable(
        model=model,
        order=n,
        a_columns=a_columns,
        b_columns=b_columns,
        c_columns=c_columns,
        integrals=integrals,
    )

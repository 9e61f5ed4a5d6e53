from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from hierarchy_forge.diffpoly import DiffPoly, FlowVector, d_x, format_text
from hierarchy_forge.exceptions import OrderExceeded
from hierarchy_forge.hierarchy.recursion import HALF, QUARTER, RecursionTable, solve_recursion
from hierarchy_forge.spectral import LaurentSeries, MatrixExpr, build_spectral_pair

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.hierarchy.reduction import ReductionSpec
    from hierarchy_forge.spectral import SpectralModel, SpectralPair


@dataclass(frozen=True)
class HierarchyEquation:
    """The flow ``u_{t_n} = rhs`` together with the table it was read from."""

    model: SpectralModel
    order: int
    rhs: FlowVector
    table: RecursionTable
    reduction: ReductionSpec | None = None

    @property
    def n_components(self) -> int:
        return self.rhs.dimension

    def to_text(self) -> str:
        indexed = self.rhs.dimension > 1
        lines = []
        for k, value in enumerate(self.rhs, start=1):
            name = f"u{k}" if indexed else "u"
            lines.append(f"{name}_t{self.order} = {format_text(value, indexed=indexed)}")
        return "\n".join(lines)


def hierarchy_equation(model: SpectralModel, n: int) -> HierarchyEquation:
    table = solve_recursion(model, n)
    return equation_from_table(table, n)


def equation_from_table(table: RecursionTable, n: int) -> HierarchyEquation:
    if n > table.order:
        msg = f"The order {n} flow needs a table of order {n}, got {table.order}."
        raise OrderExceeded(msg)
    rhs = FlowVector(tuple(HALF * d_x(c) for c in table.column("c", n + 1)))
    return HierarchyEquation(model=table.model, order=n, rhs=rhs, table=table)


def _pair_for(table: RecursionTable, pair: SpectralPair | None) -> SpectralPair:
    return pair if pair is not None else build_spectral_pair(table.model, table.order + 2)


def modification_term(
    table: RecursionTable,
    n: int,
    pair: SpectralPair | None = None,
) -> MatrixExpr:
    """``Delta_n = -1/4 sum_k c_{k,n+1} e_k``."""
    if n > table.order:
        msg = f"Delta_{n} needs c_{{{n + 1}}}; the table has order {table.order}."
        raise OrderExceeded(msg)
    pair = _pair_for(table, pair)
    blocks = table.model.n_components
    zeros = [0] * blocks
    b = [-QUARTER * table.c(k, n + 1) for k in range(1, blocks + 1)]
    return pair.embed(zeros, b, zeros)


def v_matrix(
    table: RecursionTable,
    n: int,
    pair: SpectralPair | None = None,
    *,
    companion: bool = True,
) -> MatrixExpr:
    """``V^(n) = B_{-1} lambda^(n+1) e + sum_{m<=n} W_m lambda^(n-m) + Delta_n``."""
    if n > table.order:
        msg = f"V^({n}) needs a table of order {n}, got {table.order}."
        raise OrderExceeded(msg)
    pair = _pair_for(table, pair)
    blocks = range(1, table.model.n_components + 1)

    def series(letter: str, k: int) -> LaurentSeries:
        lookup = {"a": table.a, "b": table.b, "c": table.c}[letter]
        terms: dict[int, DiffPoly] = {n - m: lookup(k, m) for m in range(n + 1)}
        if letter == "b":
            if companion:
                terms[n + 1] = table.companion(k)
            terms[0] = terms[0] - QUARTER * table.c(k, n + 1)
        return LaurentSeries.build(terms)

    return pair.embed(
        [series("a", k) for k in blocks],
        [series("b", k) for k in blocks],
        [series("c", k) for k in blocks],
    )

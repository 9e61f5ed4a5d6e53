from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from frozendict import frozendict
from loguru import logger

from hierarchy_forge.diffpoly import DiffPoly, FlowVector, format_text, normalize
from hierarchy_forge.hierarchy.equations import equation_from_table, v_matrix
from hierarchy_forge.hierarchy.recursion import QUARTER, solve_recursion
from hierarchy_forge.spectral import (
    LaurentSeries,
    MatrixExpr,
    build_spectral_pair,
    coupled_model,
    split_plus_minus,
)

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import SemanticComparer
    from hierarchy_forge.spectral import SpectralModel, SpectralPair


class DriftMode(str, Enum):
    """
    Which matrix multiplies ``lambda_t``. ``block`` is a quarter of ``e`` in every
    block, the drift the recursion is built with; ``literal`` is ``dU/dlambda``.
    The two coincide for the scalar model.
    """

    BLOCK = "block"
    LITERAL = "literal"


@dataclass(frozen=True)
class ZeroCurvatureReport:
    label: str
    order: int
    residual: MatrixExpr
    nonzero: tuple[tuple[int, int, int, DiffPoly], ...]
    lowest_checked: int | None = None

    @property
    def passed(self) -> bool:
        return not self.nonzero

    def describe(self) -> str:
        if self.passed:
            window = "" if self.lowest_checked is None else f" down to lam^{self.lowest_checked}"
            return f"residual vanishes{window}"
        pieces = [
            f"[{row},{column}] lam^{exponent}: {format_text(value)}"
            for row, column, exponent, value in self.nonzero
        ]
        return "; ".join(pieces)


def _report(
    label: str,
    order: int,
    residual: MatrixExpr,
    comparer: SemanticComparer | None,
) -> ZeroCurvatureReport:
    nonzero = tuple(residual.nonzero_entries(comparer))
    logger.debug("Zero-curvature check for {} at order {}: {} nonzero entries", label, order, len(nonzero))
    return ZeroCurvatureReport(
        label=label,
        order=order,
        residual=residual,
        nonzero=nonzero,
        lowest_checked=residual.lowest_known(),
    )


def _drift_matrix(pair: SpectralPair, drift: DriftMode | str) -> MatrixExpr:
    if DriftMode(drift) is DriftMode.BLOCK:
        return pair.drift
    return pair.spectral_derivative


def zero_curvature_residual(
    model: SpectralModel,
    n: int,
    *,
    drift: DriftMode | str = DriftMode.BLOCK,
    companion: bool = True,
) -> MatrixExpr:
    """
    ``dU/du[u_t] + drift * lambda_t^(n) - V_x + [U, V]`` with ``u_t`` the order ``n``
    flow and ``lambda_t^(n)`` the nonnegative part of ``lambda^n lambda_t``.
    """
    table = solve_recursion(model, n)
    pair = build_spectral_pair(model, n + 2)
    flow = equation_from_table(table, n).rhs
    v = v_matrix(table, n, pair, companion=companion)
    zeros = [0] * model.n_components
    u_t = pair.embed(zeros, [-value for value in flow], zeros)
    lambda_plus, _ = split_plus_minus(pair.lambda_t, n)
    spectral = _drift_matrix(pair, drift).scaled(lambda_plus)
    return u_t + spectral - v.d_x() + pair.u_matrix.commutator(v)


def verify_zero_curvature(
    model: SpectralModel,
    n: int,
    *,
    drift: DriftMode | str = DriftMode.BLOCK,
    companion: bool = True,
    comparer: SemanticComparer | None = None,
) -> ZeroCurvatureReport:
    residual = zero_curvature_residual(model, n, drift=drift, companion=companion)
    return _report(model.label, n, residual, comparer)


def verify_stationary(
    model: SpectralModel,
    n: int,
    *,
    comparer: SemanticComparer | None = None,
) -> ZeroCurvatureReport:
    """
    Check ``W_x = drift * lambda_t + [U, W]`` on the truncated series. ``a`` and
    ``c`` are known to index n+1 and ``b`` to index n, so the residual is
    certified down to ``lambda^(1-n)``.
    """
    table = solve_recursion(model, n)
    pair = build_spectral_pair(model, n + 1)
    blocks = range(1, model.n_components + 1)

    def series(letter: str, k: int, depth: int) -> LaurentSeries:
        lookup = {"a": table.a, "b": table.b, "c": table.c}[letter]
        terms = {-m: lookup(k, m) for m in range(depth + 1)}
        if letter == "b":
            terms[1] = table.companion(k)
        return LaurentSeries(frozendict(terms), depth)

    w = pair.embed(
        [series("a", k, n + 1) for k in blocks],
        [series("b", k, n) for k in blocks],
        [series("c", k, n + 1) for k in blocks],
    )
    residual = w.d_x() - pair.drift.scaled(pair.lambda_t) - pair.u_matrix.commutator(w)
    return _report(model.label, n, residual, comparer)


@dataclass(frozen=True)
class LaxPair:
    pair: SpectralPair
    v_matrix: MatrixExpr
    flow: FlowVector


def frobenius_lax_pair(epsilon: DiffPoly | str = "epsilon") -> LaxPair:
    """The displayed Lax pair ``V = [[V1, eps V2], [V2, V1]]`` of the Frobenius KdV equation."""
    eps = normalize(epsilon)
    model = coupled_model(alpha1=1, alpha2=0, epsilon=eps, isospectral=True)
    u1, u2 = DiffPoly.jet(1), DiffPoly.jet(2)
    u1x, u2x = DiffPoly.jet(1, 1), DiffPoly.jet(2, 1)
    half = DiffPoly.constant("1/2")

    v1 = (
        (
            LaurentSeries.constant(u1x),
            LaurentSeries.build(
                {0: -DiffPoly.jet(1, 2) - 2 * u1 * u1 - 2 * eps * u2 * u2, 1: -half * u1, 2: QUARTER},
            ),
        ),
        (LaurentSeries.build({1: 1, 0: 2 * u1}), LaurentSeries.constant(-u1x)),
    )
    v2 = (
        (
            LaurentSeries.constant(u2x),
            LaurentSeries.build({0: -DiffPoly.jet(2, 2) - 4 * u1 * u2, 1: -half * u2}),
        ),
        (LaurentSeries.constant(2 * u2), LaurentSeries.constant(-u2x)),
    )
    v2_wrapped = tuple(tuple(entry.map(lambda p: eps * p) for entry in line) for line in v2)
    blocks = {(0, 0): v1, (1, 1): v1, (1, 0): v2, (0, 1): v2_wrapped}
    rows = [
        [entry for block_column in range(2) for entry in blocks[block_row, block_column][inner]]
        for block_row in range(2)
        for inner in range(2)
    ]
    flow = FlowVector(
        (
            DiffPoly.jet(1, 3) + 6 * u1 * u1x + 6 * eps * u2 * u2x,
            DiffPoly.jet(2, 3) + 6 * u1 * u2x + 6 * u2 * u1x,
        ),
    )
    return LaxPair(pair=build_spectral_pair(model), v_matrix=MatrixExpr.from_rows(rows), flow=flow)


def verify_lax_pair(
    lax_pair: LaxPair | None = None,
    *,
    comparer: SemanticComparer | None = None,
) -> ZeroCurvatureReport:
    """``U_t - V_x + [U, V]`` with ``U_t`` taken along the Lax pair's flow."""
    lax_pair = lax_pair or frobenius_lax_pair()
    pair = lax_pair.pair
    zeros = [0] * pair.model.n_components
    u_t = pair.embed(zeros, [-value for value in lax_pair.flow], zeros)
    v = lax_pair.v_matrix
    residual = u_t - v.d_x() + pair.u_matrix.commutator(v)
    return _report("frobenius-lax-pair", 1, residual, comparer)

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from frozendict import frozendict
from loguru import logger

from hierarchy_forge.diffpoly import DiffPoly, ParamSymbol
from hierarchy_forge.liealg import build_basis
from hierarchy_forge.spectral.laurent_series import LaurentSeries, as_series
from hierarchy_forge.spectral.matrix_expr import MatrixExpr
from hierarchy_forge.spectral.models import EPSILON_SYMBOL, SpectralModel

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import Scalar
    from hierarchy_forge.liealg import LieBasis

    SeriesLike = LaurentSeries | DiffPoly | Scalar

QUARTER = DiffPoly.constant("1/4")


@dataclass(frozen=True)
class SpectralPair:
    """
    Spectral matrix ``U``, the spectral drift ``lambda_t`` and the basis they are
    written in. Element ``3(k-1) + g`` of the basis is the sl(2) generator ``g``
    (h, e, f) at block ``k``.
    """

    model: SpectralModel
    basis: LieBasis
    depth: int

    @cached_property
    def elements(self) -> tuple[MatrixExpr, ...]:
        substitutions = {EPSILON_SYMBOL: self.model.epsilon_effective}
        return tuple(MatrixExpr.from_constant(e, substitutions) for e in self.basis.elements)

    @property
    def size(self) -> int:
        return 2 * self.model.n_components

    def element(self, index: int) -> MatrixExpr:
        return self.elements[index - 1]

    def embed(
        self,
        a: Sequence[SeriesLike],
        b: Sequence[SeriesLike],
        c: Sequence[SeriesLike],
    ) -> MatrixExpr:
        """``sum_k a_k h_k + b_k e_k + c_k f_k`` over the blocks k = 1..N."""
        total = MatrixExpr.zero(self.size)
        for block in range(1, self.model.n_components + 1):
            for generator, values in enumerate((a, b, c), start=1):
                value = as_series(values[block - 1])
                if value.is_exact and not value.terms:
                    continue
                element = self.element(self.basis.element_index(block, generator))
                total = total + element.scaled(value)
        return total

    @cached_property
    def u_matrix(self) -> MatrixExpr:
        n = self.model.n_components
        lam = LaurentSeries.monomial(QUARTER, 1)
        b = [
            (lam if block == 1 else LaurentSeries.zero()) - DiffPoly.jet(block, 0)
            for block in range(1, n + 1)
        ]
        c = [1] + [0] * (n - 1)
        return self.embed([0] * n, b, c)

    @cached_property
    def spectral_derivative(self) -> MatrixExpr:
        """``dU/dlambda``."""
        n = self.model.n_components
        return self.embed([0] * n, [QUARTER] + [0] * (n - 1), [0] * n)

    @cached_property
    def drift(self) -> MatrixExpr:
        """The matrix multiplying ``lambda_t`` in the recursion: a quarter of the ring unit in each block."""
        n = self.model.n_components
        return self.embed([0] * n, [QUARTER] * n, [0] * n)

    @cached_property
    def lambda_t(self) -> LaurentSeries:
        terms = {-m: self.model.time_coefficient(m) for m in range(self.depth + 1)}
        return LaurentSeries(frozendict(terms), self.depth)

    def ansatz(self, depth: int | None = None) -> MatrixExpr:
        """
        The series ``W`` with named slots ``a{k}_{m}``, ``b{k}_{m}``, ``c{k}_{m}`` for
        display; the recursion fills them.
        """
        depth = self.depth if depth is None else depth
        n = self.model.n_components

        def slot_series(letter: str, block: int) -> LaurentSeries:
            terms = {
                -m: DiffPoly.from_generator(ParamSymbol(f"{letter}{block}_{m}"))
                for m in range(depth + 1)
            }
            return LaurentSeries(frozendict(terms), depth)

        return self.embed(
            [slot_series("a", k) for k in range(1, n + 1)],
            [slot_series("b", k) for k in range(1, n + 1)],
            [slot_series("c", k) for k in range(1, n + 1)],
        )


def build_spectral_pair(model: SpectralModel, depth: int = 2) -> SpectralPair:
    basis = build_basis(model.lie_case, model.n_components)
    logger.debug("Building spectral pair for {} with depth {}", model.label, depth)
    return SpectralPair(model=model, basis=basis, depth=depth)

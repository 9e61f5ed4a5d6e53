"""
K and tau symmetries of the Frobenius KdV hierarchy ``u_t = K_m = Phi^m K_0``.

    K_0 = (u1_x, u2_x),  sigma_0 = (1/2, 1/2)
    tau_n^m = (2m + 1) t H K_{m+n-1} + Phi^n sigma_0,  m >= 1

where ``H`` is multiplication by ``1 + S`` in the two-block ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING

from hierarchy_forge.diffpoly import DiffPoly, FlowVector, T, TimeSymbol, gateaux
from hierarchy_forge.exceptions import HierarchyForgeValueError
from hierarchy_forge.hamiltonian import recursion_operator, seed_flow
from hierarchy_forge.hierarchy import BlockRing
from hierarchy_forge.spectral import coupled_model

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import OperatorExpr
    from hierarchy_forge.spectral.models import ParameterValue

HALF = DiffPoly.constant("1/2")


@dataclass(frozen=True)
class ConstantMixer:
    """The constant matrix ``H = [[1, eps], [1, 1]]``."""

    matrix: tuple[tuple[DiffPoly, ...], ...]

    @classmethod
    def for_epsilon(cls, epsilon: DiffPoly) -> ConstantMixer:
        ring = BlockRing(2, epsilon)
        return cls(ring.multiplication_matrix(ring.all_ones()))

    def apply(self, flow: FlowVector) -> FlowVector:
        return FlowVector(
            tuple(
                sum((weight * entry for weight, entry in zip(row, flow)), DiffPoly())
                for row in self.matrix
            ),
        )


class SymmetryKind(str, Enum):
    K = "K"
    TAU = "tau"
    SEED = "seed"


@dataclass(frozen=True)
class SymmetryFlow:
    """
    ``value = t * time_coefficient + (t-free part)``; only tau flows carry ``t``.
    Seed flows are ``Phi^n sigma_0``.
    """

    kind: SymmetryKind
    indices: tuple[int, ...]
    value: FlowVector
    time_coefficient: FlowVector

    @property
    def label(self) -> str:
        if self.kind is SymmetryKind.K:
            return f"K_{self.indices[0]}"
        if self.kind is SymmetryKind.TAU:
            m, n = self.indices
            return f"tau_{n}^{m}"
        return f"Phi^{self.indices[0]} sigma_0"

    @property
    def is_time_dependent(self) -> bool:
        return not self.time_coefficient.is_zero()


def lie_bracket(left: FlowVector, right: FlowVector) -> FlowVector:
    """``[F, G] = F'[G] - G'[F]``."""
    return gateaux(left, right) - gateaux(right, left)


class CoupledSymmetries:
    """Flows of one Frobenius KdV hierarchy, computed on demand and memoized."""

    def __init__(self, epsilon: ParameterValue = "epsilon") -> None:
        self.model = coupled_model(alpha1=1, alpha2=0, epsilon=epsilon, isospectral=True)
        self.phi: OperatorExpr = recursion_operator(self.model)
        self.mixer = ConstantMixer.for_epsilon(self.model.epsilon)
        self._k_values: list[FlowVector] = [seed_flow(self.model)]
        self._seed_values: list[FlowVector] = [FlowVector((HALF, HALF))]

    @property
    def sigma_0(self) -> FlowVector:
        return self._seed_values[0]

    def k_value(self, m: int) -> FlowVector:
        """``K_m``; zero for negative ``m``."""
        if m < 0:
            return FlowVector.zero(2)
        while len(self._k_values) <= m:
            self._k_values.append(self.phi.apply(self._k_values[-1]))
        return self._k_values[m]

    def seed_value(self, n: int) -> FlowVector:
        """``Phi^n sigma_0``."""
        while len(self._seed_values) <= n:
            self._seed_values.append(self.phi.apply(self._seed_values[-1]))
        return self._seed_values[n]

    def k_flow(self, m: int) -> SymmetryFlow:
        if m < 0:
            msg = f"K flows are indexed from 0, got {m}."
            raise HierarchyForgeValueError(msg)
        return SymmetryFlow(SymmetryKind.K, (m,), self.k_value(m), FlowVector.zero(2))

    def sigma_flow(self, n: int) -> SymmetryFlow:
        if n < 0:
            msg = f"Seed flows are indexed from 0, got {n}."
            raise HierarchyForgeValueError(msg)
        return SymmetryFlow(SymmetryKind.SEED, (n,), self.seed_value(n), FlowVector.zero(2))

    def mixed_k(self, m: int) -> FlowVector:
        """``H K_m``."""
        return self.mixer.apply(self.k_value(m))

    def tau_flow(self, m: int, n: int) -> SymmetryFlow:
        if m < 1 or n < 0:
            msg = f"tau_n^m needs m >= 1 and n >= 0, got m={m}, n={n}."
            raise HierarchyForgeValueError(msg)
        coefficient = self.mixed_k(m + n - 1) * (2 * m + 1)
        t = DiffPoly.from_generator(T)
        value = coefficient * t + self.seed_value(n)
        return SymmetryFlow(SymmetryKind.TAU, (m, n), value, coefficient)

    def nonisospectral_flow(self, m: int) -> FlowVector:
        """``K_m + 1/2 sum_j k_j Phi^(m-j) sigma_0``, the flow with spectral drift."""
        flow = self.k_value(m)
        for j in range(m + 1):
            k_j = DiffPoly.from_generator(TimeSymbol(j, 0))
            flow = flow + self.seed_value(m - j) * (HALF * k_j)
        return flow


@lru_cache(maxsize=8)
def coupled_symmetries(epsilon: ParameterValue = "epsilon") -> CoupledSymmetries:
    return CoupledSymmetries(epsilon)


def k_flow(m: int, epsilon: ParameterValue = "epsilon") -> SymmetryFlow:
    return coupled_symmetries(epsilon).k_flow(m)


def tau_flow(m: int, n: int, epsilon: ParameterValue = "epsilon") -> SymmetryFlow:
    return coupled_symmetries(epsilon).tau_flow(m, n)

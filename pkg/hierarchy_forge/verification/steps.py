"""
Verification steps wrapping the checks of the algebra, hierarchy, Hamiltonian
and symmetry modules. Every step turns its module's report into flat
``CheckResult`` items.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable

from hierarchy_forge.hierarchy import (
    MULTI_LEADING_COEFFICIENTS,
    MULTI_UNIFORM_COEFFICIENTS,
    NAMED_EQUATIONS,
    DriftMode,
    ReductionSpec,
    compare_with_printed,
    hierarchy_equation,
    named_equation,
    printed_coefficients,
    reduce,
    solve_recursion,
    verify_lax_pair,
    verify_stationary,
    verify_zero_curvature,
)
from hierarchy_forge.liealg import LieCase, build_basis, verify_grading, verify_jacobi, verify_structure_constants
from hierarchy_forge.spectral import ModelKind, SeedProfile, build_model, coupled_model, kdv_model, multi_model
from hierarchy_forge.verification.abstract_verification_step import AbstractVerificationStep
from hierarchy_forge.verification.types import CheckResult

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.hamiltonian import IdentityReport
    from hierarchy_forge.hierarchy import NamedEquation, PrintedCoefficient, ZeroCurvatureReport
    from hierarchy_forge.liealg import LieBasis, StructureReport
    from hierarchy_forge.spectral import SpectralModel

LIE_ALGEBRA = "lie-algebra"
ZERO_CURVATURE = "zero-curvature"
HAMILTONIAN = "hamiltonian"
SYMMETRIES = "symmetries"


def _basis_label(basis: LieBasis) -> str:
    if basis.is_tabulated:
        return basis.case.value
    return f"{basis.case.value}(N={basis.n_blocks})"


class LieAlgebraStep(AbstractVerificationStep):
    """
    Structure constants, grading closure and the Jacobi identity of one
    extended algebra. Published relations that disagree with the derived
    constants are reported.
    """

    suite = LIE_ALGEBRA

    def __init__(
        self,
        case: LieCase | str,
        n_blocks: int | None = None,
        *,
        jacobi_sample: int | None = None,
        seed: int | None = None,
    ) -> None:
        super().__init__()
        self._case = LieCase.parse(case)
        self._n_blocks = n_blocks
        self._jacobi_sample = jacobi_sample
        self._seed = seed

    def describe(self) -> str:
        blocks = "" if self._n_blocks is None else f" N={self._n_blocks}"
        return f"{self._case.value}{blocks} structure"

    def _entries(self, report: StructureReport, prefix: str) -> list[CheckResult]:
        labels = report.basis.labels
        results = []
        for entry in report.entries:
            name = f"{prefix} [{labels[entry.left - 1]}, {labels[entry.right - 1]}]"
            notes = entry.violations or entry.discrepancies
            results.append(
                CheckResult.from_outcome(
                    self.suite,
                    name,
                    holds=not notes,
                    asserted=bool(entry.violations),
                    residual="; ".join(notes),
                ),
            )
        return results

    def _verify(self) -> list[CheckResult]:
        basis = build_basis(self._case, self._n_blocks)
        label = _basis_label(basis)
        structure = verify_structure_constants(basis)
        results = self._entries(structure, label)
        results.extend(self._entries(verify_grading(basis), f"{label} grading"))
        jacobi = verify_jacobi(structure, sample=self._jacobi_sample, seed=self._seed)
        results.append(
            CheckResult.from_outcome(
                self.suite,
                f"{label} Jacobi identity on {jacobi.checked} triples",
                holds=jacobi.passed,
                residual=", ".join(str(triple) for triple in jacobi.failures),
            ),
        )
        return results


def _regression_depth(rows: tuple[PrintedCoefficient, ...]) -> int:
    """Smallest ``n`` whose table holds every row: ``b`` to index ``n``, ``a`` and ``c`` to ``n + 1``."""
    return max((row.index if row.letter == "b" else row.index - 1 for row in rows), default=0)


class RecursionRegressionStep(AbstractVerificationStep):
    """
    Computed recursion coefficients against the published ones. Rows known to
    differ from the recursion are reported; for the three-component model the
    rows of the other seed profile are reported as well.
    """

    suite = ZERO_CURVATURE

    def __init__(self, model: SpectralModel) -> None:
        super().__init__()
        self._model = model

    def describe(self) -> str:
        return f"published coefficients of {self._model.label}"

    def _other_profile_rows(self) -> tuple[PrintedCoefficient, ...]:
        if self._model.kind is not ModelKind.MULTI or self._model.n_components != 3:  # noqa: PLR2004
            return ()
        if self._model.seed_profile is SeedProfile.UNIFORM:
            return MULTI_LEADING_COEFFICIENTS
        return MULTI_UNIFORM_COEFFICIENTS

    def _verify(self) -> list[CheckResult]:
        own = printed_coefficients(self._model)
        other = self._other_profile_rows()
        table = solve_recursion(self._model, max(_regression_depth(own), _regression_depth(other)))
        results = []
        for rows, asserted_rows in ((own, True), (other, False)):
            for comparison in compare_with_printed(table, rows):
                printed = comparison.printed
                difference = comparison.computed - printed.value(self._model.n_components)
                results.append(
                    CheckResult.from_outcome(
                        self.suite,
                        f"{self._model.label} {printed.name}",
                        holds=comparison.agrees,
                        asserted=asserted_rows and printed.matches_recursion,
                        residual=str(difference),
                    ),
                )
        return results


def _zero_curvature_result(name: str, report: ZeroCurvatureReport, *, asserted: bool = True) -> CheckResult:
    return CheckResult.from_outcome(
        ZERO_CURVATURE,
        name,
        holds=report.passed,
        asserted=asserted,
        residual=report.describe(),
    )


class ZeroCurvatureStep(AbstractVerificationStep):
    """
    The zero-curvature residual for orders ``0..max_n``, the stationary equation
    on the truncated series, and the two literal readings of the published
    construction (no top-grade companion, ``dU/dlambda`` drift), reported.
    """

    suite = ZERO_CURVATURE

    def __init__(self, model: SpectralModel, max_n: int) -> None:
        super().__init__()
        self._model = model
        self._max_n = max_n

    def describe(self) -> str:
        return f"zero curvature of {self._model.label} to order {self._max_n}"

    def _verify(self) -> list[CheckResult]:
        label = self._model.label
        results = [
            _zero_curvature_result(f"{label} zero curvature at n={n}", verify_zero_curvature(self._model, n))
            for n in range(self._max_n + 1)
        ]
        results.append(
            _zero_curvature_result(
                f"{label} stationary equation at n={self._max_n}",
                verify_stationary(self._model, self._max_n),
            ),
        )
        results.append(
            _zero_curvature_result(
                f"{label} zero curvature without the companion at n=1",
                verify_zero_curvature(self._model, 1, companion=False),
                asserted=False,
            ),
        )
        results.append(
            _zero_curvature_result(
                f"{label} zero curvature with the literal drift at n=1",
                verify_zero_curvature(self._model, 1, drift=DriftMode.LITERAL),
                asserted=False,
            ),
        )
        return results


def _named_model(equation: NamedEquation) -> SpectralModel:
    n_components = len(equation.components) if equation.kind is ModelKind.MULTI else None
    return build_model(
        equation.kind,
        n_components,
        parameters=dict(equation.parameters),
        isospectral=equation.isospectral,
        profile=equation.profile,
    )


class NamedEquationStep(AbstractVerificationStep):
    """Published first flows and their reductions to KdV and Frobenius KdV."""

    suite = ZERO_CURVATURE

    def describe(self) -> str:
        return "named equations and reductions"

    def _verify(self) -> list[CheckResult]:
        results = []
        for equation in NAMED_EQUATIONS:
            generated = hierarchy_equation(_named_model(equation), equation.order).rhs
            expected = equation.flow()
            results.append(
                CheckResult.from_outcome(
                    self.suite,
                    f"named equation {equation.name}",
                    holds=generated.equivalent(expected),
                    residual=(generated - expected).to_text(),
                ),
            )
        reductions = (
            (
                "frobenius-kdv with u2 = 0 is kdv",
                hierarchy_equation(coupled_model(), 1),
                ReductionSpec.build(isospectral=True, bindings={"alpha1": 1, "alpha2": 0}, keep_components=1),
                named_equation("kdv").flow(),
            ),
            (
                "multi(N=1) is the scalar hierarchy",
                hierarchy_equation(multi_model(1), 1),
                ReductionSpec.build(bindings={"beta1": "alpha"}),
                hierarchy_equation(kdv_model(), 1).rhs,
            ),
            (
                "multi(N=2) at sigma = 1 is the coupled hierarchy",
                hierarchy_equation(multi_model(2), 1),
                ReductionSpec.build(bindings={"sigma": 1, "beta1": "alpha1"}),
                reduce(hierarchy_equation(coupled_model(), 1), ReductionSpec.build(bindings={"alpha2": 0})).rhs,
            ),
        )
        for name, equation, spec, expected in reductions:
            reduced = reduce(equation, spec).rhs
            results.append(
                CheckResult.from_outcome(
                    self.suite,
                    f"reduction {name}",
                    holds=reduced.equivalent(expected),
                    residual=(reduced - expected).to_text(),
                ),
            )
        return results


class LaxPairStep(AbstractVerificationStep):
    suite = ZERO_CURVATURE

    def describe(self) -> str:
        return "Lax pair of Frobenius KdV"

    def _verify(self) -> list[CheckResult]:
        return [_zero_curvature_result("Frobenius KdV Lax pair", verify_lax_pair())]


class IdentityReportStep(AbstractVerificationStep):
    """Adapter for the identity reports of the Hamiltonian and symmetry modules."""

    def __init__(self, suite: str, build_report: Callable[[], IdentityReport]) -> None:
        super().__init__()
        self.suite = suite
        self._build_report = build_report
        self._label: str | None = None

    def describe(self) -> str:
        return self._label or self.origin

    def _verify(self) -> list[CheckResult]:
        report = self._build_report()
        self._label = report.label
        return [CheckResult.from_identity(self.suite, check) for check in report.checks]

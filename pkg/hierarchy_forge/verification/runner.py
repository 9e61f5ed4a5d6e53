from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import TYPE_CHECKING, Callable

from loguru import logger

from hierarchy_forge.exceptions import UnknownCase
from hierarchy_forge.hamiltonian import (
    verify_conserved_quantities,
    verify_gradient_relation,
    verify_operator_identities,
    verify_poisson_brackets,
)
from hierarchy_forge.liealg import LieCase
from hierarchy_forge.spectral import coupled_model, kdv_model, multi_model
from hierarchy_forge.symmetry import (
    DEFAULT_HEREDITARY_SAMPLES,
    verify_algebra,
    verify_hereditary_samples,
    verify_jacobi,
    verify_strong_symmetry,
    verify_symmetry_equation,
)
from hierarchy_forge.verification.steps import (
    HAMILTONIAN,
    SYMMETRIES,
    IdentityReportStep,
    LaxPairStep,
    LieAlgebraStep,
    NamedEquationStep,
    RecursionRegressionStep,
    ZeroCurvatureStep,
)
from hierarchy_forge.verification.types import CheckStatus
from hierarchy_forge.verification.verification_log import VerificationLog

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.spectral import SpectralModel
    from hierarchy_forge.verification.abstract_verification_step import AbstractVerificationStep
    from hierarchy_forge.verification.types import CheckResult

TABULATED_CASES = (LieCase.A12, LieCase.A13, LieCase.A22, LieCase.A32)
INDEXED_CASES = (LieCase.A1N, LieCase.A2N, LieCase.A3N)
INDEXED_BLOCKS = range(2, 6)
INDEXED_JACOBI_SAMPLE = 40
SYMMETRY_EQUATION_INDICES = ((1, 0), (1, 1), (2, 0))


class VerificationSuite(str, Enum):
    LIE_ALGEBRA = "lie-algebra"
    ZERO_CURVATURE = "zero-curvature"
    HAMILTONIAN = "hamiltonian"
    SYMMETRIES = "symmetries"
    ALL = "all"

    @classmethod
    def parse(cls, value: VerificationSuite | str) -> VerificationSuite:
        if isinstance(value, VerificationSuite):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            known = ", ".join(suite.value for suite in cls)
            msg = f"Unknown verification suite {value!r}; expected one of {known}."
            raise UnknownCase(msg) from None


@dataclass(frozen=True)
class SuiteOptions:
    """
    Narrows the default suites. ``model`` and ``order`` restrict the
    zero-curvature and Hamiltonian suites to one model; ``case`` and ``n_blocks``
    restrict the Lie algebra suite to one algebra; ``symmetry_max`` bounds the
    indices of the symmetry bracket table.
    """

    model: SpectralModel | None = None
    order: int | None = None
    case: LieCase | None = None
    n_blocks: int | None = None
    symmetry_max: int = 2
    seed: int | None = None


@dataclass(frozen=True)
class VerificationOutcome:
    suite: VerificationSuite
    results: tuple[CheckResult, ...]
    log: VerificationLog = field(compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return not any(result.failed for result in self.results)

    def with_status(self, status: CheckStatus) -> list[CheckResult]:
        return [result for result in self.results if result.status is status]

    def failures(self) -> list[CheckResult]:
        return self.with_status(CheckStatus.FAIL)

    def reported(self) -> list[CheckResult]:
        return self.with_status(CheckStatus.REPORTED)


def _default_models() -> tuple[tuple[SpectralModel, int], ...]:
    """Models and the highest order checked for each."""
    return (
        (kdv_model(), 3),
        (coupled_model(), 3),
        (multi_model(3), 2),
    )


class VerificationRunner:
    """
    Runs a verification suite as a sequence of single-use steps.

    Steps are created fresh for every run by ``get_steps``, which defaults to
    ``get_default_steps``. Replace it to run a custom selection of checks.
    """

    def __init__(
        self,
        get_steps: Callable[[VerificationSuite], list[AbstractVerificationStep]] | None = None,
        *,
        options: SuiteOptions | None = None,
    ) -> None:
        self._options = options or SuiteOptions()
        self._get_steps = get_steps or self.get_default_steps

    def get_default_steps(self, suite: VerificationSuite | str) -> list[AbstractVerificationStep]:
        suite = VerificationSuite.parse(suite)
        builders = {
            VerificationSuite.LIE_ALGEBRA: self._lie_algebra_steps,
            VerificationSuite.ZERO_CURVATURE: self._zero_curvature_steps,
            VerificationSuite.HAMILTONIAN: self._hamiltonian_steps,
            VerificationSuite.SYMMETRIES: self._symmetry_steps,
        }
        if suite is VerificationSuite.ALL:
            return [step for build in builders.values() for step in build()]
        return builders[suite]()

    def run(self, suite: VerificationSuite | str) -> VerificationOutcome:
        suite = VerificationSuite.parse(suite)
        log = VerificationLog()
        results: list[CheckResult] = []
        for step in self._get_steps(suite):
            logger.debug("Running {}", step.describe())
            results.extend(step.verify(log))
        outcome = VerificationOutcome(suite=suite, results=tuple(results), log=log)
        logger.debug("Suite {}: {} checks {}", suite.value, len(outcome.results), log.totals())
        return outcome

    def _lie_algebra_steps(self) -> list[AbstractVerificationStep]:
        options = self._options
        if options.case is not None:
            return [LieAlgebraStep(options.case, options.n_blocks, seed=options.seed)]
        steps: list[AbstractVerificationStep] = [LieAlgebraStep(case) for case in TABULATED_CASES]
        steps.extend(
            LieAlgebraStep(case, n_blocks, jacobi_sample=INDEXED_JACOBI_SAMPLE, seed=options.seed)
            for case in INDEXED_CASES
            for n_blocks in INDEXED_BLOCKS
        )
        return steps

    def _models(self) -> tuple[tuple[SpectralModel, int], ...]:
        options = self._options
        if options.model is None:
            return _default_models()
        return ((options.model, 2 if options.order is None else options.order),)

    def _zero_curvature_steps(self) -> list[AbstractVerificationStep]:
        steps: list[AbstractVerificationStep] = []
        for model, max_n in self._models():
            steps.append(RecursionRegressionStep(model))
            steps.append(ZeroCurvatureStep(model, max_n))
        if self._options.model is None:
            steps.append(RecursionRegressionStep(multi_model(3, profile="uniform")))
            steps.append(NamedEquationStep())
            steps.append(LaxPairStep())
        return steps

    def _hamiltonian_steps(self) -> list[AbstractVerificationStep]:
        steps: list[AbstractVerificationStep] = []
        for model, max_n in self._models():
            depth = min(max_n, 2)
            steps.extend(
                IdentityReportStep(HAMILTONIAN, partial(verify_gradient_relation, model, m))
                for m in range(depth + 1)
            )
            steps.append(IdentityReportStep(HAMILTONIAN, partial(verify_operator_identities, model, depth)))
            steps.append(IdentityReportStep(HAMILTONIAN, partial(verify_poisson_brackets, model, depth)))
        if self._options.model is None:
            steps.append(IdentityReportStep(HAMILTONIAN, verify_conserved_quantities))
        return steps

    def _symmetry_steps(self) -> list[AbstractVerificationStep]:
        bound = self._options.symmetry_max
        steps = [
            IdentityReportStep(
                SYMMETRIES,
                partial(verify_hereditary_samples, DEFAULT_HEREDITARY_SAMPLES, seed=self._options.seed),
            ),
        ]
        steps.extend(IdentityReportStep(SYMMETRIES, partial(verify_strong_symmetry, m)) for m in (0, 1))
        steps.extend(
            IdentityReportStep(SYMMETRIES, partial(verify_symmetry_equation, m, n))
            for m, n in SYMMETRY_EQUATION_INDICES
        )
        steps.append(IdentityReportStep(SYMMETRIES, partial(verify_algebra, bound, bound)))
        steps.append(IdentityReportStep(SYMMETRIES, verify_jacobi))
        return steps

from hierarchy_forge.verification.abstract_verification_step import AbstractVerificationStep
from hierarchy_forge.verification.runner import (
    SuiteOptions,
    VerificationOutcome,
    VerificationRunner,
    VerificationSuite,
)
from hierarchy_forge.verification.steps import (
    IdentityReportStep,
    LaxPairStep,
    LieAlgebraStep,
    NamedEquationStep,
    RecursionRegressionStep,
    ZeroCurvatureStep,
)
from hierarchy_forge.verification.types import CheckResult, CheckStatus
from hierarchy_forge.verification.verification_log import LogItem, VerificationLog

__all__ = [
    # Results
    "CheckStatus",
    "CheckResult",
    "LogItem",
    "VerificationLog",
    # Steps
    "AbstractVerificationStep",
    "LieAlgebraStep",
    "RecursionRegressionStep",
    "ZeroCurvatureStep",
    "NamedEquationStep",
    "LaxPairStep",
    "IdentityReportStep",
    # Runner
    "VerificationSuite",
    "SuiteOptions",
    "VerificationOutcome",
    "VerificationRunner",
]

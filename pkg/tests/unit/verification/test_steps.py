import pytest

from hierarchy_forge.hamiltonian import IdentityCheck, IdentityReport
from hierarchy_forge.liealg import LieCase
from hierarchy_forge.spectral import coupled_model, kdv_model, multi_model
from hierarchy_forge.verification import (
    CheckStatus,
    IdentityReportStep,
    LaxPairStep,
    LieAlgebraStep,
    NamedEquationStep,
    RecursionRegressionStep,
    ZeroCurvatureStep,
)


def _by_name(results):
    return {result.name: result for result in results}


def test_case_one_structure_step():
    # Act
    results = LieAlgebraStep(LieCase.A12).verify()

    # Assert
    structure = [r for r in results if "grading" not in r.name and "Jacobi" not in r.name]
    assert len(structure) == 15
    assert all(result.status is CheckStatus.PASS for result in results)
    assert results[-1].name == "A12 Jacobi identity on 20 triples"


def test_symmetric_case_step_reports_the_published_sign():
    # Act
    results = LieAlgebraStep(LieCase.A22).verify()

    # Assert
    reported = [result for result in results if result.status is CheckStatus.REPORTED]
    assert not any(result.failed for result in results)
    assert [result.name for result in reported] == [
        "A22 [ebar2, ebar3]",
        "A22 [ebar2, ebar6]",
        "A22 [ebar3, ebar5]",
        "A22 [ebar5, ebar6]",
    ]
    assert reported[0].residual == "coefficient of ebar1: derived -1, published 1"


def test_indexed_case_step_is_labelled_with_the_block_count():
    # Act
    results = LieAlgebraStep("a1n", 3, jacobi_sample=10, seed=1).verify()

    # Assert
    assert results[0].name.startswith("A1N(N=3) [")
    assert not any(result.failed for result in results)


def test_scalar_regression_reports_b1():
    # Act
    results = _by_name(RecursionRegressionStep(kdv_model()).verify())

    # Assert
    assert results["kdv b_{1,1}"].status is CheckStatus.REPORTED
    assert results["kdv c_{1,2}"].status is CheckStatus.PASS
    assert not any(result.failed for result in results.values())


@pytest.mark.parametrize("profile", ["leading", "uniform"])
def test_three_component_regression_reports_the_other_profile(profile):
    # Act
    results = RecursionRegressionStep(multi_model(3, profile=profile)).verify()

    # Assert
    assert not any(result.failed for result in results)
    assert any(result.status is CheckStatus.REPORTED for result in results)


def test_zero_curvature_step():
    # Act
    results = _by_name(ZeroCurvatureStep(kdv_model(), 1).verify())

    # Assert
    assert results["kdv zero curvature at n=0"].status is CheckStatus.PASS
    assert results["kdv zero curvature at n=1"].status is CheckStatus.PASS
    assert results["kdv stationary equation at n=1"].status is CheckStatus.PASS
    assert results["kdv zero curvature without the companion at n=1"].status is CheckStatus.REPORTED
    assert results["kdv zero curvature with the literal drift at n=1"].status is CheckStatus.PASS


def test_literal_drift_is_reported_for_the_coupled_model():
    # Act
    results = _by_name(ZeroCurvatureStep(coupled_model(), 1).verify())

    # Assert
    assert results["coupled zero curvature with the literal drift at n=1"].status is CheckStatus.REPORTED
    assert results["coupled zero curvature at n=1"].status is CheckStatus.PASS


def test_named_equations_and_reductions():
    # Act
    results = NamedEquationStep().verify()

    # Assert
    assert all(result.status is CheckStatus.PASS for result in results), [r for r in results if r.failed]
    assert "reduction frobenius-kdv with u2 = 0 is kdv" in _by_name(results)


def test_lax_pair_step():
    # Act
    (result,) = LaxPairStep().verify()

    # Assert
    assert result.status is CheckStatus.PASS


def test_identity_report_step_keeps_unasserted_checks_as_reported():
    # Arrange
    report = IdentityReport(
        label="demo",
        checks=(
            IdentityCheck("a", holds=True),
            IdentityCheck("b", holds=False, asserted=False, detail="u_x"),
            IdentityCheck("c", holds=False, detail="u"),
        ),
    )
    step = IdentityReportStep("demo-suite", lambda: report)

    # Act
    results = step.verify()

    # Assert
    assert [r.status for r in results] == [CheckStatus.PASS, CheckStatus.REPORTED, CheckStatus.FAIL]
    assert results[2].residual == "u"
    assert step.describe() == "demo"

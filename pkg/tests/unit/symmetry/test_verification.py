import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hierarchy_forge.diffpoly import random_test_vectors
from hierarchy_forge.symmetry import (
    verify_algebra,
    verify_hereditary,
    verify_hereditary_samples,
    verify_jacobi,
    verify_strong_symmetry,
    verify_symmetry_equation,
)


@pytest.mark.parametrize(("m", "n"), [(1, 0), (1, 1), (2, 0)], ids=["tau_0^1", "tau_1^1", "tau_0^2"])
def test_tau_flows_are_symmetries(m, n):
    # Act
    report = verify_symmetry_equation(m, n)

    # Assert
    assert report.passed, report.failures()
    assert report.check(f"tau_{n}^{m} is a symmetry of K_{m}").holds
    assert not report.check(f"tau_{n}^{m} is a symmetry of K_{m} with k_j").asserted


def test_small_bracket_table():
    # Act
    report = verify_algebra(max_m=1, max_n=1)

    # Assert
    assert report.passed, report.failures()
    assert report.check("[K_0, K_1] = 0").holds
    assert report.check("[K_1, Phi^0 sigma_0] = 3 H K_0").holds
    assert report.check("[Phi^1 sigma_0, Phi^0 sigma_0] = 2 Phi^0 H sigma_0").holds
    assert report.check("[K_1, tau_0^1] = 3 H K_0").holds


def test_full_bracket_table():
    # Act
    report = verify_algebra()

    # Assert
    assert report.passed, report.failures()
    assert report.check("[tau_2^1, tau_1^1] = 2 H tau_2^1").holds
    assert report.check("[tau_1^2, tau_0^2] = 2 H tau_0^2").holds
    assert report.check("[K_2, Phi^2 sigma_0] = 5 H K_3").holds


def test_bracket_table_with_numeric_epsilon():
    # Act
    report = verify_algebra(max_m=1, max_n=1, epsilon=3)

    # Assert
    assert report.passed, report.failures()


@settings(max_examples=5, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_recursion_operator_is_hereditary(seed):
    # Arrange
    f, g = random_test_vectors(2, 2, seed=seed)

    # Act
    report = verify_hereditary(f, g)

    # Assert
    assert report.passed, report.failures()


def test_hereditary_samples_are_seeded():
    # Act
    report = verify_hereditary_samples(count=3, seed=7)

    # Assert
    assert report.passed, report.failures()
    assert [check.name for check in report.checks] == [f"Phi is hereditary on pair {i}" for i in range(3)]


@pytest.mark.parametrize("m", [0, 1])
def test_recursion_operator_is_a_strong_symmetry(m):
    # Act
    report = verify_strong_symmetry(m)

    # Assert
    assert report.passed, report.failures()


def test_jacobi_identity():
    # Act
    report = verify_jacobi()

    # Assert
    assert report.passed, report.failures()
    assert len(report.checks) == 4

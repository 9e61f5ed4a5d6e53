import pytest
from sympy import ImmutableMatrix, zeros

from hierarchy_forge.liealg.base_algebras import EPSILON
from hierarchy_forge.liealg.basis import LieCase, build_basis
from hierarchy_forge.liealg.printed_tables import PRINTED_TABLES
from hierarchy_forge.liealg.structure import (
    expand_in_basis,
    predicted_bracket,
    verify_grading,
    verify_jacobi,
    verify_structure_constants,
)

eps = EPSILON


@pytest.mark.parametrize("case", [LieCase.A12, LieCase.A13, LieCase.A32])
def test_published_tables_are_confirmed(case):
    # Arrange
    basis = build_basis(case)

    # Act
    report = verify_structure_constants(basis)

    # Assert
    assert report.passed, [entry.violations for entry in report.failures()]
    assert not report.discrepancies()


def test_symmetric_case_reports_the_sign_of_the_published_table():
    # Act
    report = verify_structure_constants(build_basis(LieCase.A22))

    # Assert
    assert report.passed
    assert [(entry.left, entry.right) for entry in report.discrepancies()] == [(2, 3), (2, 6), (3, 5), (5, 6)]
    assert report.entry(2, 3).nonzero_coefficients() == {1: -1}
    assert report.entry(5, 6).nonzero_coefficients() == {1: -eps}
    assert report.entry(2, 3).discrepancies == ("coefficient of ebar1: derived -1, published 1",)


def test_case_one_has_fifteen_relations():
    # Act
    report = verify_structure_constants(build_basis(LieCase.A12))

    # Assert
    assert len(report.entries) == 15
    assert len(PRINTED_TABLES[LieCase.A12]) == 15
    assert report.entry(5, 6).nonzero_coefficients() == {1: eps}
    assert report.entry(4, 5).nonzero_coefficients() == {2: 2 * eps}


def test_case_two_wrapping_and_zero_relations():
    # Act
    report = verify_structure_constants(build_basis(LieCase.A13))

    # Assert
    assert report.entry(5, 9).nonzero_coefficients() == {1: eps}
    for pair in [(1, 4), (2, 5), (3, 6), (1, 7), (2, 8), (3, 9), (4, 7), (5, 8), (6, 9)]:
        assert report.entry(*pair).nonzero_coefficients() == {}


def test_case_two_pairs_missing_from_the_table_are_derived():
    # Act
    report = verify_structure_constants(build_basis(LieCase.A13))

    # Assert
    assert report.entry(6, 7).nonzero_coefficients() == {3: 2 * eps}
    assert report.entry(6, 8).nonzero_coefficients() == {1: -eps}


def test_indexed_rule_wraps_with_epsilon():
    # Arrange
    basis = build_basis(LieCase.A1N, 4)
    h_at_two = basis.element_index(2, 1)
    e_at_four = basis.element_index(4, 2)

    # Act
    report = verify_structure_constants(basis)

    # Assert
    assert report.passed
    assert report.entry(h_at_two, e_at_four).nonzero_coefficients() == {2: 2 * eps}


@pytest.mark.parametrize("case", [LieCase.A1N, LieCase.A2N])
def test_third_published_indexed_family_is_reported(case):
    # Arrange
    basis = build_basis(case, 3)
    e_at_one = basis.element_index(1, 2)
    h_at_two = basis.element_index(2, 1)

    # Act
    report = verify_structure_constants(basis)

    # Assert
    assert report.passed
    assert report.entry(e_at_one, h_at_two).discrepancies
    assert not report.entry(basis.element_index(1, 1), basis.element_index(2, 2)).discrepancies


def test_predicted_bracket_matches_block_rule():
    # Arrange
    basis = build_basis(LieCase.A3N, 3)

    # Act
    predicted = predicted_bracket(basis, basis.element_index(3, 1), basis.element_index(2, 2))

    # Assert
    assert predicted[basis.element_index(1, 3) - 1] == eps
    assert sum(1 for value in predicted if value != 0) == 1


def test_matrix_outside_the_span_leaves_a_residual():
    # Arrange
    basis = build_basis(LieCase.A12)
    identity = ImmutableMatrix.eye(4)

    # Act
    _, residual = expand_in_basis(basis, identity)

    # Assert
    assert residual != ImmutableMatrix(zeros(4, 4))


@pytest.mark.parametrize(
    ("case", "n_blocks"),
    [
        (LieCase.A12, None),
        (LieCase.A13, None),
        (LieCase.A1N, 2),
        (LieCase.A1N, 5),
        (LieCase.A2N, 4),
        (LieCase.A2N, 5),
        (LieCase.A3N, 3),
        (LieCase.A3N, 5),
    ],
)
def test_grading(case, n_blocks):
    # Act
    report = verify_grading(build_basis(case, n_blocks))

    # Assert
    assert report.passed


@pytest.mark.parametrize(("case", "n_blocks"), [(LieCase.A13, None), (LieCase.A2N, 4)])
def test_jacobi_identity_on_derived_constants(case, n_blocks):
    # Arrange
    report = verify_structure_constants(build_basis(case, n_blocks))

    # Act
    jacobi = verify_jacobi(report)

    # Assert
    assert jacobi.passed
    assert jacobi.checked > 0


def test_sampled_jacobi_identity():
    # Arrange
    report = verify_structure_constants(build_basis(LieCase.A3N, 5))

    # Act
    jacobi = verify_jacobi(report, sample=40, seed=3)

    # Assert
    assert jacobi.passed
    assert jacobi.checked == 40


@pytest.mark.parametrize("value", [0, -1, 2])
def test_specialized_epsilon_keeps_tables_valid(value):
    # Act
    report = verify_structure_constants(build_basis(LieCase.A12, epsilon=value))

    # Assert
    assert report.passed

import pytest

from hierarchy_forge.diffpoly import DiffPoly, normalize
from hierarchy_forge.exceptions import DimensionMismatch
from hierarchy_forge.hierarchy import BlockRing

P = normalize
EPS = P("epsilon")


def test_two_block_product():
    # Arrange
    ring = BlockRing(2, EPS)
    a = ring.element([P("a1"), P("a2")])
    b = ring.element([P("b1"), P("b2")])

    # Act
    product = ring.multiply(a, b)

    # Assert
    assert product == (P("a1*b1 + epsilon*a2*b2"), P("a1*b2 + a2*b1"))


def test_top_powers_wrap_to_epsilon():
    # Arrange
    ring = BlockRing(3, P("sigma*epsilon"))

    # Act
    product = ring.multiply(ring.element([0, 1, 0]), ring.element([0, 0, 1]))

    # Assert
    assert product == (P("sigma*epsilon"), DiffPoly(), DiffPoly())


def test_unit_is_neutral():
    # Arrange
    ring = BlockRing(3, EPS)
    a = ring.element([P("u1"), P("u2"), P("u3")])

    # Act & Assert
    assert ring.multiply(ring.unit(), a) == a
    assert ring.multiply(a, ring.unit()) == a


def test_multiplication_by_all_ones_matrix():
    # Arrange
    ring = BlockRing(2, EPS)

    # Act
    matrix = ring.multiplication_matrix(ring.all_ones())

    # Assert
    assert matrix == ((DiffPoly.one(), EPS), (DiffPoly.one(), DiffPoly.one()))


def test_element_size_is_checked():
    # Act & Assert
    with pytest.raises(DimensionMismatch, match="2 components"):
        BlockRing(2, EPS).element([1, 2, 3])

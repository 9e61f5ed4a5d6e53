import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hierarchy_forge.diffpoly import DiffPoly, normalize
from hierarchy_forge.exceptions import WindowExceeded
from hierarchy_forge.spectral.laurent_series import LaurentSeries, split_plus_minus

P = normalize


def lambda_t(depth: int) -> LaurentSeries:
    return LaurentSeries.build({-m: P(f"k{m}") for m in range(depth + 1)}, depth)


def test_exact_series_arithmetic():
    # Arrange
    a = LaurentSeries.build({1: P("u"), 0: 2})
    b = LaurentSeries.build({-1: P("u_x")})

    # Act
    product = a * b
    total = a + b

    # Assert
    assert product == LaurentSeries.build({0: P("u*u_x"), -1: P("2*u_x")})
    assert total.exponents() == [1, 0, -1]
    assert product.is_exact


def test_product_with_exact_series_narrows_the_window():
    # Arrange
    a = LaurentSeries.build({0: 1, -1: 1}, truncation_depth=1)
    lam = LaurentSeries.monomial(1, 1)

    # Act
    product = a * lam

    # Assert
    assert product.lowest_known == 0
    assert product.coefficient(1) == DiffPoly.one()
    assert product.coefficient(0) == DiffPoly.one()
    with pytest.raises(WindowExceeded, match="outside the window"):
        product.coefficient(-1)


def test_product_of_truncated_series_drops_unknown_terms():
    # Arrange
    a = LaurentSeries.build({0: 1, -1: 1}, truncation_depth=1)
    b = LaurentSeries.build({0: 2, -1: 1}, truncation_depth=1)

    # Act
    product = a * b

    # Assert
    assert product.truncation_depth == 1
    assert product == LaurentSeries.build({0: 2, -1: 3}, truncation_depth=1)


def test_addition_keeps_the_narrower_window():
    # Arrange
    a = LaurentSeries.build({0: 1, -3: 5}, truncation_depth=3)
    b = LaurentSeries.build({-1: 1}, truncation_depth=1)

    # Act
    total = a + b

    # Assert
    assert total.truncation_depth == 1
    assert -3 not in total.terms


def test_shift_moves_the_window():
    # Act
    shifted = lambda_t(2).shift(1)

    # Assert
    assert shifted.lowest_known == -1
    assert shifted.coefficient(1) == P("k0")


def test_d_x_is_termwise():
    # Arrange
    series = LaurentSeries.build({1: P("u"), 0: P("u^2")}, truncation_depth=0)

    # Act & Assert
    assert series.d_x() == LaurentSeries.build({1: P("u_x"), 0: P("2*u*u_x")}, truncation_depth=0)


def test_split_lambda_t_at_first_order():
    # Act
    plus, minus = split_plus_minus(lambda_t(2), 1)

    # Assert
    assert plus == LaurentSeries.build({1: P("k0"), 0: P("k1")})
    assert minus.terms == {-1: P("k2")}


def test_split_of_constant_series_at_zero():
    # Arrange
    series = LaurentSeries.build({0: P("alpha"), -1: P("u")}, truncation_depth=1)

    # Act
    plus, minus = split_plus_minus(series, 0)

    # Assert
    assert plus == LaurentSeries.constant(P("alpha"))
    assert minus.terms == {-1: P("u")}


def test_split_beyond_the_window_raises():
    # Act & Assert
    with pytest.raises(WindowExceeded, match="Cannot split at n=3"):
        split_plus_minus(lambda_t(2), 3)


@settings(max_examples=25, deadline=None)
@given(
    coefficients=st.lists(st.integers(-5, 5), min_size=1, max_size=5),
    n=st.integers(0, 4),
)
def test_split_parts_reassemble(coefficients, n):
    # Arrange
    depth = len(coefficients) - 1
    series = LaurentSeries.build(
        {-m: P(f"{value}*u_x + k{m}") for m, value in enumerate(coefficients)},
        depth,
    )
    n = min(n, depth)

    # Act
    plus, minus = split_plus_minus(series, n)

    # Assert
    assert plus.is_exact
    assert all(exponent >= 0 for exponent in plus.terms)
    assert all(exponent < 0 for exponent in minus.terms)
    assert plus + minus == series.shift(n)


def test_to_text_marks_the_truncation():
    # Act
    text = lambda_t(1).to_text()

    # Assert
    assert text == "(k0) + (k1)*lam^-1 + O(lam^-2)"

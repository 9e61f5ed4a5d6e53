import pytest
import sympy

from hierarchy_forge.diffpoly.formatting import format_latex, format_text
from hierarchy_forge.diffpoly.generators import AntiDeriv, JetVariable, ParamSymbol, TimeSymbol, make_monomial
from hierarchy_forge.diffpoly.parsing import generator_for_name, normalize
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.exceptions import MalformedExpression


def test_like_terms_are_merged():
    # Act
    doubled = normalize("u*u + u^2")
    cancelled = normalize("u*u - u^2")

    # Assert
    assert doubled == DiffPoly.jet() ** 2 * 2
    assert cancelled.is_zero()


def test_term_order_does_not_matter():
    # Arrange
    first = "2*alpha*u + 1/2*k0*x"
    second = "1/2*x*k0 + 2*u*alpha"

    # Act & Assert
    assert normalize(first) == normalize(second)


def test_normalize_is_idempotent():
    # Arrange
    p = normalize("2*alpha*u_xx + 6*alpha*u^2 + k0*(x*u + Dinv(u)) + 1/2*k1*x")

    # Act
    again = normalize(p)

    # Assert
    assert again is p
    assert normalize(format_text(p)) == p


def test_exact_part_is_extracted_from_antiderivative():
    # Act
    p = normalize("Dinv(u*u_x)")

    # Assert
    assert p == normalize("1/2*u^2")
    assert not p.has_antiderivs()


def test_sympy_expressions_are_accepted():
    # Arrange
    u, alpha = sympy.symbols("u alpha")

    # Act
    p = normalize(2 * alpha * u**2 + sympy.Rational(1, 3))

    # Assert
    assert p == normalize("2*alpha*u^2 + 1/3")


def test_negative_powers_allowed_for_parameters():
    # Act
    p = normalize("u_x/eps")

    # Assert
    ((monomial, coefficient),) = p.terms.items()
    assert dict(monomial)[ParamSymbol("epsilon")] == -1
    assert coefficient == 1


@pytest.mark.parametrize(
    ("expression", "message"),
    [
        ("0.5*u", "Floating point"),
        ("u_xy", "Malformed jet"),
        ("1/u", "Negative powers"),
        ("jet(1, -1)", "nonnegative"),
        ("u^(1/2)", "must be an integer"),
        ("", "Empty expression"),
        ("u +* u", "Cannot parse"),
    ],
)
def test_malformed_expressions_are_rejected(expression, message):
    # Act & Assert
    with pytest.raises(MalformedExpression, match=message):
        normalize(expression)


def test_undeclared_component_is_rejected():
    # Act & Assert
    with pytest.raises(MalformedExpression, match="not declared"):
        normalize("u3_x", components=2)


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("k0", TimeSymbol(0, 0)),
        ("k_0", TimeSymbol(0, 0)),
        ("k12", TimeSymbol(12, 0)),
        ("k_2_tt", TimeSymbol(2, 2)),
        ("k1_t", TimeSymbol(1, 1)),
        ("kappa", ParamSymbol("kappa")),
        ("k_a", ParamSymbol("k_a")),
    ],
    ids=["k0", "k_0", "k12", "k_2_tt", "k1_t", "kappa", "k_a"],
)
def test_time_coefficient_spellings(name, expected):
    # Act & Assert
    assert generator_for_name(name) == expected


def test_both_time_coefficient_spellings_give_the_same_polynomial():
    # Arrange
    k_0 = DiffPoly.from_generator(TimeSymbol(0, 0))
    k_1_t = DiffPoly.from_generator(TimeSymbol(1, 1))

    # Act
    underscored = normalize("u_x + k_0/4 + k_1_t*x")
    plain = normalize("u_x + k0/4 + k1_t*x")

    # Assert
    assert underscored == plain
    assert underscored == DiffPoly.jet(1, 1) + k_0 * DiffPoly.constant("1/4") + k_1_t * normalize("x")


def test_jet_call_and_named_jets_agree():
    # Act & Assert
    assert normalize("jet(2, 3)") == normalize("u2_xxx")
    assert normalize("u") == normalize("u1")
    assert normalize("Dx(u^2, 2)") == normalize("2*u_x^2 + 2*u*u_xx")


def test_text_rendering_uses_canonical_order():
    # Act & Assert
    assert str(normalize("u^2 + u_x")) == "u_x + u^2"
    assert str(normalize("u2_x*u1")) == "u1*u2_x"
    assert str(normalize("-1/2*u^2")) == "-1/2*u^2"
    assert str(DiffPoly()) == "0"


def test_antiderivative_nodes_render_as_calls():
    # Arrange
    node = DiffPoly.from_generator(AntiDeriv(DiffPoly.jet()))

    # Act
    text = format_text(node * DiffPoly.jet(1, 1))

    # Assert
    assert text == "u_x*Dinv(u)"
    assert normalize(text) == node * DiffPoly.jet(1, 1)


def test_latex_rendering():
    # Act & Assert
    assert format_latex(normalize("u_xx")) == "u_{xx}"
    assert format_latex(normalize("eps*u2_x")) == r"\varepsilon u_{2,x}"
    assert format_latex(normalize("1/4*k0*x")) == r"\frac{1}{4} k_{0}(t) x"
    assert format_latex(normalize("alpha1*u1")) == r"\alpha_{1} u"


def test_monomials_without_negative_jets():
    # Act & Assert
    with pytest.raises(MalformedExpression):
        make_monomial({JetVariable(1, 0): -1})

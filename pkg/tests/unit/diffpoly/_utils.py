from hypothesis import strategies as st

from hierarchy_forge.diffpoly.generators import X, JetVariable, ParamSymbol, make_monomial
from hierarchy_forge.diffpoly.polynomial import DiffPoly

ALPHA = ParamSymbol("alpha")


@st.composite
def jet_monomials(draw, components: int = 2, max_order: int = 3, max_degree: int = 3):
    degree = draw(st.integers(min_value=0, max_value=max_degree))
    powers: dict = {}
    for _ in range(degree):
        jet = JetVariable(
            draw(st.integers(min_value=1, max_value=components)),
            draw(st.integers(min_value=0, max_value=max_order)),
        )
        powers[jet] = powers.get(jet, 0) + 1
    x_power = draw(st.integers(min_value=0, max_value=1))
    if x_power:
        powers[X] = x_power
    if draw(st.booleans()):
        powers[ALPHA] = 1
    return make_monomial(powers)


@st.composite
def atom_free_polynomials(draw, components: int = 2, max_terms: int = 4):
    count = draw(st.integers(min_value=1, max_value=max_terms))
    result = DiffPoly()
    for _ in range(count):
        monomial = draw(jet_monomials(components=components))
        coefficient = draw(st.integers(min_value=-4, max_value=4))
        result = result + DiffPoly.from_monomial(monomial, coefficient)
    return result

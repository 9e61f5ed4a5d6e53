"""Seeded random test data: directions and flows built from jet monomials."""

from __future__ import annotations

import random

from hierarchy_forge.diffpoly.flow_vector import FlowVector
from hierarchy_forge.diffpoly.generators import JetVariable, make_monomial
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.utils.env_var_helpers import get_seed


def random_jet_polynomial(
    rng: random.Random,
    *,
    components: int,
    max_degree: int = 2,
    max_order: int = 2,
    terms: int = 3,
) -> DiffPoly:
    """
    A polynomial in jet variables only, with no constant term, so every term
    decays with the fields and integrals taken from minus infinity make sense.
    """
    result = DiffPoly()
    while result.is_zero():
        for _ in range(terms):
            degree = rng.randint(1, max_degree)
            powers: dict[JetVariable, int] = {}
            for _ in range(degree):
                jet = JetVariable(rng.randint(1, components), rng.randint(0, max_order))
                powers[jet] = powers.get(jet, 0) + 1
            coefficient = rng.choice([-3, -2, -1, 1, 2, 3])
            result = result + DiffPoly.from_monomial(make_monomial(powers), coefficient)
    return result


def random_test_vectors(
    dimension: int,
    count: int = 3,
    *,
    seed: int | None = None,
    max_degree: int = 2,
    max_order: int = 2,
) -> list[FlowVector]:
    rng = random.Random(get_seed(seed) + dimension)  # noqa: S311
    return [
        FlowVector(
            tuple(
                random_jet_polynomial(
                    rng,
                    components=dimension,
                    max_degree=max_degree,
                    max_order=max_order,
                )
                for _ in range(dimension)
            ),
        )
        for _ in range(count)
    ]

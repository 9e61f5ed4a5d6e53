"""
Deciding equality of differential polynomials.

Canonical forms are unique for polynomials without antiderivative nodes. With
nodes present, different canonical forms can describe the same function, e.g.
``D(Dinv(u)*Dinv(u^2)) = u*Dinv(u^2) + u^2*Dinv(u)``. Such cases are decided by
exact evaluation at a generic test function

    u_i(x) = sum_j c_ij * exp(mu_ij * x)

with distinct random positive integer rates and random rational weights. Values are
kept as exact finite sums of ``x^p * exp(mu * x)`` terms, so evaluation is a ring
homomorphism that commutes with the derivative and with ``Dinv`` (taken as the
integral from minus infinity for the decaying part and from zero for pure
polynomials in x).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Dict, Sequence, Tuple

from loguru import logger
from sympy import QQ

from hierarchy_forge.diffpoly.calculus import euler_derivative, integrate_by_parts
from hierarchy_forge.diffpoly.coefficients import Coefficient
from hierarchy_forge.diffpoly.generators import (
    AntiDeriv,
    Generator,
    JetVariable,
    SpaceVariable,
)
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.utils.env_var_helpers import get_seed

# (exponential rate, power of x) -> coefficient
ExpSum = Dict[Tuple[Coefficient, int], Coefficient]


@dataclass(frozen=True)
class EquivalenceOptions:
    """
    Options of the semantic zero test.

    ``terms_per_component`` must exceed the degree of any differential relation that
    could vanish on short exponential sums; the default covers every expression the
    hierarchy computations produce.
    """

    seed: int | None = None
    terms_per_component: int = 6
    trials: int = 2


@dataclass
class _TestPoint:
    options: EquivalenceOptions
    rng: random.Random
    scalars: dict[Generator, Coefficient] = field(default_factory=dict)
    rates: dict[int, list[tuple[Coefficient, Coefficient]]] = field(default_factory=dict)
    cache: dict[Generator, ExpSum] = field(default_factory=dict)

    def _random_rational(self, low: int, high: int) -> Coefficient:
        numerator = 0
        while numerator == 0:
            numerator = self.rng.randint(low, high)
        return QQ(numerator, self.rng.randint(1, 7))

    def component_terms(self, component: int) -> list[tuple[Coefficient, Coefficient]]:
        if component not in self.rates:
            terms: list[tuple[Coefficient, Coefficient]] = []
            used: set[Coefficient] = set()
            while len(terms) < self.options.terms_per_component:
                rate = QQ(self.rng.randint(1, 40))
                if rate in used:
                    continue
                used.add(rate)
                terms.append((rate, self._random_rational(-9, 9)))
            self.rates[component] = terms
        return self.rates[component]

    def scalar(self, generator: Generator) -> Coefficient:
        if generator not in self.scalars:
            self.scalars[generator] = self._random_rational(-9, 9)
        return self.scalars[generator]

    def generator_value(self, generator: Generator) -> ExpSum:
        if generator in self.cache:
            return self.cache[generator]
        if isinstance(generator, SpaceVariable):
            value: ExpSum = {(QQ.zero, 1): QQ.one}
        elif isinstance(generator, JetVariable):
            value = {
                (rate, 0): weight * rate**generator.order
                for rate, weight in self.component_terms(generator.component)
            }
        elif isinstance(generator, AntiDeriv):
            value = antiderivative(self.evaluate(generator.body))
        else:
            value = {(QQ.zero, 0): self.scalar(generator)}
        self.cache[generator] = value
        return value

    def evaluate(self, p: DiffPoly) -> ExpSum:
        total: ExpSum = {}
        for monomial, coefficient in p.terms.items():
            term: ExpSum = {(QQ.zero, 0): coefficient}
            for generator, exponent in monomial:
                if exponent < 0:
                    factor = {(QQ.zero, 0): self.scalar(generator) ** exponent}
                    term = multiply(term, factor)
                    continue
                base = self.generator_value(generator)
                for _ in range(exponent):
                    term = multiply(term, base)
            for key, value in term.items():
                total[key] = total.get(key, 0) + value
        return {key: value for key, value in total.items() if value}


def multiply(left: ExpSum, right: ExpSum) -> ExpSum:
    product: ExpSum = {}
    for (rate_a, power_a), value_a in left.items():
        for (rate_b, power_b), value_b in right.items():
            key = (rate_a + rate_b, power_a + power_b)
            product[key] = product.get(key, 0) + value_a * value_b
    return {key: value for key, value in product.items() if value}


def antiderivative(value: ExpSum) -> ExpSum:
    result: ExpSum = {}
    for (rate, power), weight in value.items():
        if not rate:
            key = (rate, power + 1)
            result[key] = result.get(key, 0) + weight / (power + 1)
            continue
        # integral of x^p e^{mu x} from -inf, mu > 0
        for j in range(power + 1):
            falling = QQ(factorial(power), factorial(power - j))
            key = (rate, power - j)
            result[key] = result.get(key, 0) + weight * (-1) ** j * falling / rate ** (j + 1)
    return {key: v for key, v in result.items() if v}


@dataclass(frozen=True)
class SemanticComparer:
    options: EquivalenceOptions = EquivalenceOptions()

    @cached_property
    def _points(self) -> tuple[_TestPoint, ...]:
        seed = get_seed(self.options.seed)
        return tuple(
            _TestPoint(self.options, random.Random(seed + trial))  # noqa: S311
            for trial in range(self.options.trials)
        )

    def is_zero(self, p: DiffPoly) -> bool:
        if p.is_zero():
            return True
        if not p.has_antiderivs():
            return False
        return all(not point.evaluate(p) for point in self._points)


_DEFAULT_COMPARER = SemanticComparer()


def is_semantically_zero(p: DiffPoly, comparer: SemanticComparer | None = None) -> bool:
    return (comparer or _DEFAULT_COMPARER).is_zero(p)


def equivalent(
    left: DiffPoly,
    right: DiffPoly,
    comparer: SemanticComparer | None = None,
) -> bool:
    """True when both sides define the same differential function."""
    if left == right:
        return True
    difference = left - right
    if not difference.has_antiderivs():
        return False
    logger.trace("Falling back to semantic comparison for: {}", difference)
    return is_semantically_zero(difference, comparer)


def all_equivalent(
    left: Sequence[DiffPoly],
    right: Sequence[DiffPoly],
    comparer: SemanticComparer | None = None,
) -> bool:
    if len(left) != len(right):
        return False
    return all(equivalent(a, b, comparer) for a, b in zip(left, right))


def is_total_derivative(p: DiffPoly, components: int | None = None) -> bool:
    """
    True when ``p`` is an exact x-derivative. Decided by integration by parts; when
    antiderivative nodes survive, the variational derivative must vanish in every
    component.
    """
    residual = integrate_by_parts(p)[1]
    if residual.is_zero():
        return True
    if not residual.has_antiderivs():
        return False
    count = components or max(residual.max_component(), 1)
    return all(
        is_semantically_zero(euler_derivative(residual, component))
        for component in range(1, count + 1)
    )

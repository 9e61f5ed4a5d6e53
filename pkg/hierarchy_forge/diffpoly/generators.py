"""
Ring generators of the differential polynomial ring.

Scalar generators (parameters, the time coefficients ``k_m^(r)``, the time ``t``
and the spectral parameter) commute with the derivative and the formal
antiderivative. Field generators (``x``, jet variables, antiderivative nodes) do
not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Any, ClassVar, Mapping, Tuple, Union

from hierarchy_forge.exceptions import MalformedExpression

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import DiffPoly

SortKey = Tuple[Any, ...]


@dataclass(frozen=True)
class ParamSymbol:
    """Symbolic constant such as epsilon, alpha, beta1 or sigma."""

    name: str

    is_scalar: ClassVar[bool] = True
    tag: ClassVar[str] = "param"

    @cached_property
    def sort_key(self) -> SortKey:
        return (0, self.name)


@dataclass(frozen=True)
class TimeSymbol:
    """The coefficient ``k_m(t)`` of the spectral drift and its formal t-derivatives."""

    index: int
    order: int = 0

    is_scalar: ClassVar[bool] = True
    tag: ClassVar[str] = "k"

    def __post_init__(self) -> None:
        if self.index < 0 or self.order < 0:
            msg = f"Time coefficient needs nonnegative index and order, got k{self.index}^({self.order})."
            raise MalformedExpression(msg)

    @cached_property
    def sort_key(self) -> SortKey:
        return (1, self.index, self.order)


@dataclass(frozen=True)
class TimeVariable:
    is_scalar: ClassVar[bool] = True
    tag: ClassVar[str] = "t"

    @cached_property
    def sort_key(self) -> SortKey:
        return (2,)


@dataclass(frozen=True)
class SpectralParameter:
    is_scalar: ClassVar[bool] = True
    tag: ClassVar[str] = "lambda"

    @cached_property
    def sort_key(self) -> SortKey:
        return (3,)


@dataclass(frozen=True)
class SpaceVariable:
    is_scalar: ClassVar[bool] = False
    tag: ClassVar[str] = "x"

    @cached_property
    def sort_key(self) -> SortKey:
        return (4,)


@dataclass(frozen=True)
class JetVariable:
    """``u_i^(d)``: the d-th x-derivative of the i-th field component."""

    component: int
    order: int = 0

    is_scalar: ClassVar[bool] = False
    tag: ClassVar[str] = "jet"

    def __post_init__(self) -> None:
        if self.component < 1:
            msg = f"Field components are numbered from 1, got {self.component}."
            raise MalformedExpression(msg)
        if self.order < 0:
            msg = f"Jet order must be nonnegative, got {self.order}."
            raise MalformedExpression(msg)

    @cached_property
    def sort_key(self) -> SortKey:
        return (5, self.component, self.order)

    def shifted(self, by: int = 1) -> JetVariable:
        return JetVariable(self.component, self.order + by)


@dataclass(frozen=True)
class AntiDeriv:
    """
    Formal antiderivative node. The body is a single field monomial with
    coefficient one; scalar factors and exactly integrable parts are always
    pulled out before a node is formed.
    """

    body: DiffPoly

    is_scalar: ClassVar[bool] = False
    tag: ClassVar[str] = "antideriv"

    @cached_property
    def sort_key(self) -> SortKey:
        return (6, self.body.sort_key)

    @cached_property
    def weight(self) -> int:
        return 1 + sum(
            monomial_atom_weight(monomial) for monomial in self.body.terms
        )


Generator = Union[
    ParamSymbol,
    TimeSymbol,
    TimeVariable,
    SpectralParameter,
    SpaceVariable,
    JetVariable,
    AntiDeriv,
]
Monomial = Tuple[Tuple[Generator, int], ...]

X = SpaceVariable()
T = TimeVariable()
LAMBDA = SpectralParameter()
EMPTY_MONOMIAL: Monomial = ()


def _generator_key(item: tuple[Generator, int]) -> SortKey:
    return item[0].sort_key


def make_monomial(powers: Mapping[Generator, int]) -> Monomial:
    items = []
    for generator, exponent in powers.items():
        if exponent == 0:
            continue
        if exponent < 0 and not isinstance(generator, ParamSymbol):
            msg = f"Only parameters may carry negative exponents, got {generator!r}^{exponent}."
            raise MalformedExpression(msg)
        items.append((generator, exponent))
    items.sort(key=_generator_key)
    return tuple(items)


@lru_cache(maxsize=1 << 16)
def multiply_monomials(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    powers = dict(left)
    for generator, exponent in right:
        powers[generator] = powers.get(generator, 0) + exponent
    return make_monomial(powers)


def divide_monomials(numerator: Monomial, denominator: Monomial) -> Monomial | None:
    """Return ``numerator / denominator`` if it is a monomial with nonnegative exponents."""
    powers = dict(numerator)
    for generator, exponent in denominator:
        remaining = powers.get(generator, 0) - exponent
        if remaining < 0:
            return None
        powers[generator] = remaining
    return make_monomial(powers)


def monomial_key(monomial: Monomial) -> SortKey:
    degree = sum(exponent for _, exponent in monomial)
    return (degree, tuple((g.sort_key, e) for g, e in monomial))


@lru_cache(maxsize=1 << 16)
def split_scalar(monomial: Monomial) -> tuple[Monomial, Monomial]:
    scalar = tuple(item for item in monomial if item[0].is_scalar)
    field = tuple(item for item in monomial if not item[0].is_scalar)
    return scalar, field


def without_factor(monomial: Monomial, index: int) -> Monomial:
    """Lower the exponent at ``index`` by one, dropping the factor when it reaches zero."""
    generator, exponent = monomial[index]
    if exponent == 1:
        return monomial[:index] + monomial[index + 1 :]
    return monomial[:index] + ((generator, exponent - 1),) + monomial[index + 1 :]


def exponent_of(monomial: Monomial, generator: Generator) -> int:
    for candidate, exponent in monomial:
        if candidate == generator:
            return exponent
    return 0


def top_jet(monomial: Monomial) -> JetVariable | None:
    jets = [g for g, _ in monomial if isinstance(g, JetVariable)]
    if not jets:
        return None
    return max(jets, key=lambda jet: jet.sort_key)


def monomial_atom_weight(monomial: Monomial) -> int:
    return sum(
        exponent * generator.weight
        for generator, exponent in monomial
        if isinstance(generator, AntiDeriv)
    )

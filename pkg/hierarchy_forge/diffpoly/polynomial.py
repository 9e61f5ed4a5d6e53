from __future__ import annotations

from typing import TYPE_CHECKING, Iterator, Mapping, Union

from frozendict import frozendict

from hierarchy_forge.diffpoly.coefficients import ONE, Coefficient, to_coefficient
from hierarchy_forge.diffpoly.generators import (
    EMPTY_MONOMIAL,
    AntiDeriv,
    Generator,
    JetVariable,
    Monomial,
    SortKey,
    make_monomial,
    monomial_key,
    multiply_monomials,
    split_scalar,
)
from hierarchy_forge.exceptions import MalformedExpression

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Basic

Scalar = Union[int, str, Coefficient]


class DiffPoly:
    """
    Canonical differential polynomial.

    A DiffPoly is an immutable map from monomials to nonzero exact rational
    coefficients. Monomials are sorted tuples of ``(generator, exponent)`` pairs,
    so two DiffPoly objects are equal exactly when their term maps are equal.
    Iteration and rendering follow the fixed monomial order of ``monomial_key``.
    """

    __slots__ = ("_terms", "_hash", "_sort_key")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None) -> None:
        cleaned = {m: c for m, c in (terms or {}).items() if c}
        self._terms: frozendict[Monomial, Coefficient] = frozendict(cleaned)
        self._hash: int | None = None
        self._sort_key: SortKey | None = None

    @classmethod
    def zero(cls) -> DiffPoly:
        return cls()

    @classmethod
    def one(cls) -> DiffPoly:
        return cls({EMPTY_MONOMIAL: ONE})

    @classmethod
    def constant(cls, value: Scalar) -> DiffPoly:
        return cls({EMPTY_MONOMIAL: to_coefficient(value)})

    @classmethod
    def from_generator(cls, generator: Generator, exponent: int = 1) -> DiffPoly:
        return cls({make_monomial({generator: exponent}): ONE})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient: Scalar = 1) -> DiffPoly:
        return cls({monomial: to_coefficient(coefficient)})

    @classmethod
    def jet(cls, component: int = 1, order: int = 0) -> DiffPoly:
        return cls.from_generator(JetVariable(component, order))

    @classmethod
    def parse(cls, expression: str | Basic, *, components: int | None = None) -> DiffPoly:
        from hierarchy_forge.diffpoly.parsing import normalize

        return normalize(expression, components=components)

    @property
    def terms(self) -> frozendict[Monomial, Coefficient]:
        return self._terms

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]))

    @property
    def sort_key(self) -> SortKey:
        if self._sort_key is None:
            self._sort_key = tuple(
                (monomial_key(m), (int(c.numerator), int(c.denominator)))
                for m, c in self.sorted_terms()
            )
        return self._sort_key

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == EMPTY_MONOMIAL for m in self._terms)

    def is_scalar(self) -> bool:
        """True when only scalar generators occur, so the polynomial commutes with D."""
        return all(all(g.is_scalar for g, _ in m) for m in self._terms)

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            msg = f"Expected a rational constant, got {self}."
            raise MalformedExpression(msg)
        return self._terms.get(EMPTY_MONOMIAL, to_coefficient(0))

    def generators(self) -> set[Generator]:
        return {g for m in self._terms for g, _ in m}

    def antiderivs(self) -> set[AntiDeriv]:
        return {g for g in self.generators() if isinstance(g, AntiDeriv)}

    def has_antiderivs(self) -> bool:
        return any(isinstance(g, AntiDeriv) for m in self._terms for g, _ in m)

    def max_component(self) -> int:
        components = [0]
        for generator in self.generators():
            if isinstance(generator, JetVariable):
                components.append(generator.component)
            elif isinstance(generator, AntiDeriv):
                components.append(generator.body.max_component())
        return max(components)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self._terms.get(monomial, to_coefficient(0))

    def split_by_scalar(self) -> dict[Monomial, DiffPoly]:
        """Group terms by their field part: ``{field monomial: scalar coefficient}``."""
        grouped: dict[Monomial, dict[Monomial, Coefficient]] = {}
        for monomial, coefficient in self._terms.items():
            scalar, field = split_scalar(monomial)
            bucket = grouped.setdefault(field, {})
            bucket[scalar] = bucket.get(scalar, 0) + coefficient
        return {field: DiffPoly(bucket) for field, bucket in grouped.items()}

    def __iter__(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: DiffPoly | Scalar) -> DiffPoly:
        other_poly = _coerce(other)
        if not other_poly._terms:
            return self
        if not self._terms:
            return other_poly
        merged = dict(self._terms)
        for monomial, coefficient in other_poly._terms.items():
            merged[monomial] = merged.get(monomial, 0) + coefficient
        return DiffPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> DiffPoly:
        return DiffPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: DiffPoly | Scalar) -> DiffPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: DiffPoly | Scalar) -> DiffPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: DiffPoly | Scalar) -> DiffPoly:
        if not isinstance(other, DiffPoly):
            factor = to_coefficient(other)
            if not factor:
                return DiffPoly()
            return DiffPoly({m: c * factor for m, c in self._terms.items()})
        if not self._terms or not other._terms:
            return DiffPoly()
        product: dict[Monomial, Coefficient] = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in other._terms.items():
                monomial = multiply_monomials(left, right)
                product[monomial] = (
                    product.get(monomial, 0) + left_coefficient * right_coefficient
                )
        return DiffPoly(product)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> DiffPoly:
        divisor = to_coefficient(other)
        if not divisor:
            msg = "Division by zero."
            raise ZeroDivisionError(msg)
        return DiffPoly({m: c / divisor for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> DiffPoly:
        if exponent < 0:
            msg = "Only nonnegative powers are defined in the ring."
            raise MalformedExpression(msg)
        result = DiffPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        return f"DiffPoly({self})"

    def __str__(self) -> str:
        from hierarchy_forge.diffpoly.formatting import format_text

        return format_text(self)


def _coerce(value: DiffPoly | Scalar) -> DiffPoly:
    if isinstance(value, DiffPoly):
        return value
    return DiffPoly.constant(value)


def as_diffpoly(value: DiffPoly | Scalar) -> DiffPoly:
    return _coerce(value)

"""
Formal pseudo-differential operators over differential polynomials.

An ``OperatorEntry`` is a finite sum

    sum_k a_k D^k  +  sum s * f Dinv g

with differential-polynomial coefficients ``a_k`` (k >= 0), field monomials ``f``,
``g`` and scalar weights ``s``. Every product of two entries is again of this
form, so operator matrices compose exactly. ``OperatorExpr`` is a square matrix
of entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING, Any, Callable, Dict, Iterator, Mapping, Sequence, Tuple

from frozendict import frozendict

from hierarchy_forge.diffpoly.calculus import d_x, gateaux_poly, int_x, partial
from hierarchy_forge.diffpoly.formatting import format_latex, format_text
from hierarchy_forge.diffpoly.flow_vector import FlowVector
from hierarchy_forge.diffpoly.generators import (
    JetVariable,
    Monomial,
    split_scalar,
)
from hierarchy_forge.diffpoly.parsing import normalize
from hierarchy_forge.diffpoly.polynomial import DiffPoly, as_diffpoly
from hierarchy_forge.exceptions import DimensionMismatch, EmptyInput

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import Scalar

NonlocalKey = Tuple[Monomial, Monomial]


def _poly(value: DiffPoly | str | int) -> DiffPoly:
    return normalize(value)


def _add_to(target: Dict[Any, DiffPoly], key: Any, value: DiffPoly) -> None:
    if value.is_zero():
        return
    total = target.get(key, DiffPoly()) + value
    if total.is_zero():
        target.pop(key, None)
    else:
        target[key] = total


def _add_nonlocal(
    target: dict[NonlocalKey, DiffPoly],
    left: DiffPoly,
    right: DiffPoly,
) -> None:
    """Add ``left Dinv right``, expanded bilinearly with scalar factors pulled out."""
    for left_monomial, left_coefficient in left.terms.items():
        left_scalar, left_field = split_scalar(left_monomial)
        for right_monomial, right_coefficient in right.terms.items():
            right_scalar, right_field = split_scalar(right_monomial)
            weight = DiffPoly.from_monomial(left_scalar, left_coefficient) * DiffPoly.from_monomial(
                right_scalar, right_coefficient
            )
            _add_to(target, (left_field, right_field), weight)


def _derivative_times(order: int, coefficient: DiffPoly, target: dict[int, DiffPoly], shift: int = 0) -> None:
    """Add ``D^order o coefficient`` (times ``D^shift``) expanded by Leibniz."""
    derivative = coefficient
    for j in range(order + 1):
        _add_to(target, order - j + shift, derivative * comb(order, j))
        derivative = d_x(derivative)


@dataclass(frozen=True)
class OperatorEntry:
    local: frozendict[int, DiffPoly]
    nonlocal_terms: frozendict[NonlocalKey, DiffPoly]

    @classmethod
    def from_parts(
        cls,
        local: Mapping[int, DiffPoly] | None = None,
        nonlocal_terms: Mapping[NonlocalKey, DiffPoly] | None = None,
    ) -> OperatorEntry:
        return cls(
            frozendict({k: v for k, v in (local or {}).items() if not v.is_zero()}),
            frozendict({k: v for k, v in (nonlocal_terms or {}).items() if not v.is_zero()}),
        )

    @classmethod
    def build(
        cls,
        local: Mapping[int, DiffPoly | str | int] | None = None,
        nonlocal_terms: Sequence[tuple[DiffPoly | str | int, DiffPoly | str | int]] = (),
    ) -> OperatorEntry:
        """
        Build ``sum_k local[k] D^k + sum f Dinv g`` from raw expressions, e.g.
        ``build({2: 1, 0: "4*u"}, [("2*u_x", 1)])`` is ``D^2 + 4u + 2u_x Dinv``.
        """
        local_terms: dict[int, DiffPoly] = {}
        for order, coefficient in (local or {}).items():
            if order < 0:
                msg = f"Local derivative orders are nonnegative, got {order}."
                raise DimensionMismatch(msg)
            _add_to(local_terms, order, _poly(coefficient))
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for left, right in nonlocal_terms:
            _add_nonlocal(nonlocal_map, _poly(left), _poly(right))
        return cls.from_parts(local_terms, nonlocal_map)

    @classmethod
    def zero(cls) -> OperatorEntry:
        return cls.from_parts()

    @classmethod
    def multiplication(cls, coefficient: DiffPoly | Scalar) -> OperatorEntry:
        return cls.from_parts({0: as_diffpoly(coefficient)})

    @classmethod
    def derivative(cls, order: int = 1, coefficient: DiffPoly | Scalar = 1) -> OperatorEntry:
        return cls.from_parts({order: as_diffpoly(coefficient)})

    @classmethod
    def inverse_derivative(cls) -> OperatorEntry:
        return cls.from_parts(nonlocal_terms={((), ()): DiffPoly.one()})

    def is_zero(self) -> bool:
        return not self.local and not self.nonlocal_terms

    def is_local(self) -> bool:
        return not self.nonlocal_terms

    def order(self) -> int:
        if self.local:
            return max(self.local)
        return -1 if self.nonlocal_terms else 0

    def nonlocal_items(self) -> Iterator[tuple[DiffPoly, DiffPoly, DiffPoly]]:
        """Yield ``(weight, f, g)`` for each ``weight * f Dinv g`` term."""
        for (left, right), weight in self.nonlocal_terms.items():
            yield weight, DiffPoly.from_monomial(left), DiffPoly.from_monomial(right)

    def __add__(self, other: OperatorEntry) -> OperatorEntry:
        local = dict(self.local)
        for order, coefficient in other.local.items():
            _add_to(local, order, coefficient)
        nonlocal_map = dict(self.nonlocal_terms)
        for key, weight in other.nonlocal_terms.items():
            _add_to(nonlocal_map, key, weight)
        return OperatorEntry.from_parts(local, nonlocal_map)

    def __neg__(self) -> OperatorEntry:
        return self.scaled(-1)

    def __sub__(self, other: OperatorEntry) -> OperatorEntry:
        return self + (-other)

    def scaled(self, factor: DiffPoly | Scalar) -> OperatorEntry:
        """Left multiplication by ``factor``."""
        scale = as_diffpoly(factor)
        local = {k: scale * v for k, v in self.local.items()}
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for weight, left, right in self.nonlocal_items():
            _add_nonlocal(nonlocal_map, scale * weight * left, right)
        return OperatorEntry.from_parts(local, nonlocal_map)

    def __matmul__(self, other: OperatorEntry) -> OperatorEntry:
        local: dict[int, DiffPoly] = {}
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for k, a in self.local.items():
            for order, b in other.local.items():
                partial_terms: dict[int, DiffPoly] = {}
                _derivative_times(k, b, partial_terms, shift=order)
                for key, value in partial_terms.items():
                    _add_to(local, key, a * value)
            for weight, f, g in other.nonlocal_items():
                derivative = f
                for j in range(k + 1):
                    factor = a * weight * derivative * comb(k, j)
                    if j == k:
                        _add_nonlocal(nonlocal_map, factor, g)
                    else:
                        inner: dict[int, DiffPoly] = {}
                        _derivative_times(k - j - 1, g, inner)
                        for key, value in inner.items():
                            _add_to(local, key, factor * value)
                    derivative = d_x(derivative)
        for weight, f, g in self.nonlocal_items():
            for order, b in other.local.items():
                h = g * b
                for j in range(order):
                    _add_to(local, order - 1 - j, weight * f * d_x(h, j) * (-1) ** j)
                _add_nonlocal(nonlocal_map, weight * f * (-1) ** order, d_x(h, order))
            for other_weight, f2, g2 in other.nonlocal_items():
                inner_integral = int_x(g * f2)
                scale = weight * other_weight
                _add_nonlocal(nonlocal_map, scale * f * inner_integral, g2)
                _add_nonlocal(nonlocal_map, -scale * f, inner_integral * g2)
        return OperatorEntry.from_parts(local, nonlocal_map)

    def adjoint(self) -> OperatorEntry:
        local: dict[int, DiffPoly] = {}
        for k, a in self.local.items():
            terms: dict[int, DiffPoly] = {}
            _derivative_times(k, a, terms)
            for key, value in terms.items():
                _add_to(local, key, value * (-1) ** k)
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for weight, f, g in self.nonlocal_items():
            _add_nonlocal(nonlocal_map, -weight * g, f)
        return OperatorEntry.from_parts(local, nonlocal_map)

    def apply(self, v: DiffPoly) -> DiffPoly:
        result = DiffPoly()
        for k, a in self.local.items():
            result = result + a * d_x(v, k)
        for weight, f, g in self.nonlocal_items():
            result = result + weight * f * int_x(g * v)
        return result

    def gateaux(self, direction: Sequence[DiffPoly]) -> OperatorEntry:
        """Operator-valued directional derivative: coefficients are differentiated."""
        local = {k: gateaux_poly(a, direction) for k, a in self.local.items()}
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for weight, f, g in self.nonlocal_items():
            _add_nonlocal(nonlocal_map, weight * gateaux_poly(f, direction), g)
            _add_nonlocal(nonlocal_map, weight * f, gateaux_poly(g, direction))
        return OperatorEntry.from_parts(local, nonlocal_map)

    def map_coefficients(self, function: Callable[[DiffPoly], DiffPoly]) -> OperatorEntry:
        local = {k: function(a) for k, a in self.local.items()}
        nonlocal_map: dict[NonlocalKey, DiffPoly] = {}
        for weight, f, g in self.nonlocal_items():
            _add_nonlocal(nonlocal_map, function(weight * f), function(g))
        return OperatorEntry.from_parts(local, nonlocal_map)

    def _pieces(
        self,
        render: Callable[[DiffPoly], str],
        derivative: str,
        inverse: str,
        times: str,
    ) -> list[str]:
        pieces: list[str] = []
        for k in sorted(self.local, reverse=True):
            coefficient = self.local[k]
            if k == 0:
                pieces.append(f"({render(coefficient)})")
                continue
            power = derivative if k == 1 else f"{derivative}^{k}"
            if coefficient == DiffPoly.one():
                pieces.append(power)
            else:
                pieces.append(f"({render(coefficient)}){times}{power}")
        for weight, f, g in self.nonlocal_items():
            left = render(weight * f)
            piece = f"({left}){times}{inverse}"
            if g != DiffPoly.one():
                piece += f"{times}({render(g)})"
            pieces.append(piece)
        return pieces

    def to_text(self, *, indexed: bool | None = None) -> str:
        pieces = self._pieces(lambda p: format_text(p, indexed=indexed), "D", "Dinv", "*")
        return " + ".join(pieces) if pieces else "0"

    def to_latex(self, *, indexed: bool | None = None) -> str:
        pieces = self._pieces(lambda p: format_latex(p, indexed=indexed), r"\partial", r"\partial^{-1}", " ")
        return " + ".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.to_text()


def _entry_rows(rows: Sequence[Sequence[OperatorEntry]]) -> tuple[tuple[OperatorEntry, ...], ...]:
    if not rows:
        msg = "An operator matrix needs at least one row."
        raise EmptyInput(msg)
    size = len(rows)
    if any(len(row) != size for row in rows):
        msg = "Operator matrices must be square."
        raise DimensionMismatch(msg)
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class OperatorExpr:
    """Square matrix of pseudo-differential operator entries acting on flow vectors."""

    rows: tuple[tuple[OperatorEntry, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _entry_rows(self.rows))

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[OperatorEntry]]) -> OperatorExpr:
        return cls(_entry_rows(rows))

    @classmethod
    def scalar(cls, entry: OperatorEntry) -> OperatorExpr:
        return cls(((entry,),))

    @classmethod
    def diagonal(cls, entries: Sequence[OperatorEntry]) -> OperatorExpr:
        size = len(entries)
        return cls(
            tuple(
                tuple(entries[i] if i == j else OperatorEntry.zero() for j in range(size))
                for i in range(size)
            )
        )

    @classmethod
    def identity(cls, size: int) -> OperatorExpr:
        return cls.diagonal([OperatorEntry.multiplication(1)] * size)

    @classmethod
    def zero(cls, size: int) -> OperatorExpr:
        return cls.diagonal([OperatorEntry.zero()] * size)

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, row: int, column: int) -> OperatorEntry:
        return self.rows[row][column]

    def _check_size(self, other: OperatorExpr) -> None:
        if self.size != other.size:
            msg = f"Operators of size {self.size} and {other.size} do not match."
            raise DimensionMismatch(msg)

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        self._check_size(other)
        return OperatorExpr(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __neg__(self) -> OperatorExpr:
        return OperatorExpr(tuple(tuple(-a for a in row) for row in self.rows))

    def __sub__(self, other: OperatorExpr) -> OperatorExpr:
        return self + (-other)

    def scaled(self, factor: DiffPoly | Scalar) -> OperatorExpr:
        return OperatorExpr(tuple(tuple(a.scaled(factor) for a in row) for row in self.rows))

    def __matmul__(self, other: OperatorExpr) -> OperatorExpr:
        self._check_size(other)
        rows = []
        for i in range(self.size):
            row = []
            for j in range(self.size):
                total = OperatorEntry.zero()
                for k in range(self.size):
                    total = total + (self.rows[i][k] @ other.rows[k][j])
                row.append(total)
            rows.append(tuple(row))
        return OperatorExpr(tuple(rows))

    def __pow__(self, exponent: int) -> OperatorExpr:
        result = OperatorExpr.identity(self.size)
        for _ in range(exponent):
            result = self @ result
        return result

    def adjoint(self) -> OperatorExpr:
        return OperatorExpr(
            tuple(
                tuple(self.rows[j][i].adjoint() for j in range(self.size))
                for i in range(self.size)
            )
        )

    def apply(self, v: FlowVector) -> FlowVector:
        if v.dimension != self.size:
            msg = f"Cannot apply a {self.size}x{self.size} operator to a vector of dimension {v.dimension}."
            raise DimensionMismatch(msg)
        return FlowVector(
            tuple(
                sum((entry.apply(component) for entry, component in zip(row, v)), DiffPoly())
                for row in self.rows
            )
        )

    def gateaux(self, direction: FlowVector) -> OperatorExpr:
        if direction.dimension != self.size:
            msg = f"Direction of dimension {direction.dimension} for an operator of size {self.size}."
            raise DimensionMismatch(msg)
        return OperatorExpr(
            tuple(tuple(a.gateaux(direction.components) for a in row) for row in self.rows)
        )

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def is_local(self) -> bool:
        return all(a.is_local() for row in self.rows for a in row)

    def to_text(self) -> str:
        indexed = self.size > 1
        rows = ("[" + ", ".join(a.to_text(indexed=indexed) for a in row) + "]" for row in self.rows)
        return "[" + ", ".join(rows) + "]"

    def to_latex(self) -> str:
        indexed = self.size > 1
        rows = r" \\ ".join(" & ".join(a.to_latex(indexed=indexed) for a in row) for row in self.rows)
        return f"\\begin{{pmatrix}} {rows} \\end{{pmatrix}}"

    def __str__(self) -> str:
        return self.to_text()


def apply_operator(operator: OperatorExpr, v: FlowVector) -> FlowVector:
    return operator.apply(v)


def adjoint(operator: OperatorExpr) -> OperatorExpr:
    return operator.adjoint()


def linearization_entry(p: DiffPoly, component: int) -> OperatorEntry:
    """The operator ``L`` with ``L(s) = p'[s e_component]``."""
    local: dict[int, DiffPoly] = {}
    for generator in p.generators():
        if isinstance(generator, JetVariable) and generator.component == component:
            _add_to(local, generator.order, partial(p, generator))
    entry = OperatorEntry.from_parts(local)
    for generator in p.antiderivs():
        inner = linearization_entry(generator.body, component)
        if inner.is_zero():
            continue
        outer = OperatorEntry.multiplication(partial(p, generator))
        entry = entry + (outer @ (OperatorEntry.inverse_derivative() @ inner))
    return entry


def frechet_operator(target: FlowVector) -> OperatorExpr:
    """The linear operator ``F'`` with ``F'(s) = gateaux(F, s)``."""
    size = target.dimension
    return OperatorExpr(
        tuple(
            tuple(linearization_entry(entry, j) for j in range(1, size + 1))
            for entry in target
        )
    )


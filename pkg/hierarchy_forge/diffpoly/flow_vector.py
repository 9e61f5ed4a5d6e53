from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterator, Sequence

from hierarchy_forge.diffpoly.calculus import d_t, d_x, gateaux_poly
from hierarchy_forge.diffpoly.equivalence import all_equivalent
from hierarchy_forge.diffpoly.formatting import format_latex, format_text
from hierarchy_forge.diffpoly.parsing import normalize
from hierarchy_forge.diffpoly.polynomial import DiffPoly, as_diffpoly
from hierarchy_forge.exceptions import DimensionMismatch, EmptyInput

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Basic

    from hierarchy_forge.diffpoly.equivalence import SemanticComparer
    from hierarchy_forge.diffpoly.polynomial import Scalar


@dataclass(frozen=True)
class FlowVector:
    """
    An N-vector of differential polynomials: a vector field on jet space such
    as a hierarchy flow, a symmetry or a test direction.
    """

    components: tuple[DiffPoly, ...]

    def __post_init__(self) -> None:
        if not self.components:
            msg = "A flow vector needs at least one component."
            raise EmptyInput(msg)

    @classmethod
    def of(cls, *entries: DiffPoly | str | Basic | int) -> FlowVector:
        dimension = len(entries)
        return cls(tuple(normalize(entry, components=dimension) for entry in entries))

    @classmethod
    def zero(cls, dimension: int) -> FlowVector:
        return cls(tuple(DiffPoly() for _ in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[DiffPoly]:
        return iter(self.components)

    def __getitem__(self, index: int) -> DiffPoly:
        return self.components[index]

    def check_same_dimension(self, other: FlowVector) -> None:
        if self.dimension != other.dimension:
            msg = f"Flow vectors of dimension {self.dimension} and {other.dimension} do not match."
            raise DimensionMismatch(msg)

    def __add__(self, other: FlowVector) -> FlowVector:
        self.check_same_dimension(other)
        return FlowVector(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: FlowVector) -> FlowVector:
        self.check_same_dimension(other)
        return FlowVector(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> FlowVector:
        return FlowVector(tuple(-a for a in self))

    def __mul__(self, factor: DiffPoly | Scalar) -> FlowVector:
        scale = as_diffpoly(factor)
        return FlowVector(tuple(a * scale for a in self))

    __rmul__ = __mul__

    def map(self, function: Callable[[DiffPoly], DiffPoly]) -> FlowVector:
        return FlowVector(tuple(function(a) for a in self))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self)

    def equivalent(self, other: FlowVector, comparer: SemanticComparer | None = None) -> bool:
        return self.dimension == other.dimension and all_equivalent(
            self.components, other.components, comparer
        )

    def pairing(self, other: FlowVector) -> DiffPoly:
        """Componentwise product summed: the integrand of the L2 inner product."""
        self.check_same_dimension(other)
        total = DiffPoly()
        for a, b in zip(self, other):
            total = total + a * b
        return total

    def to_text(self) -> str:
        indexed = self.dimension > 1
        return "(" + "; ".join(format_text(a, indexed=indexed) for a in self) + ")"

    def to_latex(self) -> str:
        indexed = self.dimension > 1
        rows = r" \\ ".join(format_latex(a, indexed=indexed) for a in self)
        return f"\\begin{{pmatrix}} {rows} \\end{{pmatrix}}"

    def __str__(self) -> str:
        return self.to_text()


def gateaux(target: FlowVector, direction: FlowVector) -> FlowVector:
    """``target'[direction]``: the directional derivative in jet space."""
    target.check_same_dimension(direction)
    return FlowVector(tuple(gateaux_poly(entry, direction.components) for entry in target))


def d_x_flow(flow: FlowVector, times: int = 1) -> FlowVector:
    return FlowVector(tuple(d_x(entry, times) for entry in flow))


def total_time_derivative(flow: FlowVector, along: FlowVector) -> FlowVector:
    """Time derivative of ``flow`` when ``u_t = along``: explicit ``t`` part plus chain rule."""
    return d_t_flow(flow) + gateaux(flow, along)


def d_t_flow(flow: FlowVector) -> FlowVector:
    return FlowVector(tuple(d_t(entry) for entry in flow))


def as_flow(entries: FlowVector | Sequence[DiffPoly]) -> FlowVector:
    if isinstance(entries, FlowVector):
        return entries
    return FlowVector(tuple(entries))

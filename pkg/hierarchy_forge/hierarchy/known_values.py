"""
Published coefficient tables and named equations.

Each entry is written in the input syntax of ``normalize``. Entries whose
``matches_recursion`` flag is False are known misprints: they are compared and
reported, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from hierarchy_forge.diffpoly import DiffPoly, FlowVector, equivalent, normalize
from hierarchy_forge.exceptions import BadSpec
from hierarchy_forge.spectral import ModelKind, SeedProfile

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import SemanticComparer
    from hierarchy_forge.hierarchy.recursion import RecursionTable
    from hierarchy_forge.spectral import SpectralModel


@dataclass(frozen=True)
class PrintedCoefficient:
    letter: str
    block: int
    index: int
    expression: str
    matches_recursion: bool = True
    note: str = ""

    @property
    def name(self) -> str:
        return f"{self.letter}_{{{self.block},{self.index}}}"

    def value(self, components: int) -> DiffPoly:
        return normalize(self.expression, components=components)


@dataclass(frozen=True)
class CoefficientComparison:
    printed: PrintedCoefficient
    computed: DiffPoly
    agrees: bool


SCALAR_COEFFICIENTS = (
    PrintedCoefficient("a", 1, 0, "0"),
    PrintedCoefficient("c", 1, 0, "alpha"),
    PrintedCoefficient("b", 1, 0, "-alpha*u/2 + k0*x/8"),
    PrintedCoefficient("a", 1, 1, "alpha*u_x + k0/4"),
    PrintedCoefficient("c", 1, 1, "2*alpha*u + k0*x/2"),
    PrintedCoefficient("c", 1, 2, "2*alpha*u_xx + 6*alpha*u**2 + k0*(x*u + Dinv(u)) + k1*x/2"),
    PrintedCoefficient(
        "b",
        1,
        1,
        "-alpha*u_xx/2 - alpha*u**2/2 - k0*(x*u + Dinv(u))/4 - k1*x/8 + k2*x/4",
        matches_recursion=False,
        note=(
            "the recursion gives -alpha*u_xx/2 - alpha*u**2/2 - k0*x*u/4 + k0*Dinv(u)/4 + k1*x/8"
        ),
    ),
)

# Block 2 carries the e, f, g family of the coupled tables.
COUPLED_COEFFICIENTS = (
    PrintedCoefficient("a", 1, 0, "0"),
    PrintedCoefficient("a", 2, 0, "0"),
    PrintedCoefficient("c", 1, 0, "alpha1"),
    PrintedCoefficient("c", 2, 0, "alpha2"),
    PrintedCoefficient("b", 1, 0, "-alpha1*u1/2 - eps*alpha2*u2/2 + k0*x/8"),
    PrintedCoefficient("b", 2, 0, "-alpha2*u1/2 - alpha1*u2/2 + k0*x/8"),
    PrintedCoefficient("a", 1, 1, "alpha1*u1_x + eps*alpha2*u2_x + k0/4"),
    PrintedCoefficient("a", 2, 1, "alpha2*u1_x + alpha1*u2_x + k0/4"),
    PrintedCoefficient("c", 1, 1, "2*alpha1*u1 + 2*eps*alpha2*u2 + k0*x/2"),
    PrintedCoefficient("c", 2, 1, "2*alpha2*u1 + 2*alpha1*u2 + k0*x/2"),
    PrintedCoefficient(
        "c",
        1,
        2,
        "2*alpha1*u1_xx + 2*eps*alpha2*u2_xx + 6*alpha1*u1**2 + 12*eps*alpha2*u1*u2"
        " + 6*eps*alpha1*u2**2 + k0*(x*(u1 + eps*u2) + Dinv(u1 + eps*u2)) + k1*x/2",
    ),
    PrintedCoefficient(
        "c",
        2,
        2,
        "2*alpha2*u1_xx + 2*alpha1*u2_xx + 6*alpha2*u1**2 + 12*alpha1*u1*u2"
        " + 6*eps*alpha2*u2**2 + k0*(x*(u1 + u2) + Dinv(u1 + u2)) + k1*x/2",
    ),
)

_MULTI_P = (
    "u1 + sigma*eps*(u2 + u3)",
    "u1 + u2 + sigma*eps*u3",
    "u1 + u2 + u3",
)
_MULTI_Q = (
    "u1**2 + 2*sigma*eps*u2*u3",
    "2*u1*u2 + sigma*eps*u3**2",
    "2*u1*u3 + u2**2",
)

# Three-component rows. The first-order rows are printed for c_{k,0} = beta1 in
# every block, the second-order rows for c_{1,0} = beta1 alone.
MULTI_UNIFORM_COEFFICIENTS = tuple(
    entry
    for k, p in enumerate(_MULTI_P, start=1)
    for entry in (
        PrintedCoefficient("c", k, 0, "beta1"),
        PrintedCoefficient("b", k, 0, f"-beta1*({p})/2 + k0*x/8"),
        PrintedCoefficient("a", k, 1, f"beta1*Dx({p}) + k0/4"),
        PrintedCoefficient("c", k, 1, f"2*beta1*({p}) + k0*x/2"),
    )
)
MULTI_LEADING_COEFFICIENTS = tuple(
    PrintedCoefficient(
        "c",
        k,
        2,
        f"2*beta1*u{k}_xx + 6*beta1*({q}) + k0*(x*({p}) + Dinv({p})) + k1*x/2",
    )
    for k, (p, q) in enumerate(zip(_MULTI_P, _MULTI_Q), start=1)
)


def printed_coefficients(model: SpectralModel) -> tuple[PrintedCoefficient, ...]:
    """Published rows that apply to ``model``; empty when nothing was published for it."""
    if model.kind is ModelKind.KDV:
        return SCALAR_COEFFICIENTS
    if model.kind is ModelKind.COUPLED:
        return COUPLED_COEFFICIENTS
    if model.n_components != 3:
        return ()
    if model.seed_profile is SeedProfile.UNIFORM:
        return MULTI_UNIFORM_COEFFICIENTS
    return MULTI_LEADING_COEFFICIENTS


def compare_with_printed(
    table: RecursionTable,
    printed: tuple[PrintedCoefficient, ...] | None = None,
    comparer: SemanticComparer | None = None,
) -> list[CoefficientComparison]:
    printed = printed_coefficients(table.model) if printed is None else printed
    components = table.model.n_components
    lookup = {"a": table.a, "b": table.b, "c": table.c}
    results = []
    for entry in printed:
        computed = lookup[entry.letter](entry.block, entry.index)
        results.append(
            CoefficientComparison(
                printed=entry,
                computed=computed,
                agrees=equivalent(computed, entry.value(components), comparer),
            ),
        )
    return results


@dataclass(frozen=True)
class NamedEquation:
    """A published flow and the model settings it belongs to."""

    name: str
    kind: ModelKind
    order: int
    components: tuple[str, ...]
    isospectral: bool = False
    parameters: tuple[tuple[str, str], ...] = ()
    profile: SeedProfile = SeedProfile.LEADING

    def flow(self) -> FlowVector:
        dimension = len(self.components)
        return FlowVector(tuple(normalize(c, components=dimension) for c in self.components))


NAMED_EQUATIONS = (
    NamedEquation(
        name="nonisospectral-kdv",
        kind=ModelKind.KDV,
        order=1,
        components=("alpha*(u_xxx + 6*u*u_x) + k0*(x*u_x + 2*u)/2 + k1/4",),
    ),
    NamedEquation(
        name="kdv",
        kind=ModelKind.KDV,
        order=1,
        components=("u_xxx + 6*u*u_x",),
        isospectral=True,
        parameters=(("alpha", "1"),),
    ),
    NamedEquation(
        name="coupled-nonisospectral-kdv",
        kind=ModelKind.COUPLED,
        order=1,
        components=(
            "alpha1*(u1_xxx + 6*u1*u1_x + 6*eps*u2*u2_x)"
            " + alpha2*(eps*u2_xxx + 6*eps*u2*u1_x + 6*eps*u1*u2_x)"
            " + k0*(2*u1 + 2*eps*u2 + x*u1_x + eps*x*u2_x)/2 + k1/4",
            "alpha1*(u2_xxx + 6*u1*u2_x + 6*u2*u1_x)"
            " + alpha2*(u1_xxx + 6*u1*u1_x + 6*eps*u2*u2_x)"
            " + k0*(2*u1 + 2*u2 + x*u1_x + x*u2_x)/2 + k1/4",
        ),
    ),
    NamedEquation(
        name="coupled-first-flow",
        kind=ModelKind.COUPLED,
        order=0,
        components=("u1_x", "u2_x"),
        isospectral=True,
        parameters=(("alpha1", "1"), ("alpha2", "0")),
    ),
    NamedEquation(
        name="frobenius-kdv",
        kind=ModelKind.COUPLED,
        order=1,
        components=(
            "u1_xxx + 6*u1*u1_x + 6*eps*u2*u2_x",
            "u2_xxx + 6*u1*u2_x + 6*u2*u1_x",
        ),
        isospectral=True,
        parameters=(("alpha1", "1"), ("alpha2", "0")),
    ),
    NamedEquation(
        name="multi-nonisospectral-kdv",
        kind=ModelKind.MULTI,
        order=1,
        components=tuple(
            f"beta1*u{k}_xxx + 3*beta1*Dx({q}) + k0*(2*({p}) + x*Dx({p}))/2 + k1/4"
            for k, (p, q) in enumerate(zip(_MULTI_P, _MULTI_Q), start=1)
        ),
    ),
    NamedEquation(
        name="multi-first-flow",
        kind=ModelKind.MULTI,
        order=0,
        components=tuple(f"beta1*Dx({p}) + k0/4" for p in _MULTI_P),
        profile=SeedProfile.UNIFORM,
    ),
)


def named_equation(name: str) -> NamedEquation:
    for equation in NAMED_EQUATIONS:
        if equation.name == name:
            return equation
    known = ", ".join(e.name for e in NAMED_EQUATIONS)
    msg = f"Unknown named equation {name!r}; expected one of {known}."
    raise BadSpec(msg)

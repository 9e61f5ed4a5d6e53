"""
Deriving and checking structure constants of the extended algebras.

Every element of an extended algebra is determined by its first block column, so
a commutator is expanded by writing each block of that column in the base
algebra. Whatever the expansion misses is returned as a residual matrix; a
nonzero residual means the bracket leaves the span.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

import sympy
from loguru import logger

from hierarchy_forge.liealg.base_algebras import expand_matrix, is_zero_matrix
from hierarchy_forge.liealg.embedding import commutator, first_block_column
from hierarchy_forge.liealg.printed_tables import printed_expectation
from hierarchy_forge.utils.env_var_helpers import get_seed

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Expr, ImmutableMatrix

    from hierarchy_forge.liealg.basis import LieBasis

Coefficients = tuple["Expr", ...]


@dataclass(frozen=True)
class StructureEntry:
    left: int
    right: int
    coefficients: Coefficients
    residual: ImmutableMatrix
    violations: tuple[str, ...] = ()
    discrepancies: tuple[str, ...] = ()

    @property
    def closed(self) -> bool:
        return is_zero_matrix(self.residual)

    @property
    def passed(self) -> bool:
        return not self.violations

    def nonzero_coefficients(self) -> dict[int, Expr]:
        return {k + 1: c for k, c in enumerate(self.coefficients) if c != 0}


@dataclass(frozen=True)
class StructureReport:
    basis: LieBasis
    entries: tuple[StructureEntry, ...]
    title: str = "structure constants"

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def failures(self) -> list[StructureEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def discrepancies(self) -> list[StructureEntry]:
        return [entry for entry in self.entries if entry.discrepancies]

    def entry(self, left: int, right: int) -> StructureEntry:
        for candidate in self.entries:
            if (candidate.left, candidate.right) == (left, right):
                return candidate
        msg = f"No entry for the pair ({left}, {right})."
        raise KeyError(msg)


@dataclass(frozen=True)
class JacobiReport:
    checked: int
    failures: tuple[tuple[int, int, int], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures


def expand_in_basis(basis: LieBasis, matrix: ImmutableMatrix) -> tuple[Coefficients, ImmutableMatrix]:
    coefficients: list[Expr] = []
    for block in first_block_column(matrix, basis.base.order):
        local, _ = basis.base.coordinates(block)
        coefficients.extend(local)
    as_tuple = tuple(coefficients)
    residual = expand_matrix(matrix - basis.combination(as_tuple))
    return as_tuple, residual


def bracket(basis: LieBasis, left: int, right: int) -> tuple[Coefficients, ImmutableMatrix]:
    return expand_in_basis(basis, commutator(basis.element(left), basis.element(right)))


def predicted_bracket(basis: LieBasis, left: int, right: int) -> Coefficients:
    """
    Bracket predicted from the base algebra alone: generators at blocks i and j
    combine at block ``i+j-1``, or at ``i+j-1-N`` with a factor epsilon.
    """
    left_block, left_generator = basis.block_index(left)
    right_block, right_generator = basis.block_index(right)
    block, wrapped = basis.target_block(left_block, right_block)
    base_constants = basis.base.structure_constants[left_generator - 1][right_generator - 1]
    result: list[Expr] = [sympy.Integer(0)] * len(basis)
    for generator, constant in enumerate(base_constants, start=1):
        value = constant * basis.epsilon if wrapped else constant
        result[basis.element_index(block, generator) - 1] = sympy.expand(value)
    return tuple(result)


def _as_vector(basis: LieBasis, expected: dict[int, object]) -> Coefficients:
    vector: list[Expr] = [sympy.Integer(0)] * len(basis)
    for index, value in expected.items():
        vector[index - 1] = sympy.sympify(value)
    return tuple(vector)


def _mismatches(
    basis: LieBasis,
    got: Coefficients,
    expected: Coefficients,
    what: str,
) -> list[str]:
    messages = []
    for index, (a, b) in enumerate(zip(got, expected), start=1):
        if sympy.expand(a - b) != 0:
            messages.append(f"coefficient of {basis.labels[index - 1]}: derived {a}, {what} {b}")
    return messages


def _pairs(basis: LieBasis) -> Iterable[tuple[int, int]]:
    return itertools.combinations(range(1, len(basis) + 1), 2)


def verify_structure_constants(basis: LieBasis) -> StructureReport:
    """
    Expand every bracket of basis elements. A pair fails when the bracket leaves
    the span or disagrees with the block rule derived from the base algebra.
    Published tables and indexed families are compared against the derived
    constants; a disagreement is a discrepancy, never a failure.
    """
    entries = []
    for left, right in _pairs(basis):
        coefficients, residual = bracket(basis, left, right)
        violations: list[str] = []
        discrepancies: list[str] = []
        if not is_zero_matrix(residual):
            violations.append("bracket is not in the span of the basis")
        violations.extend(
            _mismatches(basis, coefficients, predicted_bracket(basis, left, right), "block rule"),
        )
        printed = printed_expectation(basis, left, right)
        if printed is not None:
            discrepancies.extend(_mismatches(basis, coefficients, _as_vector(basis, printed), "published"))
        entries.append(
            StructureEntry(
                left=left,
                right=right,
                coefficients=coefficients,
                residual=residual,
                violations=tuple(violations),
                discrepancies=tuple(discrepancies),
            ),
        )
    logger.debug(
        "Checked {} brackets of {} (N={}), {} failures",
        len(entries),
        basis.case.value,
        basis.n_blocks,
        sum(not entry.passed for entry in entries),
    )
    return StructureReport(basis=basis, entries=tuple(entries))


def verify_grading(basis: LieBasis) -> StructureReport:
    """Check ``[G_i, G_j]`` lands in ``G_{i+j-1-delta N}`` for every block pair."""
    entries = []
    dimension = basis.base.dimension
    for left, right in _pairs(basis):
        left_block, _ = basis.block_index(left)
        right_block, _ = basis.block_index(right)
        target, _ = basis.target_block(left_block, right_block)
        coefficients, residual = bracket(basis, left, right)
        violations = []
        if not is_zero_matrix(residual):
            violations.append("bracket is not in the span of the basis")
        for index, value in enumerate(coefficients, start=1):
            block = (index - 1) // dimension + 1
            if block != target and value != 0:
                violations.append(
                    f"component {basis.labels[index - 1]} lies outside block {target}",
                )
        entries.append(
            StructureEntry(
                left=left,
                right=right,
                coefficients=coefficients,
                residual=residual,
                violations=tuple(violations),
            ),
        )
    return StructureReport(basis=basis, entries=tuple(entries), title="grading")


def structure_constants(report: StructureReport) -> dict[tuple[int, int], Coefficients]:
    """Complete antisymmetric table ``(i, j) -> coefficients`` from a report over i < j."""
    size = len(report.basis)
    zero: Coefficients = tuple(sympy.Integer(0) for _ in range(size))
    table: dict[tuple[int, int], Coefficients] = {(i, i): zero for i in range(1, size + 1)}
    for entry in report.entries:
        table[(entry.left, entry.right)] = entry.coefficients
        table[(entry.right, entry.left)] = tuple(-c for c in entry.coefficients)
    return table


def verify_jacobi(
    report: StructureReport,
    *,
    sample: int | None = None,
    seed: int | None = None,
) -> JacobiReport:
    """
    Jacobi identity on the derived constants. ``sample`` limits the check to
    that many random triples.
    """
    table = structure_constants(report)
    size = len(report.basis)
    triples = list(itertools.combinations(range(1, size + 1), 3))
    if sample is not None and sample < len(triples):
        rng = random.Random(get_seed(seed))  # noqa: S311
        triples = rng.sample(triples, sample)

    def nested(a: int, b: int, c: int) -> list[Expr]:
        # [[X_a, X_b], X_c]
        inner = table[(a, b)]
        total: list[Expr] = [sympy.Integer(0)] * size
        for index, weight in enumerate(inner, start=1):
            if weight == 0:
                continue
            for target, value in enumerate(table[(index, c)]):
                total[target] += weight * value
        return total

    failures = []
    for a, b, c in triples:
        cyclic = zip(nested(a, b, c), nested(b, c, a), nested(c, a, b))
        if any(sympy.expand(x + y + z) != 0 for x, y, z in cyclic):
            failures.append((a, b, c))
    return JacobiReport(checked=len(triples), failures=tuple(failures))

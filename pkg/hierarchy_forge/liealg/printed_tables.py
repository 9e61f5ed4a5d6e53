"""
Published commutator tables of the extended algebras.

The tables are kept as data to compare against; structure constants are always
derived from the matrices. Keys are 1-based element indices, values map a result
element to its coefficient. An empty value records a published zero bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Tuple

from hierarchy_forge.liealg.base_algebras import EPSILON
from hierarchy_forge.liealg.basis import LieCase

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Expr

    from hierarchy_forge.liealg.basis import LieBasis

PrintedTable = Dict[Tuple[int, int], Dict[int, object]]

eps = EPSILON

PRINTED_TABLES: dict[LieCase, PrintedTable] = {
    LieCase.A12: {
        (1, 2): {2: 2},
        (1, 3): {3: -2},
        (1, 4): {},
        (1, 5): {5: 2},
        (1, 6): {6: -2},
        (2, 3): {1: 1},
        (2, 4): {5: -2},
        (2, 5): {},
        (2, 6): {4: 1},
        (3, 4): {6: 2},
        (3, 5): {4: -1},
        (3, 6): {},
        (4, 5): {2: 2 * eps},
        (4, 6): {3: -2 * eps},
        (5, 6): {1: eps},
    },
    LieCase.A13: {
        (1, 2): {2: 2},
        (1, 3): {3: -2},
        (1, 5): {5: 2},
        (1, 6): {6: -2},
        (1, 8): {8: 2},
        (1, 9): {9: -2},
        (2, 3): {1: 1},
        (2, 4): {5: -2},
        (2, 6): {4: 1},
        (2, 7): {8: -2},
        (2, 9): {7: 1},
        (3, 4): {6: 2},
        (3, 5): {4: -1},
        (3, 7): {9: 2},
        (3, 8): {7: -1},
        (4, 5): {8: 2},
        (4, 6): {9: -2},
        (4, 8): {2: 2 * eps},
        (4, 9): {3: -2 * eps},
        (5, 6): {7: 1},
        (5, 7): {2: -2 * eps},
        (5, 9): {1: eps},
        (7, 8): {5: 2 * eps},
        (7, 9): {6: -2 * eps},
        (8, 9): {4: eps},
        (1, 4): {},
        (2, 5): {},
        (3, 6): {},
        (1, 7): {},
        (2, 8): {},
        (3, 9): {},
        (4, 7): {},
        (5, 8): {},
        (6, 9): {},
    },
    # Printed with [ebar, fbar] = +hbar; the four entries built on it are reported.
    LieCase.A22: {
        (1, 2): {3: 1},
        (1, 3): {2: 1},
        (1, 4): {},
        (1, 5): {6: 1},
        (1, 6): {5: 1},
        (2, 3): {1: 1},
        (2, 4): {6: -1},
        (2, 5): {},
        (2, 6): {4: 1},
        (3, 4): {5: -1},
        (3, 5): {4: -1},
        (3, 6): {},
        (4, 5): {3: eps},
        (4, 6): {2: eps},
        (5, 6): {1: eps},
    },
    LieCase.A32: {
        (1, 2): {3: 1},
        (1, 3): {2: -1},
        (1, 4): {},
        (1, 5): {6: 1},
        (1, 6): {5: -1},
        (2, 3): {1: 1},
        (2, 4): {6: -1},
        (2, 5): {},
        (2, 6): {4: 1},
        (3, 4): {5: 1},
        (3, 5): {4: -1},
        (3, 6): {},
        (4, 5): {3: eps},
        (4, 6): {2: -eps},
        (5, 6): {1: eps},
    },
}


@dataclass(frozen=True)
class IndexedFamily:
    """
    A published rule ``[X_{3i-a}, X_{3k-b}] = c * X_{3(k+i-1)-r}`` with
    generators numbered 1..3 inside each block; past block N the result wraps
    to block ``k+i-1-N`` with an extra factor epsilon.
    """

    left: int
    right: int
    coefficient: int
    result: int | None


# Same-generator brackets vanish; the third published family of both cases is
# kept as printed.
PRINTED_INDEXED_FAMILIES: dict[LieCase, tuple[IndexedFamily, ...]] = {
    LieCase.A1N: (
        IndexedFamily(1, 1, 0, None),
        IndexedFamily(2, 2, 0, None),
        IndexedFamily(3, 3, 0, None),
        IndexedFamily(1, 2, 2, 2),
        IndexedFamily(1, 3, -2, 3),
        IndexedFamily(2, 1, 1, 1),
    ),
    LieCase.A2N: (
        IndexedFamily(1, 1, 0, None),
        IndexedFamily(2, 2, 0, None),
        IndexedFamily(3, 3, 0, None),
        IndexedFamily(1, 2, 1, 3),
        IndexedFamily(1, 3, 1, 2),
        IndexedFamily(2, 1, 1, 1),
    ),
}


def printed_table(basis: LieBasis) -> PrintedTable | None:
    if basis.case not in PRINTED_TABLES:
        return None
    table = PRINTED_TABLES[basis.case]
    if basis.epsilon == EPSILON:
        return table
    return {
        pair: {k: _specialize(value, basis.epsilon) for k, value in row.items()}
        for pair, row in table.items()
    }


def _specialize(value: object, epsilon: Expr | int) -> object:
    if hasattr(value, "subs"):
        return value.subs(EPSILON, epsilon)
    return value


def printed_expectation(basis: LieBasis, left: int, right: int) -> dict[int, object] | None:
    """Published value of ``[X_left, X_right]`` as ``{element: coefficient}``, if any."""
    table = printed_table(basis)
    if table is not None:
        return table.get((left, right))
    families = PRINTED_INDEXED_FAMILIES.get(basis.case)
    if families is None:
        return None
    left_block, left_generator = basis.block_index(left)
    right_block, right_generator = basis.block_index(right)
    for family in families:
        if (family.left, family.right) != (left_generator, right_generator):
            continue
        if family.result is None or family.coefficient == 0:
            return {}
        block, wrapped = basis.target_block(left_block, right_block)
        coefficient = family.coefficient * basis.epsilon if wrapped else family.coefficient
        return {basis.element_index(block, family.result): coefficient}
    return None

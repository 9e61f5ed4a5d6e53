from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from sympy import ImmutableMatrix, zeros

from hierarchy_forge.exceptions import DimensionMismatch, EmptyInput, MixedBlockOrder
from hierarchy_forge.liealg.base_algebras import EPSILON, expand_matrix

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Expr


def block_embed(blocks: Sequence[ImmutableMatrix], epsilon: Expr = EPSILON) -> ImmutableMatrix:
    """
    Assemble the cyclic block matrix ``M(A_1, ..., A_N)``.

    Block (r, c) is ``A_{r-c+1}`` on and below the diagonal and
    ``epsilon * A_{N+r-c+1}`` above it, so the first block column lists the
    arguments in order.
    """
    if not blocks:
        msg = "Cannot embed an empty list of blocks."
        raise EmptyInput(msg)
    order = blocks[0].shape[0]
    for block in blocks:
        if block.shape != (order, order):
            msg = f"All blocks must be square of order {order}, got shape {block.shape}."
            raise MixedBlockOrder(msg)
    count = len(blocks)
    result = zeros(count * order, count * order)
    for row in range(count):
        for column in range(count):
            if row >= column:
                block = blocks[row - column]
            else:
                block = epsilon * blocks[count + row - column]
            result[row * order : (row + 1) * order, column * order : (column + 1) * order] = block
    return expand_matrix(ImmutableMatrix(result))


def first_block_column(matrix: ImmutableMatrix, block_order: int) -> list[ImmutableMatrix]:
    count = matrix.shape[0] // block_order
    return [
        ImmutableMatrix(matrix[k * block_order : (k + 1) * block_order, 0:block_order])
        for k in range(count)
    ]


def commutator(left: ImmutableMatrix, right: ImmutableMatrix) -> ImmutableMatrix:
    if left.shape != right.shape or left.shape[0] != left.shape[1]:
        msg = f"Cannot take the commutator of matrices of shapes {left.shape} and {right.shape}."
        raise DimensionMismatch(msg)
    return expand_matrix(ImmutableMatrix(left * right - right * left))

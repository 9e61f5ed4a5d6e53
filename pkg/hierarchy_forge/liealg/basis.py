from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from loguru import logger
from sympy import ImmutableMatrix, zeros

from hierarchy_forge.exceptions import BadDimension, UnknownCase
from hierarchy_forge.liealg.base_algebras import (
    EPSILON,
    SL2,
    SL2_SYMMETRIC,
    SO3,
    BaseAlgebra,
    expand_matrix,
)
from hierarchy_forge.liealg.embedding import block_embed

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Expr


class LieCase(str, Enum):
    A12 = "A12"
    A13 = "A13"
    A1N = "A1N"
    A22 = "A22"
    A2N = "A2N"
    A32 = "A32"
    A3N = "A3N"

    @classmethod
    def parse(cls, value: LieCase | str) -> LieCase:
        if isinstance(value, LieCase):
            return value
        try:
            return cls(value.strip().upper())
        except ValueError:
            known = ", ".join(case.value for case in cls)
            msg = f"Unknown Lie algebra case {value!r}; expected one of {known}."
            raise UnknownCase(msg) from None


@dataclass(frozen=True)
class _CaseShape:
    base: BaseAlgebra
    fixed_blocks: int | None
    label: str


_CASES = {
    LieCase.A12: _CaseShape(SL2, 2, "h"),
    LieCase.A13: _CaseShape(SL2, 3, "hbar"),
    LieCase.A1N: _CaseShape(SL2, None, "htilde"),
    LieCase.A22: _CaseShape(SL2_SYMMETRIC, 2, "ebar"),
    LieCase.A2N: _CaseShape(SL2_SYMMETRIC, None, "etilde"),
    LieCase.A32: _CaseShape(SO3, 2, "fbar"),
    LieCase.A3N: _CaseShape(SO3, None, "ftilde"),
}


@dataclass(frozen=True)
class LieBasis:
    """
    Basis of an extended algebra. Element ``3(k-1) + g`` (1-based) is the base
    generator ``g`` embedded at block position ``k``.
    """

    case: LieCase
    n_blocks: int
    epsilon: Expr
    base: BaseAlgebra
    elements: tuple[ImmutableMatrix, ...]
    labels: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_tabulated(self) -> bool:
        return _CASES[self.case].fixed_blocks is not None

    def block_index(self, index: int) -> tuple[int, int]:
        """Map a 1-based element index to ``(block k, generator g)``, both 1-based."""
        if not 1 <= index <= len(self.elements):
            msg = f"Element index {index} is outside 1..{len(self.elements)}."
            raise BadDimension(msg)
        block, generator = divmod(index - 1, self.base.dimension)
        return block + 1, generator + 1

    def element_index(self, block: int, generator: int) -> int:
        return (block - 1) * self.base.dimension + generator

    def target_block(self, left_block: int, right_block: int) -> tuple[int, bool]:
        """Block receiving ``[G_i, G_j]`` and whether the product wrapped past N."""
        total = left_block + right_block - 1
        if total <= self.n_blocks:
            return total, False
        return total - self.n_blocks, True

    def element(self, index: int) -> ImmutableMatrix:
        return self.elements[index - 1]

    def combination(self, coefficients: tuple[Expr, ...]) -> ImmutableMatrix:
        size = self.elements[0].shape[0]
        result = zeros(size, size)
        for coefficient, element in zip(coefficients, self.elements):
            if coefficient != 0:
                result += coefficient * element
        return expand_matrix(ImmutableMatrix(result))

    def specialize(self, epsilon: Expr | int) -> LieBasis:
        return build_basis(self.case, self.n_blocks, epsilon)


def build_basis(
    case: LieCase | str,
    n_blocks: int | None = None,
    epsilon: Expr | int = EPSILON,
) -> LieBasis:
    case = LieCase.parse(case)
    shape = _CASES[case]
    if n_blocks is None:
        if shape.fixed_blocks is None:
            msg = f"Case {case.value} needs an explicit number of blocks."
            raise BadDimension(msg)
        n_blocks = shape.fixed_blocks
    if n_blocks < 1:
        msg = f"The number of blocks must be positive, got {n_blocks}."
        raise BadDimension(msg)
    if shape.fixed_blocks is not None and n_blocks != shape.fixed_blocks:
        msg = f"Case {case.value} has {shape.fixed_blocks} blocks, got {n_blocks}."
        raise BadDimension(msg)

    base = shape.base
    null = zeros(base.order, base.order)
    elements = []
    labels = []
    for block in range(n_blocks):
        for position, generator in enumerate(base.generators):
            blocks = [ImmutableMatrix(null)] * n_blocks
            blocks[block] = generator
            elements.append(block_embed(blocks, epsilon))
            labels.append(f"{shape.label}{block * base.dimension + position + 1}")
    logger.trace("Built {} basis with {} blocks", case.value, n_blocks)
    return LieBasis(
        case=case,
        n_blocks=n_blocks,
        epsilon=epsilon,
        base=base,
        elements=tuple(elements),
        labels=tuple(labels),
    )

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from app.domain.atom import ProductAtom


@dataclass(frozen=True)
class Leaf:
    atom: ProductAtom

    def __str__(self) -> str:
        return str(self.atom)


@dataclass(frozen=True)
class Composite:
    """left #_level right"""

    left: "MoleculeExpr"
    level: int
    right: "MoleculeExpr"

    def __str__(self) -> str:
        return f"({self.left} #{self.level} {self.right})"


MoleculeExpr = Union[Leaf, Composite]


def leaves(expr: MoleculeExpr) -> List[ProductAtom]:
    if isinstance(expr, Leaf):
        return [expr.atom]
    return leaves(expr.left) + leaves(expr.right)


def map_leaves(expr: MoleculeExpr, fn) -> MoleculeExpr:
    if isinstance(expr, Leaf):
        return Leaf(fn(expr.atom))
    return Composite(map_leaves(expr.left, fn), expr.level, map_leaves(expr.right, fn))

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from app.domain.atom import ProductAtom, Signature
from app.domain.errors import EmptySubcomplexError

EMPTY_LITERAL = "{}"


@dataclass(frozen=True)
class Subcomplex:
    """A finite union of atoms, kept as its canonical antichain of maximal atoms.

    Instances are built by `app.services.subcomplexes.normalize`; equality is
    equality of the canonical sequences.
    """

    signature: Signature
    maximal: Tuple[ProductAtom, ...]

    @classmethod
    def empty(cls, signature: Signature) -> "Subcomplex":
        return cls(signature, ())

    @property
    def is_empty(self) -> bool:
        return not self.maximal

    @property
    def dim(self) -> int:
        if self.is_empty:
            raise EmptySubcomplexError("the empty subcomplex has no dimension")
        return max(a.dim for a in self.maximal)

    @property
    def has_top(self) -> bool:
        return any(a.has_top for a in self.maximal)

    def max_factor_dim(self, axis: int) -> int:
        return max((a.dims[axis] for a in self.maximal), default=-1)

    def __len__(self) -> int:
        return len(self.maximal)

    def __iter__(self) -> Iterator[ProductAtom]:
        return iter(self.maximal)

    def __contains__(self, atom: object) -> bool:
        return atom in self.maximal

    def __str__(self) -> str:
        if self.is_empty:
            return EMPTY_LITERAL
        return ";".join(str(a) for a in self.maximal)

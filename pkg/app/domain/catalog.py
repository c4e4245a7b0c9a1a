from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from app.domain.atom import ProductAtom, Signature
from app.domain.subcomplex import Subcomplex


@dataclass
class Catalog:
    """A sorted list of subcomplexes of one signature.

    mode is "signed" (molecules of the uncapped product within the caps),
    "capped" (molecules of the finite product) or "oracle" (closure output).
    """

    signature: Signature
    entries: List[Subcomplex] = field(default_factory=list)
    mode: str = "capped"
    name: Optional[str] = None

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class LevelState:
    """Construction state before choosing the atoms at middle-factor level `level`.

    `lowest_above` holds the lowest maximal atoms above the level, first-factor
    dims strictly decreasing; `atoms` is every maximal atom chosen so far.
    """

    level: int
    lowest_above: Tuple[ProductAtom, ...]
    atoms: Tuple[ProductAtom, ...]
    caps: Tuple[int, int, int]


@dataclass(frozen=True)
class LevelChoice:
    """The atoms placed at one level: first-factor dims decreasing, third increasing."""

    level: int
    atoms_at_level: Tuple[ProductAtom, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.atoms_at_level

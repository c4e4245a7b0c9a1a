from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from app.domain.atom import ProductAtom


@dataclass(frozen=True)
class Verdict:
    """Outcome of a molecule check.

    `reason` names the violated condition: cond1, staircase, sign-link,
    projection, sign, flip-cover, middle-gap, triple-sign, or one of the
    level clauses le1 .. le38 of the maximal-atom-set validator.
    """

    ok: bool
    reason: Optional[str] = None
    witnesses: Tuple[ProductAtom, ...] = ()
    axis: Optional[int] = None
    level: Optional[int] = None
    detail: Optional[str] = None

    @classmethod
    def accept(cls) -> "Verdict":
        return cls(ok=True)

    @classmethod
    def reject(
        cls,
        reason: str,
        *witnesses: ProductAtom,
        axis: Optional[int] = None,
        level: Optional[int] = None,
        detail: Optional[str] = None,
    ) -> "Verdict":
        return cls(False, reason, tuple(witnesses), axis, level, detail)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "molecule"
        return f"not-molecule: {self.reason}"

    def explain(self) -> List[str]:
        """Extra lines for a negative verdict: location, detail and witnesses."""
        if self.ok:
            return []
        lines = []
        if self.axis is not None:
            # axes are reported 1-based, as factors are numbered in the literature
            lines.append(f"axis: {self.axis + 1}")
        if self.level is not None:
            lines.append(f"level: {self.level}")
        if self.detail:
            lines.append(f"detail: {self.detail}")
        for atom in self.witnesses:
            lines.append(f"witness: {atom}")
        return lines

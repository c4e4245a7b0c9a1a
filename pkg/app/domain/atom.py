from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Optional, Tuple

from app.domain.errors import SignatureError


class Sign(IntEnum):
    MINUS = -1
    PLUS = 1

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    def twisted(self, parity: int) -> "Sign":
        """Multiply by (-1)^parity."""
        return self if parity % 2 == 0 else -self

    @property
    def symbol(self) -> str:
        return "-" if self is Sign.MINUS else "+"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Sign":
        if symbol == "-":
            return cls.MINUS
        if symbol == "+":
            return cls.PLUS
        raise SignatureError(f"not a sign: {symbol!r}")


TOP_SYMBOL = "*"


@dataclass(frozen=True)
class FactorAtom:
    """One globe atom u[dim, sign]; sign None is the unsigned top of a capped factor."""

    dim: int
    sign: Optional[Sign] = None

    def __post_init__(self):
        if self.dim < 0:
            raise SignatureError(f"negative dimension {self.dim}")

    @property
    def is_top(self) -> bool:
        return self.sign is None

    @property
    def rank(self) -> int:
        # minus < plus < Top
        if self.sign is None:
            return 2
        return 0 if self.sign is Sign.MINUS else 1

    def __str__(self) -> str:
        return f"{self.dim}{TOP_SYMBOL if self.sign is None else self.sign.symbol}"


@dataclass(frozen=True)
class ProductAtom:
    factors: Tuple[FactorAtom, ...]

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(f.dim for f in self.factors)

    @property
    def signs(self) -> Tuple[Optional[Sign], ...]:
        return tuple(f.sign for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def has_top(self) -> bool:
        return any(f.is_top for f in self.factors)

    def sort_key(self):
        return (self.dims, tuple(f.rank for f in self.factors))

    def without_factor(self, index: int) -> "ProductAtom":
        return ProductAtom(self.factors[:index] + self.factors[index + 1:])

    def __str__(self) -> str:
        return "(" + ",".join(str(f) for f in self.factors) + ")"


@dataclass(frozen=True)
class Signature:
    """The ambient product: arity, per-factor twist parity and optional per-factor caps."""

    arity: int
    twists: Tuple[int, ...] = field(default=())
    caps: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not 1 <= self.arity <= 4:
            raise SignatureError(f"arity must be between 1 and 4, got {self.arity}")
        if not self.twists:
            object.__setattr__(self, "twists", (0,) * self.arity)
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if len(self.twists) != self.arity:
            raise SignatureError(f"expected {self.arity} twists, got {len(self.twists)}")
        if any(t not in (0, 1) for t in self.twists):
            raise SignatureError(f"twist parities must be 0 or 1, got {self.twists}")
        if self.caps is not None:
            object.__setattr__(self, "caps", tuple(int(c) for c in self.caps))
            if len(self.caps) != self.arity:
                raise SignatureError(f"expected {self.arity} caps, got {len(self.caps)}")
            if any(c < 0 for c in self.caps):
                raise SignatureError(f"caps must be non-negative, got {self.caps}")

    @classmethod
    def plain(cls, arity: int) -> "Signature":
        return cls(arity)

    @classmethod
    def capped(cls, caps: Iterable[int], twists: Iterable[int] = ()) -> "Signature":
        caps = tuple(caps)
        return cls(len(caps), tuple(twists), caps)

    @property
    def is_capped(self) -> bool:
        return self.caps is not None

    @property
    def is_twisted(self) -> bool:
        return any(self.twists)

    def untwisted(self) -> "Signature":
        return Signature(self.arity, (0,) * self.arity, self.caps)

    def uncapped(self) -> "Signature":
        return Signature(self.arity, self.twists, None)

    def with_caps(self, caps: Iterable[int]) -> "Signature":
        return Signature(self.arity, self.twists, tuple(caps))

    def project(self, axis: int, level: int) -> "Signature":
        """Signature of the image of the projection dropping `axis` at threshold `level`."""
        if not 0 <= axis < self.arity:
            raise SignatureError(f"axis {axis} out of range for arity {self.arity}")
        if self.arity == 1:
            raise SignatureError("cannot project a single globe")
        twists = tuple(
            (t + level) % 2 if f > axis else t
            for f, t in enumerate(self.twists)
            if f != axis
        )
        caps = None
        if self.caps is not None:
            caps = self.caps[:axis] + self.caps[axis + 1:]
        return Signature(self.arity - 1, twists, caps)

    def validate_atom(self, atom: ProductAtom) -> ProductAtom:
        if atom.arity != self.arity:
            raise SignatureError(f"atom {atom} has {atom.arity} factors, expected {self.arity}")
        for f, factor in enumerate(atom.factors):
            cap = None if self.caps is None else self.caps[f]
            if factor.is_top:
                if cap is None:
                    raise SignatureError(f"atom {atom}: Top without a cap in factor {f + 1}")
                if factor.dim != cap:
                    raise SignatureError(f"atom {atom}: Top only allowed at the cap {cap} in factor {f + 1}")
            elif cap is not None and factor.dim >= cap:
                raise SignatureError(
                    f"atom {atom}: factor {f + 1} must be below the cap {cap} or the top {cap}*"
                )
        return atom

    def __str__(self) -> str:
        text = f"factors={self.arity} twists={','.join(map(str, self.twists))}"
        if self.caps is not None:
            text += f" caps={','.join(map(str, self.caps))}"
        return text

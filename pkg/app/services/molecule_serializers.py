import os
from functools import lru_cache
from typing import List, Optional, Sequence

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from app.domain.atom import TOP_SYMBOL, FactorAtom, ProductAtom, Sign, Signature
from app.domain.errors import MoleculeError, ParseError, SignatureError
from app.domain.expr import Composite, Leaf, MoleculeExpr
from app.domain.subcomplex import Subcomplex
from app.services.subcomplexes import normalize

START_RULES = ["atom", "subcomplex", "expr"]


class MoleculeTransformer(Transformer):
    def factor(self, items):
        dim, sign = items
        if str(sign) == TOP_SYMBOL:
            return FactorAtom(int(dim))
        return FactorAtom(int(dim), Sign.from_symbol(str(sign)))

    def atom(self, items):
        return ProductAtom(tuple(items))

    def subcomplex(self, items):
        return list(items)

    def empty(self, _items):
        return []

    def leaf(self, items):
        return Leaf(items[0])

    def composite(self, items):
        left, level, right = items
        return Composite(left, int(level), right)


def read_grammar() -> str:
    grammar_dir = os.path.join(os.path.dirname(os.path.dirname(__file__)), "grammar")
    with open(os.path.join(grammar_dir, "molecules.lark"), "r") as handle:
        return handle.read()


@lru_cache(maxsize=1)
def get_parser(parser: str = "lalr") -> Lark:
    return Lark(read_grammar(), parser=parser, start=START_RULES)


def _parse(text: str, start: str):
    try:
        tree = get_parser().parse(text.strip(), start=start)
    except UnexpectedInput as exc:
        raise ParseError(f"cannot parse {start} {text.strip()!r}", exc.line, exc.column) from exc
    try:
        return MoleculeTransformer().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, MoleculeError):
            raise exc.orig_exc from exc
        raise


def _int_list(text: Optional[str], what: str) -> List[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise SignatureError(f"{what} must be comma-separated integers, got {text!r}") from exc


class MoleculeSerializer:
    """Text forms used by the CLI, the HTTP API and catalog files."""

    @staticmethod
    def parse_atom(text: str) -> ProductAtom:
        return _parse(text, "atom")

    @staticmethod
    def parse_atoms(text: str) -> List[ProductAtom]:
        return _parse(text, "subcomplex")

    @staticmethod
    def parse_subcomplex(text: str, signature: Signature) -> Subcomplex:
        """Parse `a;b;...` (or `{}`) and normalize it against `signature`."""
        return normalize(signature, _parse(text, "subcomplex"))

    @staticmethod
    def parse_expr(text: str) -> MoleculeExpr:
        return _parse(text, "expr")

    @staticmethod
    def format_subcomplex(x: Subcomplex) -> str:
        return str(x)

    @staticmethod
    def format_expr(expr: MoleculeExpr) -> str:
        return str(expr)

    @staticmethod
    def parse_signature(
        factors: int,
        twists: Optional[str] = None,
        caps: Optional[str] = None,
    ) -> Signature:
        """Build a signature from the `--factors/--twists/--caps` style strings, e.g. "0,1,0"."""
        cap_values = _int_list(caps, "caps")
        return Signature(
            factors,
            tuple(_int_list(twists, "twists")),
            tuple(cap_values) if cap_values else None,
        )

    @staticmethod
    def format_signature(signature: Signature) -> str:
        return str(signature)

    @staticmethod
    def signature_from_text(text: str) -> Signature:
        """Inverse of `format_signature`: `factors=3 twists=0,0,0 caps=1,1,1`."""
        fields = {}
        for part in text.split():
            key, sep, value = part.partition("=")
            if not sep:
                raise ParseError(f"bad signature field {part!r}")
            fields[key] = value
        if "factors" not in fields:
            raise ParseError(f"signature without factors: {text!r}")
        try:
            factors = int(fields["factors"])
        except ValueError as exc:
            raise ParseError(f"bad factor count in {text!r}") from exc
        return MoleculeSerializer.parse_signature(factors, fields.get("twists"), fields.get("caps"))

    @staticmethod
    def format_lines(entries: Sequence[Subcomplex]) -> List[str]:
        return [MoleculeSerializer.format_subcomplex(x) for x in entries]

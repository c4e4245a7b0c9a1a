import pytest

from app.domain.atom import FactorAtom, ProductAtom, Sign, Signature
from app.domain.errors import ParseError, SignatureError
from app.domain.expr import Composite, Leaf, leaves
from app.services.molecule_serializers import MoleculeSerializer
from app.services.worked_examples import CUBE_ITEM_31_TREE, PAIRWISE_EXAMPLE

from conftest import CUBE, TRIPLE


def test_parse_atom():
    assert MoleculeSerializer.parse_atom("(8+, 2+, 1-)") == ProductAtom(
        (FactorAtom(8, Sign.PLUS), FactorAtom(2, Sign.PLUS), FactorAtom(1, Sign.MINUS))
    )


def test_parse_top_factor():
    a = MoleculeSerializer.parse_atom("(1*,0-)")
    assert a.factors[0].is_top
    assert str(a) == "(1*,0-)"


def test_parse_atom_reports_position():
    with pytest.raises(ParseError) as info:
        MoleculeSerializer.parse_atom("(8+,2)")
    assert info.value.line == 1
    assert info.value.column is not None
    assert "line 1" in str(info.value)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        MoleculeSerializer.parse_subcomplex("(8+,2+,1-);;", TRIPLE)


def test_parse_atoms_keeps_input_order():
    atoms = MoleculeSerializer.parse_atoms("(1-,0+);(0+,1+)")
    assert [str(a) for a in atoms] == ["(1-,0+)", "(0+,1+)"]


def test_parse_subcomplex_normalizes():
    x = MoleculeSerializer.parse_subcomplex(PAIRWISE_EXAMPLE, TRIPLE)
    assert len(x) == 10
    again = MoleculeSerializer.parse_subcomplex(MoleculeSerializer.format_subcomplex(x), TRIPLE)
    assert again == x


def test_empty_literal():
    assert MoleculeSerializer.parse_subcomplex("{ }", TRIPLE).is_empty
    assert MoleculeSerializer.parse_atoms("{}") == []


def test_parse_expr():
    expr = MoleculeSerializer.parse_expr(CUBE_ITEM_31_TREE)
    assert isinstance(expr, Composite)
    assert expr.level == 1
    assert len(leaves(expr)) == 4
    assert MoleculeSerializer.format_expr(expr) == CUBE_ITEM_31_TREE


def test_parse_leaf_expr():
    assert MoleculeSerializer.parse_expr("(1*,1*,1*)") == Leaf(ProductAtom((FactorAtom(1),) * 3))


def test_parse_signature():
    assert MoleculeSerializer.parse_signature(3, "0,1,0") == Signature(3, (0, 1, 0))
    assert MoleculeSerializer.parse_signature(3, None, "1,1,1") == CUBE
    with pytest.raises(SignatureError):
        MoleculeSerializer.parse_signature(2, "a,b")
    with pytest.raises(SignatureError):
        MoleculeSerializer.parse_signature(2, "0,1,0")


def test_signature_text_round_trip():
    for signature in (CUBE, Signature(2, (1, 0)), Signature.capped((2, 1), (0, 1))):
        text = MoleculeSerializer.format_signature(signature)
        assert MoleculeSerializer.signature_from_text(text) == signature
    assert MoleculeSerializer.format_signature(CUBE) == "factors=3 twists=0,0,0 caps=1,1,1"


@pytest.mark.parametrize("text", ["twists=0,0", "factors", "factors=x twists=0"])
def test_signature_from_bad_text(text):
    with pytest.raises(ParseError):
        MoleculeSerializer.signature_from_text(text)

import pytest

from app.domain.atom import Sign, Signature
from app.domain.errors import EmptySubcomplexError, NotAMoleculeError, PreconditionError, SignatureError
from app.services.atom_algebra import atom_d, atom_intersect
from app.services.molecule_algebra import evaluate, molecule_d, natural_sorted
from app.services.subcomplexes import sub_contains, sub_intersect
from app.services.triple_enumeration import EnumerationService
from app.services.triple_molecules import (
    adjacent3,
    adjacent_pairs3,
    decompose3,
    frame_dim,
    natural_less3,
    project,
    projection_maximal3,
    projection_maximal_atoms3,
    rs_adjacent3,
    triple_compose,
    triple_d,
    triple_is_pairwise_def,
    triple_is_pairwise_explicit,
)
from app.services.worked_examples import (
    NON_CONDITION1,
    PAIRWISE_ADJACENT,
    PAIRWISE_MIDDLE_LEVEL_1,
    PAIRWISE_PROJECTION_MAXIMAL,
)

from conftest import PAIR, TRIPLE, atom, condition1_subcomplexes, signed_atoms, sub

MIDDLE_GAP = "(1-,1+,0-);(0-,1+,1+)"


def test_pairwise_example_is_a_molecule(pairwise):
    assert triple_is_pairwise_def(pairwise)
    assert triple_is_pairwise_explicit(pairwise)


@pytest.mark.parametrize("checker", [triple_is_pairwise_def, triple_is_pairwise_explicit])
def test_single_atom_is_a_molecule(checker):
    assert checker(sub("(3-,0+,2+)", TRIPLE))


@pytest.mark.parametrize("checker", [triple_is_pairwise_def, triple_is_pairwise_explicit])
@pytest.mark.parametrize("text", [NON_CONDITION1, "(1+,0-,0-);(1-,0-,0-)"])
def test_condition1_rejections(checker, text):
    verdict = checker(sub(text, TRIPLE))
    assert verdict.reason == "cond1"
    assert len(verdict.witnesses) == 2


def test_definition_reports_the_failing_projection():
    verdict = triple_is_pairwise_def(sub(MIDDLE_GAP, TRIPLE))
    assert verdict.reason == "projection"
    assert (verdict.axis, verdict.level) == (1, 0)
    assert verdict.detail == "sign-link"
    assert verdict.explain()[:3] == ["axis: 2", "level: 0", "detail: sign-link"]


def test_explicit_reports_the_middle_gap():
    verdict = triple_is_pairwise_explicit(sub(MIDDLE_GAP, TRIPLE))
    assert verdict.reason == "middle-gap"
    assert [str(a) for a in verdict.witnesses] == ["(1-,1+,0-)", "(0-,1+,1+)"]


def test_input_errors():
    with pytest.raises(EmptySubcomplexError):
        triple_is_pairwise_def(sub("{}", TRIPLE))
    with pytest.raises(SignatureError):
        triple_is_pairwise_explicit(sub("(1+,0-)", PAIR))
    with pytest.raises(PreconditionError):
        triple_is_pairwise_def(sub("(1*,0-,0-)", Signature.capped((1, 1, 1))))


def test_projection_to_a_twisted_pair(pairwise):
    image = project(pairwise, 1, 1)
    assert image.signature == Signature(2, (0, 1))
    assert image == sub(PAIRWISE_MIDDLE_LEVEL_1, Signature(2, (0, 1)))
    assert project(pairwise, 1, 3).is_empty


def test_projection_of_a_single_atom():
    assert project(sub("(2+,1-,3+)", TRIPLE), 2, 0) == sub("(2+,1-)", PAIR)
    assert project(sub("(2+,1-,3+)", TRIPLE), 1, 2).is_empty


def test_projection_rejects_a_bad_axis(pairwise):
    with pytest.raises(SignatureError):
        project(pairwise, 3, 0)


def test_adjacent_pairs(pairwise):
    computed = {frozenset(pair) for pair in adjacent_pairs3(pairwise)}
    assert computed == {frozenset((atom(a), atom(b))) for a, b in PAIRWISE_ADJACENT}
    assert len(computed) == 17


def test_adjacency(pairwise):
    assert adjacent3(atom("(8+,2+,1-)"), atom("(5-,2+,5-)"), pairwise)
    assert not adjacent3(atom("(8+,2+,1-)"), atom("(1-,2+,8+)"), pairwise)
    assert not adjacent3(atom("(5-,2+,5-)"), atom("(4-,0-,7+)"), pairwise)


def test_adjacency_needs_maximal_atoms(pairwise):
    with pytest.raises(PreconditionError):
        adjacent3(atom("(8+,2+,1-)"), atom("(0-,0-,0-)"), pairwise)


def test_rs_adjacency_without_adjacency(pairwise):
    a, b = atom("(1-,2+,8+)"), atom("(4-,0-,7+)")
    assert rs_adjacent3(a, b, pairwise, 0, 1)
    assert not rs_adjacent3(b, a, pairwise, 0, 1)
    assert not adjacent3(a, b, pairwise)


def test_rs_adjacency_rejects_bad_factors(pairwise):
    with pytest.raises(PreconditionError):
        rs_adjacent3(atom("(1-,2+,8+)"), atom("(4-,0-,7+)"), pairwise, 1, 0)


@pytest.mark.parametrize("level", sorted(PAIRWISE_PROJECTION_MAXIMAL))
def test_projection_maximal_atoms(pairwise, level):
    expected = set(sub(PAIRWISE_PROJECTION_MAXIMAL[level], TRIPLE).maximal)
    assert set(projection_maximal_atoms3(pairwise, 1, level)) == expected


def test_projection_maximal(pairwise):
    assert projection_maximal3(atom("(8+,2+,1-)"), pairwise, 1, 2)
    assert not projection_maximal3(atom("(8+,2+,1-)"), pairwise, 1, 1)
    assert projection_maximal_atoms3(pairwise, 1, 3) == []


@pytest.mark.parametrize("gamma", [Sign.MINUS, Sign.PLUS])
def test_projection_commutes_with_boundaries(pairwise, gamma):
    left = project(triple_d(pairwise, 10, gamma), 1, 1)
    right = molecule_d(project(pairwise, 1, 1), 9, gamma)
    assert left == right


def test_boundary_of_a_non_molecule():
    with pytest.raises(NotAMoleculeError):
        triple_d(sub(MIDDLE_GAP, TRIPLE), 1, Sign.MINUS)


def test_boundaries_are_molecules(pairwise):
    for p in range(pairwise.dim):
        for gamma in (Sign.MINUS, Sign.PLUS):
            assert triple_is_pairwise_def(triple_d(pairwise, p, gamma))


def test_compose_with_an_identity(pairwise):
    target = triple_d(pairwise, 10, Sign.PLUS)
    assert triple_compose(pairwise, 10, target) == pairwise


def test_frame_dim():
    x = sub("(1+,0-,0-);(0+,1+,0-)", TRIPLE)
    assert frame_dim(x) == 0
    with pytest.raises(PreconditionError):
        frame_dim(sub("(1+,0-,0-)", TRIPLE))


def test_natural_order():
    assert natural_less3(atom("(0-,0+,0+)"), atom("(0+,0+,0+)"))
    assert natural_less3(atom("(1-,0+,5+)"), atom("(2-,0+,0+)"))
    assert natural_less3(atom("(2+,0+,0+)"), atom("(1+,0+,5+)"))
    # after an odd left-hand sum plus comes first
    assert natural_less3(atom("(1-,0+,0-)"), atom("(1-,0-,3+)"))
    assert not natural_less3(atom("(1-,0-,3+)"), atom("(1-,0+,0-)"))
    assert not natural_less3(atom("(1-,0-,3+)"), atom("(1-,0-,0+)"))


def test_natural_order_rejects_top():
    with pytest.raises(PreconditionError):
        natural_less3(atom("(1*,0+,0+)"), atom("(0+,0+,0+)"))


def test_decompose_evaluates_back(pairwise):
    assert evaluate(decompose3(pairwise), TRIPLE) == pairwise


def test_decompose_single_atom():
    assert str(decompose3(sub("(3-,0+,2+)", TRIPLE))) == "(3-,0+,2+)"


@pytest.mark.parametrize("sizes", [(1, 2), pytest.param((3,), marks=pytest.mark.slow)])
def test_checkers_agree_on_every_small_antichain(sizes):
    for x in condition1_subcomplexes(TRIPLE, signed_atoms(3, 2), sizes):
        assert bool(triple_is_pairwise_def(x)) == bool(triple_is_pairwise_explicit(x)), str(x)


@pytest.fixture(scope="module")
def cube_lifts():
    """Every signed molecule whose dims fit in the cube."""
    return EnumerationService().enumerate3((1, 1, 1), mode="signed").entries


@pytest.mark.parametrize(
    "caps",
    [(1, 1, 1), pytest.param((2, 1, 1), marks=pytest.mark.slow), pytest.param((1, 1, 2), marks=pytest.mark.slow)],
)
def test_decompose_round_trips_on_catalogs(caps):
    for x in EnumerationService().enumerate3(caps, mode="signed").entries:
        assert evaluate(decompose3(x), x.signature) == x, str(x)


def test_projection_commutes_with_boundaries_on_cube_lifts(cube_lifts):
    for x in cube_lifts:
        for axis in range(3):
            for level in range(x.max_factor_dim(axis) + 1):
                image = project(x, axis, level)
                if image.is_empty:
                    continue
                for p in range(level, x.dim + 1):
                    for gamma in (Sign.MINUS, Sign.PLUS):
                        left = project(molecule_d(x, p, gamma), axis, level)
                        assert left == molecule_d(image, p - level, gamma), (str(x), axis, level, p)


@pytest.mark.parametrize(
    "caps",
    [(1, 1, 1), pytest.param((2, 1, 1), marks=pytest.mark.slow), pytest.param((1, 2, 1), marks=pytest.mark.slow)],
)
def test_split_order_meets_in_the_boundaries(caps):
    for x in EnumerationService().enumerate3(caps, mode="signed").entries:
        if len(x) < 2:
            continue
        p = frame_dim(x)
        high = natural_sorted(a for a in x.maximal if a.dim > p)
        for i, a in enumerate(high):
            for b in high[i + 1:]:
                meet = atom_intersect(x.signature, a, b)
                sides = sub_intersect(atom_d(x.signature, a, p, Sign.PLUS), atom_d(x.signature, b, p, Sign.MINUS))
                assert sub_contains(sides, meet), (str(x), str(a), str(b))


def test_natural_order_is_total_on_condition1_pairs():
    for x in condition1_subcomplexes(TRIPLE, signed_atoms(3, 2), sizes=(2,)):
        a, b = x.maximal
        assert natural_less3(a, b) != natural_less3(b, a), str(x)

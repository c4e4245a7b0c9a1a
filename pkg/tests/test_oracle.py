import pytest

from app import config
from app.domain.atom import Sign, Signature
from app.domain.errors import BoundExceededError, SignatureError
from app.services.molecule_algebra import evaluate
from app.services.molecule_service import MoleculeService
from app.services.oracle import (
    OracleService,
    build_complex,
    cap_quotient,
    lift_bound,
    mask_to_subcomplex,
    oracle_d,
    signed_lifts,
    subcomplex_to_mask,
)
from app.services.subcomplexes import is_condition1
from app.services.worked_examples import CUBE_ITEM_31, CUBE_MOLECULES, CUBE_SOURCE_BOUNDARY

from conftest import CUBE, PAIR, TRIPLE, condition1_subcomplexes, sub


@pytest.fixture(scope="module")
def oracle():
    return OracleService()


def test_atom_counts():
    assert len(build_complex((1, 1, 1))) == 27
    assert len(build_complex((2, 1))) == 15
    assert len(build_complex((0,))) == 1


def test_atom_bound():
    with pytest.raises(BoundExceededError):
        build_complex((1, 1, 1), max_atoms=26)


def test_molecule_bound():
    with pytest.raises(BoundExceededError):
        OracleService(max_atomsets=10).molecules((1, 1, 1))


def test_oracle_needs_caps(oracle):
    with pytest.raises(SignatureError):
        oracle.is_molecule(sub("(1+,0-)", PAIR))


def test_masks_round_trip():
    complex_ = build_complex((1, 1, 1))
    x = sub(CUBE_ITEM_31, CUBE)
    assert mask_to_subcomplex(complex_, subcomplex_to_mask(complex_, x)) == x


def test_cube_boundaries():
    complex_ = build_complex((1, 1, 1))
    whole = sub("(1*,1*,1*)", CUBE)
    assert oracle_d(complex_, whole, 2, Sign.MINUS) == sub(CUBE_SOURCE_BOUNDARY, CUBE)
    assert oracle_d(complex_, whole, 0, Sign.MINUS) == sub("(0-,0-,0-)", CUBE)
    assert oracle_d(complex_, whole, 0, Sign.PLUS) == sub("(0+,0+,0+)", CUBE)
    assert oracle_d(complex_, whole, 3, Sign.PLUS) == whole


def test_cube_molecules(oracle):
    molecules = oracle.molecules((1, 1, 1))
    assert len(molecules) == 57
    assert set(molecules) == {sub(text, CUBE) for text in CUBE_MOLECULES}


def test_enumerate_builds_an_oracle_catalog(oracle):
    catalog = oracle.enumerate((1, 1))
    assert catalog.mode == "oracle"
    assert catalog.signature == Signature.capped((1, 1))
    assert [str(x) for x in catalog.entries] == sorted(str(x) for x in catalog.entries)


def test_is_molecule(oracle):
    assert oracle.is_molecule(sub(CUBE_ITEM_31, CUBE))
    assert not oracle.is_molecule(sub("(1*,1*,0-);(1*,1*,0+)", CUBE))


@pytest.mark.parametrize("caps", [(1, 1, 1), (2, 1)])
def test_category_axioms_hold(oracle, caps):
    report = oracle.check_axioms(caps)
    assert report.ok, report.failures
    assert report.checked["5"] > 0


def test_cap_quotient_and_lifts():
    assert str(cap_quotient(sub("(1+,1-,0-)", TRIPLE), (1, 1, 1))) == "(1*,1*,0-)"
    assert len(list(signed_lifts(sub("(1*,0-)", Signature.capped((1, 1)))))) == 2
    lifts = list(signed_lifts(sub("(1*,1*)", Signature.capped((1, 1)))))
    assert len(lifts) == 4
    assert all(cap_quotient(lift, (1, 1)) == sub("(1*,1*)", Signature.capped((1, 1))) for lift in lifts)


def test_cap_quotient_rejects_atoms_above_the_caps():
    with pytest.raises(SignatureError):
        cap_quotient(sub("(2+,0-,0-)", TRIPLE), (1, 1, 1))


@pytest.mark.parametrize(
    "caps",
    [(1, 1, 1), pytest.param((2, 1, 1), marks=pytest.mark.slow), pytest.param((1, 2, 1), marks=pytest.mark.slow)],
)
def test_checker_agrees_with_the_oracle_on_every_subcomplex(oracle, caps):
    # the checker rejects condition-1 failures outright, so the sweep covers the rest
    complex_ = oracle.complex_for(caps)
    molecules = set(oracle.molecules(caps))
    assert all(is_condition1(x) for x in molecules)
    service = MoleculeService()
    accepted = 0
    for x in condition1_subcomplexes(complex_.signature, complex_.atoms):
        verdict = service.check(x)
        assert bool(verdict) == (x in molecules), str(x)
        accepted += bool(verdict)
    assert accepted == len(molecules)


def test_capped_condition1_failures_skip_the_lift_search():
    x = sub("(1*,1*,0-);(1*,1*,0+)", CUBE)
    assert lift_bound(x) == 16
    verdict = MoleculeService(max_lifts=1).check(x)
    assert verdict.reason == "cond1"


def test_lift_search_is_bounded():
    x = sub("(1*,1*,0-);(1*,0+,1*)", CUBE)
    assert lift_bound(x) == 16
    with pytest.raises(BoundExceededError):
        MoleculeService(max_lifts=4).check(x)
    assert MoleculeService(max_lifts=16).check(x)


def test_caches_are_bounded(oracle):
    complex_ = oracle.complex_for((1, 1))
    assert oracle.complex_for((1, 1)) is complex_
    assert oracle._complex_of.cache_info().maxsize == config.ORACLE_CACHED_COMPLEXES
    assert complex_.d.cache_info().maxsize == config.ORACLE_D_CACHE_SIZE


@pytest.mark.parametrize("text", CUBE_MOLECULES)
def test_cube_molecules_decompose(text):
    x = sub(text, CUBE)
    assert evaluate(MoleculeService().decompose(x), CUBE) == x

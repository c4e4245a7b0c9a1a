from itertools import combinations

import pytest

from app.domain.atom import Signature
from app.domain.errors import EmptySubcomplexError, SignatureError
from app.services.oracle import build_complex, mask_to_subcomplex, subcomplex_to_mask
from app.services.subcomplexes import (
    condition1_violation,
    is_condition1,
    normalize,
    retwist,
    sub_contains,
    sub_intersect,
    sub_union,
    untwist,
)
from app.services.worked_examples import NON_CONDITION1

from conftest import CUBE, PAIR, TRIPLE, atom, sub


def test_normalize_keeps_sorted_maximal_atoms():
    x = sub("(2+,1-);(1-,1-);(0+,3-)", PAIR)
    assert str(x) == "(0+,3-);(2+,1-)"
    assert len(x) == 2
    assert x.dim == 3


def test_normalize_rejects_top_without_cap():
    with pytest.raises(SignatureError, match="Top without a cap"):
        normalize(PAIR, [atom("(1*,0+)")])


def test_normalize_rejects_top_below_the_cap():
    with pytest.raises(SignatureError):
        normalize(Signature.capped((2, 1)), [atom("(1*,0+)")])


def test_normalize_rejects_wrong_arity():
    with pytest.raises(SignatureError):
        normalize(TRIPLE, [atom("(1+,0+)")])


def test_empty_subcomplex_prints_braces_and_has_no_dimension():
    empty = sub("{}", PAIR)
    assert empty.is_empty
    assert str(empty) == "{}"
    with pytest.raises(EmptySubcomplexError):
        empty.dim


def test_union():
    assert str(sub_union(sub("(1+,0-)", PAIR), sub("(0+,1+)", PAIR))) == "(0+,1+);(1+,0-)"


def test_union_absorbs_faces():
    assert sub_union(sub("(2+,1-)", PAIR), sub("(1-,1-)", PAIR)) == sub("(2+,1-)", PAIR)


def test_intersect_opposite_hemispheres():
    meet = sub_intersect(sub("(2-,1+)", PAIR), sub("(2+,1+)", PAIR))
    assert str(meet) == "(1-,1+);(1+,1+)"


def test_intersect_in_the_cube():
    left = sub("(1*,1*,0-)", CUBE)
    right = sub("(0-,1*,1*)", CUBE)
    assert str(sub_intersect(left, right)) == "(0-,1*,0-)"


def test_signature_mismatch():
    with pytest.raises(SignatureError, match="signature mismatch"):
        sub_union(sub("(1+,0-)", PAIR), sub("(1+,0-)", Signature(2, (0, 1))))


def test_contains(pairwise):
    assert sub_contains(pairwise, sub("(8+,1+,1-);(0-,0-,0-)", TRIPLE))
    assert not sub_contains(pairwise, sub("(9-,0+,0+)", TRIPLE))


def test_condition1(pairwise):
    assert is_condition1(pairwise)
    assert condition1_violation(pairwise) is None


def test_condition1_fails_for_equal_dims():
    x = sub(NON_CONDITION1, TRIPLE)
    assert len(x) == 4
    assert not is_condition1(x)
    a, b = condition1_violation(x)
    assert a.dims == b.dims == (1, 1, 1)


def test_condition1_on_empty():
    with pytest.raises(EmptySubcomplexError):
        is_condition1(sub("{}", TRIPLE))


def test_untwist_flips_twisted_factors():
    twisted = Signature(2, (0, 1))
    x = sub("(2-,1+);(0+,3-)", twisted)
    flat = untwist(x)
    assert flat.signature == PAIR
    assert str(flat) == "(0+,3+);(2-,1-)"
    assert retwist(flat, twisted) == x


def test_untwist_leaves_plain_products_alone(pairwise):
    assert untwist(pairwise) is pairwise
    assert retwist(pairwise, TRIPLE) is pairwise


def square_subcomplexes():
    complex_ = build_complex((1, 1))
    masks = {
        complex_.mask_of(cells)
        for size in range(len(complex_.atoms) + 1)
        for cells in combinations(complex_.atoms, size)
    }
    return complex_, [mask_to_subcomplex(complex_, m) for m in sorted(masks)]


def test_lattice_laws_on_the_square():
    complex_, subs = square_subcomplexes()
    assert len(subs) == 48
    for x in subs:
        assert normalize(x.signature, x.maximal) == x
        assert sub_union(x, x) == x
        mx = subcomplex_to_mask(complex_, x)
        for y in subs:
            my = subcomplex_to_mask(complex_, y)
            union = sub_union(x, y)
            meet = sub_intersect(x, y)
            assert subcomplex_to_mask(complex_, union) == mx | my
            assert subcomplex_to_mask(complex_, meet) == mx & my
            assert union == sub_union(y, x)
            assert meet == sub_intersect(y, x)
            assert sub_intersect(x, union) == x


def test_union_is_associative_on_the_square():
    _, subs = square_subcomplexes()
    for x in subs:
        for y in subs:
            xy = sub_union(x, y)
            for z in subs:
                assert sub_union(xy, z) == sub_union(x, sub_union(y, z))

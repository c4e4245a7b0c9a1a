"""Registry of the worked examples the library must reproduce exactly.

Each example is a zero-argument function returning True when the computed
value matches the published one. `verify_worked_examples` runs them all and
is what the `verify-paper-examples` command and the test suite call.
"""
import logging
from typing import Callable, List, Optional, Sequence, Tuple

from app.domain.atom import ProductAtom, Sign, Signature
from app.domain.subcomplex import Subcomplex
from app.services import molecule_algebra
from app.services.atom_algebra import atom_boundary, atom_contains, atom_dim, atom_intersect
from app.services.molecule_serializers import MoleculeSerializer
from app.services.oracle import OracleService, build_complex, oracle_d
from app.services.pair_molecules import pair_compose, pair_d, pair_is_molecule
from app.services.quad_molecules import st_adjacent4
from app.services.subcomplexes import is_condition1, normalize, sub_contains_atom, sub_intersect, sub_union
from app.services.triple_enumeration import EnumerationService, validate_maximal_atom_set
from app.services.triple_molecules import (
    adjacent3,
    adjacent_pairs3,
    projection_maximal_atoms3,
    rs_adjacent3,
    triple_d,
    triple_is_pairwise_def,
    triple_is_pairwise_explicit,
)

logger = logging.getLogger(__name__)

PAIRWISE_EXAMPLE = (
    "(8+,2+,1-);(5-,2+,5-);(1-,2+,8+);(9+,1-,2+);(4-,1-,6+);"
    "(0+,1+,9+);(8-,0-,5-);(5-,0+,6+);(4-,0-,7+);(2-,0-,9+)"
)

PAIRWISE_ADJACENT = (
    ("(8+,2+,1-)", "(5-,2+,5-)"),
    ("(8+,2+,1-)", "(9+,1-,2+)"),
    ("(5-,2+,5-)", "(1-,2+,8+)"),
    ("(5-,2+,5-)", "(9+,1-,2+)"),
    ("(5-,2+,5-)", "(4-,1-,6+)"),
    ("(5-,2+,5-)", "(8-,0-,5-)"),
    ("(5-,2+,5-)", "(5-,0+,6+)"),
    ("(1-,2+,8+)", "(9+,1-,2+)"),
    ("(1-,2+,8+)", "(4-,1-,6+)"),
    ("(1-,2+,8+)", "(0+,1+,9+)"),
    ("(1-,2+,8+)", "(2-,0-,9+)"),
    ("(9+,1-,2+)", "(8-,0-,5-)"),
    ("(4-,1-,6+)", "(4-,0-,7+)"),
    ("(0+,1+,9+)", "(2-,0-,9+)"),
    ("(8-,0-,5-)", "(5-,0+,6+)"),
    ("(5-,0+,6+)", "(4-,0-,7+)"),
    ("(4-,0-,7+)", "(2-,0-,9+)"),
)

# projection-maximal atoms of the pairwise example along the middle factor
PAIRWISE_PROJECTION_MAXIMAL = {
    0: "(9+,1-,2+);(8-,0-,5-);(5-,0+,6+);(4-,0-,7+);(2-,0-,9+)",
    1: "(9+,1-,2+);(5-,2+,5-);(4-,1-,6+);(1-,2+,8+);(0+,1+,9+)",
    2: "(8+,2+,1-);(5-,2+,5-);(1-,2+,8+)",
}

PAIRWISE_MIDDLE_LEVEL_1 = "(9+,2+);(5-,5-);(4-,6+);(1-,8+);(0+,9+)"

TWO_FACTOR_SOURCE = "(5-,0+);(4-,2+);(2-,3-);(1-,4+);(0-,5+)"
TWO_FACTOR_TARGET = "(6+,0-);(5-,1+);(3+,2+);(2-,4+);(0-,5+)"
TWO_FACTOR_MIDDLE = "(5-,0+);(4-,1+);(3+,2+);(2-,3-);(1-,4+);(0-,5+)"
TWO_FACTOR_COMPOSITE = "(6+,0-);(5-,1+);(4-,2+);(2-,4+);(0-,5+)"

NON_CONDITION1 = "(1+,1+,1+);(1+,1-,1-);(1-,1+,1-);(1-,1-,1+)"

# the molecules of u_1 x v_1 x w_1, in their published order
CUBE_MOLECULES = (
    "(1*,1*,1*)",
    "(1*,1*,0-)",
    "(1*,1*,0+)",
    "(1*,0-,1*)",
    "(1*,0+,1*)",
    "(0-,1*,1*)",
    "(0+,1*,1*)",
    "(1*,0-,0-)",
    "(1*,0-,0+)",
    "(1*,0+,0-)",
    "(1*,0+,0+)",
    "(0-,1*,0-)",
    "(0-,1*,0+)",
    "(0+,1*,0-)",
    "(0+,1*,0+)",
    "(0-,0-,1*)",
    "(0-,0+,1*)",
    "(0+,0-,1*)",
    "(0+,0+,1*)",
    "(0-,0-,0-)",
    "(0-,0-,0+)",
    "(0-,0+,0-)",
    "(0-,0+,0+)",
    "(0+,0-,0-)",
    "(0+,0-,0+)",
    "(0+,0+,0-)",
    "(0+,0+,0+)",
    "(1*,1*,0+);(0+,1*,1*);(1*,0-,1*)",
    "(1*,1*,0-);(0-,1*,1*);(1*,0+,1*)",
    "(1*,1*,0+);(1*,0-,1*)",
    "(1*,1*,0-);(1*,0+,1*)",
    "(1*,1*,0+);(0-,0-,1*)",
    "(1*,1*,0-);(0+,0+,1*)",
    "(0+,1*,1*);(1*,0-,1*)",
    "(0-,1*,1*);(1*,0+,1*)",
    "(0+,1*,1*);(1*,0-,0-)",
    "(0-,1*,1*);(1*,0+,0+)",
    "(0+,1*,0+);(1*,0-,1*)",
    "(0-,1*,0-);(1*,0+,1*)",
    "(0+,1*,0+);(1*,0-,0+)",
    "(0-,1*,0+);(1*,0+,0+)",
    "(0+,1*,0-);(1*,0-,0-)",
    "(0-,1*,0-);(1*,0+,0-)",
    "(0-,1*,0+);(0-,0-,1*)",
    "(0-,1*,0-);(0-,0+,1*)",
    "(0+,1*,0+);(0+,0-,1*)",
    "(0+,1*,0-);(0+,0+,1*)",
    "(0+,1*,0-);(1*,0-,0-);(0+,0+,1*)",
    "(0+,1*,0+);(1*,0-,0-);(0+,0-,1*)",
    "(0-,1*,0-);(1*,0+,0+);(0-,0+,1*)",
    "(0-,1*,0+);(1*,0+,0+);(0-,0-,1*)",
    "(0+,1*,0+);(1*,0-,0+);(0-,0-,1*)",
    "(0-,1*,0-);(1*,0+,0-);(0+,0+,1*)",
    "(1*,0-,0+);(0-,0-,1*)",
    "(1*,0-,0-);(0+,0-,1*)",
    "(1*,0+,0+);(0-,0+,1*)",
    "(1*,0+,0-);(0+,0+,1*)",
)

CUBE_ITEM_31 = "(1*,1*,0-);(1*,0+,1*)"
CUBE_ITEM_31_TREE = "(((0-,1*,0-) #0 (1*,0+,1*)) #1 ((1*,1*,0-) #0 (0+,0+,1*)))"
CUBE_SOURCE_BOUNDARY = "(1*,1*,0-);(0-,1*,1*);(1*,0+,1*)"

CUBE = Signature.capped((1, 1, 1))
TRIPLE = Signature.plain(3)
PAIR = Signature.plain(2)

ExampleCheck = Callable[[], bool]
EXAMPLES: List[Tuple[str, ExampleCheck]] = []


def example(name: str):
    def register(check: ExampleCheck) -> ExampleCheck:
        EXAMPLES.append((name, check))
        return check

    return register


def _sub(text: str, signature: Signature) -> Subcomplex:
    return MoleculeSerializer.parse_subcomplex(text, signature)


def _atom(text: str) -> ProductAtom:
    return MoleculeSerializer.parse_atom(text)


def _pairwise() -> Subcomplex:
    return _sub(PAIRWISE_EXAMPLE, TRIPLE)


@example("atom dimension")
def _atom_dimension() -> bool:
    return atom_dim(_atom("(8+,2+,1-)")) == 11


@example("cube edge lies in a face")
def _cube_edge_in_face() -> bool:
    return atom_contains(_atom("(1*,1*,0-)"), _atom("(0-,1*,0-)"))


@example("cube source boundary")
def _cube_source_boundary() -> bool:
    return atom_boundary(CUBE, _atom("(1*,1*,1*)"), Sign.MINUS) == _sub(CUBE_SOURCE_BOUNDARY, CUBE)


@example("source boundary of a 2-by-1 globe")
def _cylinder_boundary() -> bool:
    signature = Signature.capped((2, 1))
    return atom_boundary(signature, _atom("(2*,1*)"), Sign.MINUS) == _sub("(1-,1*);(2*,0-)", signature)


@example("cube face intersections")
def _cube_intersections() -> bool:
    edge = atom_intersect(CUBE, _atom("(1*,1*,0-)"), _atom("(0-,1*,1*)"))
    vertex = atom_intersect(CUBE, _atom("(1*,0-,0-)"), _atom("(0-,1*,0-)"))
    return edge == _sub("(0-,1*,0-)", CUBE) and vertex == _sub("(0-,0-,0-)", CUBE)


@example("pairwise example keeps its ten atoms")
def _pairwise_normalized() -> bool:
    return len(_pairwise()) == 10


@example("cube union of two faces")
def _cube_union() -> bool:
    union = sub_union(_sub("(1*,1*,0-)", CUBE), _sub("(1*,0+,1*)", CUBE))
    return union == _sub(CUBE_ITEM_31, CUBE) and sub_contains_atom(union, _atom("(0-,1*,0-)"))


@example("two-factor source and target intersect in their common boundary")
def _two_factor_intersection() -> bool:
    meet = sub_intersect(_sub(TWO_FACTOR_SOURCE, PAIR), _sub(TWO_FACTOR_TARGET, PAIR))
    return meet == _sub(TWO_FACTOR_MIDDLE, PAIR)


@example("condition 1")
def _condition1() -> bool:
    return is_condition1(_pairwise()) and not is_condition1(_sub(NON_CONDITION1, TRIPLE))


@example("two-factor molecules")
def _two_factor_molecules() -> bool:
    return bool(pair_is_molecule(_sub(TWO_FACTOR_SOURCE, PAIR))) and bool(pair_is_molecule(_sub(TWO_FACTOR_TARGET, PAIR)))


@example("two-factor boundaries")
def _two_factor_boundaries() -> bool:
    middle = _sub(TWO_FACTOR_MIDDLE, PAIR)
    return (
        pair_d(_sub(TWO_FACTOR_SOURCE, PAIR), 5, Sign.PLUS) == middle
        and pair_d(_sub(TWO_FACTOR_TARGET, PAIR), 5, Sign.MINUS) == middle
    )


@example("two-factor composite")
def _two_factor_composite() -> bool:
    composite = pair_compose(_sub(TWO_FACTOR_SOURCE, PAIR), 5, _sub(TWO_FACTOR_TARGET, PAIR))
    return composite == _sub(TWO_FACTOR_COMPOSITE, PAIR)


@example("projections of the pairwise example")
def _pairwise_projections() -> bool:
    x = _pairwise()
    level1 = molecule_algebra.project(x, 1, 1)
    twisted = Signature(2, (0, 1))
    return level1 == _sub(PAIRWISE_MIDDLE_LEVEL_1, twisted) and molecule_algebra.project(x, 1, 3).is_empty


@example("pairwise example is a molecule")
def _pairwise_molecule() -> bool:
    x = _pairwise()
    return bool(triple_is_pairwise_def(x)) and bool(triple_is_pairwise_explicit(x))


@example("condition 1 counterexample is rejected")
def _non_condition1_rejected() -> bool:
    verdict = triple_is_pairwise_def(_sub(NON_CONDITION1, TRIPLE))
    return not verdict and verdict.reason == "cond1"


@example("adjacent pairs of the pairwise example")
def _pairwise_adjacent() -> bool:
    x = _pairwise()
    computed = {frozenset(pair) for pair in adjacent_pairs3(x)}
    published = {frozenset((_atom(a), _atom(b))) for a, b in PAIRWISE_ADJACENT}
    return computed == published


@example("sign-link adjacency is weaker than adjacency")
def _rs_adjacent_not_adjacent() -> bool:
    x = _pairwise()
    a, b = _atom("(1-,2+,8+)"), _atom("(4-,0-,7+)")
    c = _atom("(5-,2+,5-)")
    return (
        rs_adjacent3(a, b, x, 0, 1)
        and not adjacent3(a, b, x)
        and not adjacent3(c, b, x)
        and adjacent3(_atom("(8+,2+,1-)"), c, x)
        and not adjacent3(_atom("(8+,2+,1-)"), _atom("(1-,2+,8+)"), x)
    )


@example("projection-maximal atoms of the pairwise example")
def _pairwise_projection_maximal() -> bool:
    x = _pairwise()
    for level, text in PAIRWISE_PROJECTION_MAXIMAL.items():
        if set(projection_maximal_atoms3(x, 1, level)) != set(_sub(text, TRIPLE).maximal):
            return False
    return not projection_maximal_atoms3(x, 1, 3)


@example("projection commutes with boundaries")
def _projection_naturality() -> bool:
    x = _pairwise()
    for gamma in (Sign.MINUS, Sign.PLUS):
        left = molecule_algebra.project(triple_d(x, 10, gamma), 1, 1)
        right = molecule_algebra.molecule_d(molecule_algebra.project(x, 1, 1), 9, gamma)
        if left != right:
            return False
    return True


@example("level description accepts the pairwise example")
def _pairwise_levels() -> bool:
    return bool(validate_maximal_atom_set(_pairwise().maximal))


@example("cube item 31 decomposes")
def _cube_item_31() -> bool:
    x = _sub(CUBE_ITEM_31, CUBE)
    published = MoleculeSerializer.parse_expr(CUBE_ITEM_31_TREE)
    return molecule_algebra.evaluate(published, CUBE) == x


@example("enumeration of the cube")
def _cube_enumeration() -> bool:
    catalog = EnumerationService().enumerate3((1, 1, 1), mode="capped")
    return set(catalog.entries) == {_sub(text, CUBE) for text in CUBE_MOLECULES}


@example("oracle atom counts")
def _oracle_atom_counts() -> bool:
    return len(build_complex((1, 1, 1))) == 27 and len(build_complex((2, 1))) == 15


@example("oracle source boundary of the cube")
def _oracle_cube_boundary() -> bool:
    complex_ = build_complex((1, 1, 1))
    whole = _sub("(1*,1*,1*)", CUBE)
    return oracle_d(complex_, whole, 2, Sign.MINUS) == _sub(CUBE_SOURCE_BOUNDARY, CUBE)


@example("oracle molecules of the cube")
def _oracle_cube() -> bool:
    oracle = OracleService()
    molecules = oracle.molecules((1, 1, 1))
    item = _sub(CUBE_ITEM_31, CUBE)
    return set(molecules) == {_sub(text, CUBE) for text in CUBE_MOLECULES} and oracle.is_molecule(item)


@example("four-factor crossing pair separated by a third atom")
def _quad_crossing() -> bool:
    signature = Signature.plain(4)
    lam, mu, nu = _atom("(5-,0-,1-,1-)"), _atom("(0-,5-,1-,2-)"), _atom("(1-,1-,2-,1-)")
    with_nu = normalize(signature, [lam, mu, nu])
    without_nu = normalize(signature, [lam, mu])
    return not st_adjacent4(lam, mu, with_nu, 0, 1) and st_adjacent4(lam, mu, without_nu, 0, 1)


def verify_worked_examples(names: Optional[Sequence[str]] = None) -> List[Tuple[str, bool]]:
    """Run the registered examples (all of them, or those named) and report each outcome."""
    results = []
    for name, check in EXAMPLES:
        if names is not None and name not in names:
            continue
        try:
            ok = bool(check())
        except Exception:
            logger.exception("example %r raised", name)
            ok = False
        if not ok:
            logger.warning("example %r failed", name)
        results.append((name, ok))
    return results

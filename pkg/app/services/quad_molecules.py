"""Molecules in a product of four infinite globes."""
from itertools import combinations, permutations
from typing import Tuple

from app.domain.atom import ProductAtom, Sign
from app.domain.errors import NotAMoleculeError, SignatureError
from app.domain.expr import MoleculeExpr
from app.domain.subcomplex import Subcomplex
from app.domain.verdict import Verdict
from app.services import molecule_algebra
from app.services.atom_algebra import factor_contains, factor_intersect, min_dims
from app.services.subcomplexes import condition1_violation, untwist
from app.services.triple_molecules import (
    check_by_projections,
    require_input,
    triple_is_pairwise_def,
)

AXIS_PAIRS = tuple(combinations(range(4), 2))


def project4(x: Subcomplex, axis: int, level: int) -> Subcomplex:
    if x.signature.arity != 4:
        raise SignatureError(f"expected a product of 4 globes, got {x.signature.arity}")
    return molecule_algebra.project(x, axis, level)


def quad_is_pairwise_def(x: Subcomplex) -> Verdict:
    require_input(x, 4)
    return check_by_projections(x, triple_is_pairwise_def)


def st_adjacent4(a: ProductAtom, b: ProductAtom, x: Subcomplex, s: int, t: int) -> bool:
    return molecule_algebra.st_adjacent(a, b, x, s, t)


def _sign_violation(y: Subcomplex) -> Tuple[Tuple[ProductAtom, ...], str]:
    for a, b in permutations(y.maximal, 2):
        mins = min_dims(a, b)
        for s, t in AXIS_PAIRS:
            if not (a.dims[s] < b.dims[s] and b.dims[t] < a.dims[t]):
                continue
            if not molecule_algebra.st_adjacent(a, b, y, s, t):
                continue
            required = -a.factors[s].sign.twisted(sum(mins[s:t]))
            if b.factors[t].sign != required:
                return (a, b), f"({s + 1},{t + 1})"
    return (), ""


def _covers_intersection(nu: ProductAtom, a: ProductAtom, b: ProductAtom, r: int) -> bool:
    return all(factor_contains(nu.factors[r], piece) for piece in factor_intersect(a.factors[r], b.factors[r]))


def _flip_cover_violation(y: Subcomplex) -> Tuple[ProductAtom, ...]:
    atoms = y.maximal
    for a, b in combinations(atoms, 2):
        mins = min_dims(a, b)
        for s in range(4):
            if a.dims[s] != b.dims[s] or a.factors[s].sign == b.factors[s].sign:
                continue
            for t in range(4):
                if t == s:
                    continue
                others = [r for r in range(4) if r not in (s, t)]
                if not any(
                    nu.dims[s] > a.dims[s]
                    and nu.dims[t] >= mins[t]
                    and all(_covers_intersection(nu, a, b, r) for r in others)
                    for nu in atoms
                ):
                    return (a, b)
    return ()


def _middle_gap_violation(y: Subcomplex) -> Tuple[Tuple[ProductAtom, ...], str]:
    for a, b in permutations(y.maximal, 2):
        mins = min_dims(a, b)
        for s, r, t in combinations(range(4), 3):
            if not (a.dims[s] > b.dims[s] and mins[r] > 0 and b.dims[t] > a.dims[t]):
                continue
            if not molecule_algebra.st_adjacent(a, b, y, s, t):
                continue
            rest = [q for q in range(4) if q not in (s, r, t)]
            if not any(
                nu.dims[s] > b.dims[s]
                and nu.dims[r] == mins[r] - 1
                and nu.dims[t] > a.dims[t]
                and all(nu.dims[q] >= mins[q] for q in rest)
                for nu in y.maximal
            ):
                return (a, b), f"({s + 1},{r + 1},{t + 1})"
    return (), ""


def quad_is_pairwise_explicit(x: Subcomplex) -> Verdict:
    require_input(x, 4)
    violation = condition1_violation(x)
    if violation:
        return Verdict.reject("cond1", *violation)
    y = untwist(x)
    witnesses, where = _sign_violation(y)
    if witnesses:
        return Verdict.reject("sign", *witnesses, detail=where)
    witnesses = _flip_cover_violation(y)
    if witnesses:
        return Verdict.reject("flip-cover", *witnesses)
    witnesses, where = _middle_gap_violation(y)
    if witnesses:
        return Verdict.reject("middle-gap", *witnesses, detail=where)
    return Verdict.accept()


def _require_molecule(x: Subcomplex):
    verdict = quad_is_pairwise_def(x)
    if not verdict:
        raise NotAMoleculeError(verdict)


def quad_d(x: Subcomplex, p: int, gamma: Sign) -> Subcomplex:
    _require_molecule(x)
    return molecule_algebra.molecule_d(x, p, gamma)


def quad_compose(x: Subcomplex, p: int, y: Subcomplex) -> Subcomplex:
    _require_molecule(x)
    _require_molecule(y)
    return molecule_algebra.compose(x, p, y)


def natural_less4(a: ProductAtom, b: ProductAtom) -> bool:
    return molecule_algebra.natural_less(a, b)


def decompose4(x: Subcomplex) -> MoleculeExpr:
    _require_molecule(x)
    return molecule_algebra.decompose(x)

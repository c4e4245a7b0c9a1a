"""Molecules in a product of three (possibly twisted) infinite globes.

Two equivalent checkers are provided: the definition (condition 1 plus
every projection to a twisted pair is a molecule) and the explicit list of
sign, flip-cover, middle-gap and triple-sign conditions.
"""
import logging
from itertools import permutations
from typing import Callable, List, Tuple

from app.domain.atom import ProductAtom, Sign
from app.domain.errors import (
    EmptySubcomplexError,
    NotAMoleculeError,
    PreconditionError,
    SignatureError,
)
from app.domain.expr import MoleculeExpr
from app.domain.subcomplex import Subcomplex
from app.domain.verdict import Verdict
from app.services import molecule_algebra
from app.services.atom_algebra import dims_leq, min_dims
from app.services.pair_molecules import pair_is_molecule
from app.services.subcomplexes import condition1_violation, untwist

logger = logging.getLogger(__name__)


def require_input(x: Subcomplex, arity: int):
    if x.signature.arity != arity:
        raise SignatureError(f"expected a product of {arity} globes, got {x.signature.arity}")
    if x.is_empty:
        raise EmptySubcomplexError()
    if x.has_top:
        raise PreconditionError("capped subcomplexes are checked through their signed lifts")


def project(x: Subcomplex, axis: int, level: int) -> Subcomplex:
    if x.signature.arity != 3:
        raise SignatureError(f"expected a product of 3 globes, got {x.signature.arity}")
    return molecule_algebra.project(x, axis, level)


def check_by_projections(x: Subcomplex, sub_checker: Callable[[Subcomplex], Verdict]) -> Verdict:
    """Condition 1, then every nonempty single-axis projection must pass `sub_checker`."""
    violation = condition1_violation(x)
    if violation:
        return Verdict.reject("cond1", *violation)
    for axis in range(x.signature.arity):
        for level in range(x.max_factor_dim(axis) + 1):
            image = molecule_algebra.project(x, axis, level)
            if image.is_empty:
                continue
            verdict = sub_checker(image)
            if not verdict:
                logger.debug("projection (%d, %d) of %s rejected: %s", axis, level, x, verdict.reason)
                return Verdict.reject(
                    "projection",
                    *verdict.witnesses,
                    axis=axis,
                    level=level,
                    detail=verdict.reason,
                )
    return Verdict.accept()


def triple_is_pairwise_def(x: Subcomplex) -> Verdict:
    require_input(x, 3)
    return check_by_projections(x, pair_is_molecule)


def _flip_cover_violation(atoms) -> Tuple[ProductAtom, ...]:
    """Pairs agreeing in dimension but not in sign on some factor need an atom beyond them there."""
    for n, a in enumerate(atoms):
        for b in atoms[n + 1:]:
            mins = min_dims(a, b)
            for f in range(a.arity):
                if a.dims[f] != b.dims[f] or a.factors[f].sign == b.factors[f].sign:
                    continue
                covered = any(
                    nu.dims[f] > a.dims[f]
                    and all(nu.dims[g] >= mins[g] for g in range(a.arity) if g != f)
                    for nu in atoms
                )
                if not covered:
                    return (a, b)
    return ()


def _sign_violation(y: Subcomplex, pairs) -> Tuple[ProductAtom, ...]:
    for first, second in pairs:
        for a, b in ((first, second), (second, first)):
            (i1, j1, k1), (i2, j2, k2) = a.dims, b.dims
            alpha1, beta1, _ = a.signs
            _, beta2, eps2 = b.signs
            j = min(j1, j2)
            if i1 < i2 and j2 < j1 and beta2 != -alpha1.twisted(i1):
                return (a, b)
            if i1 < i2 and k2 < k1 and eps2 != -alpha1.twisted(i1 + j):
                return (a, b)
            if j1 < j2 and k2 < k1 and eps2 != -beta1.twisted(j1):
                return (a, b)
    return ()


def _middle_gap_violation(y: Subcomplex, pairs) -> Tuple[ProductAtom, ...]:
    for first, second in pairs:
        for a, b in ((first, second), (second, first)):
            (i1, j1, k1), (i2, j2, k2) = a.dims, b.dims
            j = min(j1, j2)
            if not (i2 < i1 and k1 < k2 and j > 0):
                continue
            if not any(
                nu.dims[0] > i2 and nu.dims[1] == j - 1 and nu.dims[2] > k1
                for nu in y.maximal
            ):
                return (a, b)
    return ()


def _triple_sign_violation(y: Subcomplex, pairs) -> Tuple[ProductAtom, ...]:
    adjacent = set(pairs) | {(b, a) for a, b in pairs}
    for l1, l2, l3 in permutations(y.maximal, 3):
        if (l1, l2) not in adjacent or (l1, l3) not in adjacent or (l2, l3) not in adjacent:
            continue
        i, j, k = l2.dims[0], l1.dims[1], l1.dims[2]
        if not (l3.dims[0] == i and l3.dims[1] == j and l2.dims[2] == k):
            continue
        if not (l1.dims[0] > i and l2.dims[1] > j and l3.dims[2] > k):
            continue
        if not (l2.signs[0] == l3.signs[0] or l1.signs[1] == l3.signs[1] or l1.signs[2] == l2.signs[2]):
            return (l1, l2, l3)
    return ()


def triple_is_pairwise_explicit(x: Subcomplex) -> Verdict:
    require_input(x, 3)
    violation = condition1_violation(x)
    if violation:
        return Verdict.reject("cond1", *violation)
    y = untwist(x)
    pairs = molecule_algebra.adjacent_pairs(y)
    witnesses = _sign_violation(y, pairs)
    if witnesses:
        return Verdict.reject("sign", *witnesses)
    witnesses = _flip_cover_violation(y.maximal)
    if witnesses:
        return Verdict.reject("flip-cover", *witnesses)
    witnesses = _middle_gap_violation(y, pairs)
    if witnesses:
        return Verdict.reject("middle-gap", *witnesses)
    witnesses = _triple_sign_violation(y, pairs)
    if witnesses:
        return Verdict.reject("triple-sign", *witnesses)
    return Verdict.accept()


def adjacent3(a: ProductAtom, b: ProductAtom, x: Subcomplex) -> bool:
    if x.signature.arity != 3:
        raise SignatureError(f"expected a product of 3 globes, got {x.signature.arity}")
    return molecule_algebra.adjacent(a, b, x)


def adjacent_pairs3(x: Subcomplex) -> List[Tuple[ProductAtom, ProductAtom]]:
    return molecule_algebra.adjacent_pairs(x)


def rs_adjacent3(a: ProductAtom, b: ProductAtom, x: Subcomplex, r: int, s: int) -> bool:
    """The pair relation under which a sign link between factors r < s (0-based) is forced.

    With a first: a is smaller in factor r, larger in factor s, and no maximal
    atom is strictly larger than a in r and strictly larger than b in s while
    reaching the pair's minimum in the remaining factor.
    """
    molecule_algebra._require_pair(a, b, x)
    if (r, s) not in ((0, 1), (0, 2), (1, 2)):
        raise PreconditionError(f"need 0 <= r < s <= 2, got r={r} s={s}")
    if not (a.dims[r] < b.dims[r] and a.dims[s] > b.dims[s]):
        return False
    (other,) = {0, 1, 2} - {r, s}
    floor = min(a.dims[other], b.dims[other])
    return not any(
        nu.dims[r] > a.dims[r] and nu.dims[s] > b.dims[s] and nu.dims[other] >= floor
        for nu in x.maximal
    )


def projection_maximal3(atom: ProductAtom, x: Subcomplex, axis: int, level: int) -> bool:
    return molecule_algebra.projection_maximal(atom, x, axis, level)


def projection_maximal_atoms3(x: Subcomplex, axis: int, level: int) -> List[ProductAtom]:
    return molecule_algebra.projection_maximal_atoms(x, axis, level)


def _require_molecule(x: Subcomplex):
    verdict = triple_is_pairwise_def(x)
    if not verdict:
        raise NotAMoleculeError(verdict)


def triple_d(x: Subcomplex, p: int, gamma: Sign) -> Subcomplex:
    _require_molecule(x)
    return molecule_algebra.molecule_d(x, p, gamma)


def triple_compose(x: Subcomplex, p: int, y: Subcomplex) -> Subcomplex:
    _require_molecule(x)
    _require_molecule(y)
    return molecule_algebra.compose(x, p, y)


def frame_dim(x: Subcomplex) -> int:
    return molecule_algebra.frame_dim(x)


def natural_less3(a: ProductAtom, b: ProductAtom) -> bool:
    return molecule_algebra.natural_less(a, b)


def decompose3(x: Subcomplex) -> MoleculeExpr:
    _require_molecule(x)
    return molecule_algebra.decompose(x)

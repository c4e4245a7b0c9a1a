"""Arity-independent molecule algebra.

Everything here works on the untwisted relabeling of its input and carries
results back, so the sign rules only ever see untwisted factors.
"""
import logging
from typing import Iterable, List, Tuple

from app.domain.atom import FactorAtom, ProductAtom, Sign
from app.domain.errors import (
    BoundaryMismatchError,
    ConstructionError,
    EmptySubcomplexError,
    PreconditionError,
    SignatureError,
)
from app.domain.expr import Composite, Leaf, MoleculeExpr, map_leaves
from app.domain.subcomplex import Subcomplex
from app.services.atom_algebra import dim_vectors, dims_leq, min_dims, min_sum
from app.services.subcomplexes import (
    is_condition1,
    normalize,
    retwist,
    untwist,
    untwist_atom,
)

logger = logging.getLogger(__name__)


def molecule_d(x: Subcomplex, p: int, gamma: Sign) -> Subcomplex:
    """d_p^gamma of a molecule given by its maximal atoms.

    Maximal atoms below dimension p survive. Every dimension-p dims vector
    under some maximal atom becomes an atom whose factor f takes the sign
    gamma * (-1)^(dims left of f) when some dominating atom is strictly larger
    in f, and otherwise inherits the dominating atom's factor.
    """
    if x.is_empty:
        raise EmptySubcomplexError()
    if p < 0:
        raise PreconditionError(f"negative level {p}")
    if p >= x.dim:
        return x
    y = untwist(x)
    kept = [a for a in y.maximal if a.dim < p]
    high = [a for a in y.maximal if a.dim >= p]
    vectors = set()
    for atom in high:
        vectors.update(dim_vectors(atom.dims, p))

    faces = []
    for v in sorted(vectors):
        witnesses = [h for h in high if dims_leq(v, h.dims)]
        factors = []
        prefix = 0
        for f, d in enumerate(v):
            if any(h.dims[f] > d for h in witnesses):
                factors.append(FactorAtom(d, gamma.twisted(prefix)))
            else:
                factors.append(witnesses[0].factors[f])
            prefix += d
        faces.append(ProductAtom(tuple(factors)))
    return retwist(normalize(y.signature, kept + faces), x.signature)


def source(x: Subcomplex, p: int) -> Subcomplex:
    return molecule_d(x, p, Sign.MINUS)


def target(x: Subcomplex, p: int) -> Subcomplex:
    return molecule_d(x, p, Sign.PLUS)


def compose(x: Subcomplex, p: int, y: Subcomplex) -> Subcomplex:
    """x #_p y; requires d_p^+ x == d_p^- y."""
    if x.signature != y.signature:
        raise SignatureError(f"signature mismatch: {x.signature} vs {y.signature}")
    left = molecule_d(x, p, Sign.PLUS)
    right = molecule_d(y, p, Sign.MINUS)
    if left != right:
        raise BoundaryMismatchError(p, left, right)
    return normalize(x.signature, composite_maximal_atoms(x, p, y))


def composite_maximal_atoms(x: Subcomplex, p: int, y: Subcomplex) -> Tuple[ProductAtom, ...]:
    """Maximal atoms of a defined composite: the common ones of dim <= p and all of dim > p."""
    common = [a for a in x.maximal if a in y.maximal and a.dim <= p]
    high = [a for a in x.maximal + y.maximal if a.dim > p]
    return normalize(x.signature, common + high).maximal


def frame_dim(x: Subcomplex) -> int:
    """Largest dimension of an intersection of two distinct maximal atoms."""
    atoms = x.maximal
    if len(atoms) < 2:
        raise PreconditionError("atom has no frame dimension")
    return max(
        min_sum(a, b)
        for i, a in enumerate(atoms)
        for b in atoms[i + 1:]
    )


def natural_less(a: ProductAtom, b: ProductAtom) -> bool:
    """The order in which maximal atoms above the frame dimension are split off.

    Factors are compared left to right (all but the last). A factor whose
    left-hand dims sum to an even number lists minus atoms first in ascending
    dimension, then plus atoms in descending dimension; an odd sum mirrors this.
    """
    if a.has_top or b.has_top:
        raise PreconditionError("the natural order is defined on signed atoms only")
    parity = 0
    for fa, fb in zip(a.factors[:-1], b.factors[:-1]):
        leading = Sign.MINUS.twisted(parity)
        if fa.sign != fb.sign:
            return fa.sign == leading
        if fa.dim != fb.dim:
            return fa.dim < fb.dim if fa.sign == leading else fa.dim > fb.dim
        parity += fa.dim
    return False


def natural_sorted(atoms: Iterable[ProductAtom]) -> List[ProductAtom]:
    ordered: List[ProductAtom] = []
    for atom in atoms:
        index = len(ordered)
        while index > 0 and natural_less(atom, ordered[index - 1]):
            index -= 1
        ordered.insert(index, atom)
    return ordered


def split(x: Subcomplex) -> Tuple[Subcomplex, int, Subcomplex]:
    """Lambda = Lambda^- #_p Lambda^+ at the frame dimension p of an untwisted molecule."""
    p = frame_dim(x)
    high = [a for a in x.maximal if a.dim > p]
    if len(high) < 2:
        raise ConstructionError(f"{x} has fewer than two atoms above its frame dimension {p}")
    first, *rest = natural_sorted(high)
    lower = normalize(x.signature, list(molecule_d(x, p, Sign.MINUS).maximal) + [first])
    upper = normalize(x.signature, list(molecule_d(x, p, Sign.PLUS).maximal) + rest)
    if lower == x or upper == x:
        raise ConstructionError(f"split of {x} at {p} does not make progress")
    logger.debug("split %s at %d into %s and %s", x, p, lower, upper)
    return lower, p, upper


def _decompose_untwisted(x: Subcomplex) -> MoleculeExpr:
    if len(x.maximal) == 1:
        return Leaf(x.maximal[0])
    lower, p, upper = split(x)
    return Composite(_decompose_untwisted(lower), p, _decompose_untwisted(upper))


def decompose(x: Subcomplex) -> MoleculeExpr:
    """Expression tree of atoms evaluating to the molecule x."""
    if x.is_empty:
        raise EmptySubcomplexError()
    expr = _decompose_untwisted(untwist(x))
    if not x.signature.is_twisted:
        return expr
    return map_leaves(expr, lambda atom: untwist_atom(x.signature, atom))


def evaluate(expr: MoleculeExpr, signature) -> Subcomplex:
    """Evaluate a tree, checking d_n^+ left == d_n^- right at every node."""
    if isinstance(expr, Leaf):
        return normalize(signature, [expr.atom])
    return compose(evaluate(expr.left, signature), expr.level, evaluate(expr.right, signature))


def project(x: Subcomplex, axis: int, level: int) -> Subcomplex:
    """Image under the projection dropping `axis` from atoms whose axis-dim is at least `level`."""
    signature = x.signature.project(axis, level)
    return normalize(
        signature,
        (a.without_factor(axis) for a in x.maximal if a.dims[axis] >= level),
    )


def _require_pair(a: ProductAtom, b: ProductAtom, x: Subcomplex):
    if a == b or a not in x.maximal or b not in x.maximal:
        raise PreconditionError(f"{a} and {b} must be distinct maximal atoms of {x}")
    if not is_condition1(x):
        raise PreconditionError(f"{x} does not satisfy condition 1")


def adjacent(a: ProductAtom, b: ProductAtom, x: Subcomplex) -> bool:
    """No maximal atom above the pairwise mins beats the min-sum of a and b against both."""
    _require_pair(a, b, x)
    mins = min_dims(a, b)
    m = sum(mins)
    for nu in x.maximal:
        if dims_leq(mins, nu.dims) and min_sum(a, nu) > m and min_sum(b, nu) > m:
            return False
    return True


def adjacent_pairs(x: Subcomplex) -> List[Tuple[ProductAtom, ProductAtom]]:
    atoms = x.maximal
    return [
        (a, b)
        for i, a in enumerate(atoms)
        for b in atoms[i + 1:]
        if adjacent(a, b, x)
    ]


def st_adjacent(a: ProductAtom, b: ProductAtom, x: Subcomplex, s: int, t: int) -> bool:
    """(s, t)-adjacency for 0-based factor indices s < t."""
    _require_pair(a, b, x)
    if not 0 <= s < t < a.arity:
        raise PreconditionError(f"need 0 <= s < t < {a.arity}, got s={s} t={t}")
    crossing = max(a.dims[s], b.dims[s]) + max(a.dims[t], b.dims[t])
    if crossing <= max(a.dims[s] + a.dims[t], b.dims[s] + b.dims[t]):
        return False
    mins = min_dims(a, b)
    m = mins[s] + mins[t]
    for nu in x.maximal:
        if not dims_leq(mins, nu.dims):
            continue
        with_a = min(a.dims[s], nu.dims[s]) + min(a.dims[t], nu.dims[t])
        with_b = min(b.dims[s], nu.dims[s]) + min(b.dims[t], nu.dims[t])
        if with_a > m and with_b > m:
            return False
    return True


def projection_maximal(atom: ProductAtom, x: Subcomplex, axis: int, level: int) -> bool:
    """True iff the atom's image stays maximal under the projection (axis, level)."""
    if atom not in x.maximal:
        raise PreconditionError(f"{atom} is not a maximal atom of {x}")
    if not is_condition1(x):
        raise PreconditionError(f"{x} does not satisfy condition 1")
    if atom.dims[axis] < level:
        return False
    for nu in x.maximal:
        if nu == atom or not level <= nu.dims[axis] < atom.dims[axis]:
            continue
        if all(nu.dims[g] >= atom.dims[g] for g in range(atom.arity) if g != axis):
            return False
    return True


def projection_maximal_atoms(x: Subcomplex, axis: int, level: int) -> List[ProductAtom]:
    return [a for a in x.maximal if projection_maximal(a, x, axis, level)]

"""Containment, boundaries and intersections of single product atoms.

A factor f of dimension i contributes to d_p^gamma of an atom with sign
gamma * (-1)^(t_f + sum of the result's dims left of f) whenever its dimension
drops; factors that keep their dimension keep their sign. This one rule
covers the two-, three- and four-factor tables as well as twisted factors.
"""
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.domain.atom import FactorAtom, ProductAtom, Sign, Signature
from app.domain.errors import NoBoundaryError, SignatureError
from app.domain.subcomplex import Subcomplex


def atom_dim(atom: ProductAtom) -> int:
    return atom.dim


def factor_contains(big: FactorAtom, small: FactorAtom) -> bool:
    if small.dim < big.dim:
        return True
    return small.dim == big.dim and (big.is_top or big.sign == small.sign)


def atom_contains(big: ProductAtom, small: ProductAtom) -> bool:
    if big.arity != small.arity:
        raise SignatureError(f"cannot compare {big} with {small}")
    return all(factor_contains(b, s) for b, s in zip(big.factors, small.factors))


def dims_leq(small: Sequence[int], big: Sequence[int]) -> bool:
    return all(s <= b for s, b in zip(small, big))


def min_dims(a: ProductAtom, b: ProductAtom) -> Tuple[int, ...]:
    return tuple(min(x, y) for x, y in zip(a.dims, b.dims))


def min_sum(a: ProductAtom, b: ProductAtom) -> int:
    return sum(min_dims(a, b))


def dim_vectors(bounds: Sequence[int], total: int) -> Iterator[Tuple[int, ...]]:
    """All integer vectors v with 0 <= v[f] <= bounds[f] and sum(v) == total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest = sum(bounds[1:])
    for first in range(max(0, total - rest), min(bounds[0], total) + 1):
        for tail in dim_vectors(bounds[1:], total - first):
            yield (first,) + tail


def maximal_atoms(atoms: Iterable[ProductAtom]) -> Tuple[ProductAtom, ...]:
    """Drop duplicates and atoms contained in another one; sort canonically."""
    unique = set(atoms)
    kept = [
        a for a in unique
        if not any(b != a and atom_contains(b, a) for b in unique)
    ]
    return tuple(sorted(kept, key=ProductAtom.sort_key))


def _as_subcomplex(signature: Signature, atoms: Iterable[ProductAtom]) -> Subcomplex:
    return Subcomplex(signature, maximal_atoms(atoms))


def descend(atom: ProductAtom, dims: Sequence[int], gamma: Sign, signature: Signature) -> ProductAtom:
    """The face of `atom` with the given smaller dims on the gamma side."""
    factors = []
    prefix = 0
    for f, (factor, d) in enumerate(zip(atom.factors, dims)):
        if d == factor.dim:
            factors.append(factor)
        else:
            factors.append(FactorAtom(d, gamma.twisted(signature.twists[f] + prefix)))
        prefix += d
    return ProductAtom(tuple(factors))


def atom_boundary(signature: Signature, atom: ProductAtom, gamma: Sign) -> Subcomplex:
    """Maximal atoms of the gamma boundary of an atom of positive dimension."""
    signature.validate_atom(atom)
    if atom.dim == 0:
        raise NoBoundaryError(atom)
    faces = []
    for f, factor in enumerate(atom.factors):
        if factor.dim == 0:
            continue
        dims = list(atom.dims)
        dims[f] -= 1
        faces.append(descend(atom, dims, gamma, signature))
    return _as_subcomplex(signature, faces)


def atom_d(signature: Signature, atom: ProductAtom, p: int, gamma: Sign) -> Subcomplex:
    signature.validate_atom(atom)
    if atom.dim <= p:
        return _as_subcomplex(signature, [atom])
    return _as_subcomplex(
        signature,
        (descend(atom, v, gamma, signature) for v in dim_vectors(atom.dims, p)),
    )


def factor_intersect(a: FactorAtom, b: FactorAtom) -> List[FactorAtom]:
    if factor_contains(a, b):
        return [b]
    if factor_contains(b, a):
        return [a]
    # equal dimensions with opposite signs meet in the two lower hemispheres
    if a.dim == 0:
        return []
    return [FactorAtom(a.dim - 1, Sign.MINUS), FactorAtom(a.dim - 1, Sign.PLUS)]


def atom_intersect(signature: Signature, a: ProductAtom, b: ProductAtom) -> Subcomplex:
    signature.validate_atom(a)
    signature.validate_atom(b)
    choices = [factor_intersect(x, y) for x, y in zip(a.factors, b.factors)]
    if any(not c for c in choices):
        return Subcomplex.empty(signature)
    return _as_subcomplex(signature, (ProductAtom(tuple(c)) for c in product(*choices)))

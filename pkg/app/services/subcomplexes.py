from typing import Iterable, Optional, Tuple

from app.domain.atom import FactorAtom, ProductAtom, Signature
from app.domain.errors import EmptySubcomplexError, SignatureError
from app.domain.subcomplex import Subcomplex
from app.services.atom_algebra import (
    atom_contains,
    atom_intersect,
    dims_leq,
    maximal_atoms,
)


def normalize(signature: Signature, atoms: Iterable[ProductAtom]) -> Subcomplex:
    """Canonical antichain of the maximal atoms among `atoms`."""
    atoms = list(atoms)
    for atom in atoms:
        signature.validate_atom(atom)
    return Subcomplex(signature, maximal_atoms(atoms))


def _same_signature(x: Subcomplex, y: Subcomplex) -> Signature:
    if x.signature != y.signature:
        raise SignatureError(f"signature mismatch: {x.signature} vs {y.signature}")
    return x.signature


def sub_union(x: Subcomplex, y: Subcomplex) -> Subcomplex:
    signature = _same_signature(x, y)
    return normalize(signature, x.maximal + y.maximal)


def sub_intersect(x: Subcomplex, y: Subcomplex) -> Subcomplex:
    signature = _same_signature(x, y)
    pieces = []
    for a in x.maximal:
        for b in y.maximal:
            pieces.extend(atom_intersect(signature, a, b).maximal)
    return normalize(signature, pieces)


def sub_contains_atom(x: Subcomplex, atom: ProductAtom) -> bool:
    return any(atom_contains(m, atom) for m in x.maximal)


def sub_contains(x: Subcomplex, y: Subcomplex) -> bool:
    _same_signature(x, y)
    return all(sub_contains_atom(x, a) for a in y.maximal)


def condition1_violation(x: Subcomplex) -> Optional[Tuple[ProductAtom, ProductAtom]]:
    """A pair of distinct maximal atoms with componentwise comparable dims, if any."""
    if x.is_empty:
        raise EmptySubcomplexError()
    atoms = x.maximal
    for i, a in enumerate(atoms):
        for b in atoms[i + 1:]:
            if dims_leq(a.dims, b.dims):
                return (a, b)
            if dims_leq(b.dims, a.dims):
                return (b, a)
    return None


def is_condition1(x: Subcomplex) -> bool:
    return condition1_violation(x) is None


def _flip_twisted(atom: ProductAtom, twists) -> ProductAtom:
    return ProductAtom(tuple(
        FactorAtom(f.dim, f.sign.twisted(t)) if f.sign is not None else f
        for f, t in zip(atom.factors, twists)
    ))


def untwist_atom(signature: Signature, atom: ProductAtom) -> ProductAtom:
    return _flip_twisted(atom, signature.twists)


def untwist(x: Subcomplex) -> Subcomplex:
    """Relabel a twisted product as the untwisted one by flipping signs in twisted factors."""
    if not x.signature.is_twisted:
        return x
    return normalize(
        x.signature.untwisted(),
        (untwist_atom(x.signature, a) for a in x.maximal),
    )


def retwist(x: Subcomplex, signature: Signature) -> Subcomplex:
    """Inverse of `untwist`: carry an untwisted result back to `signature`."""
    if not signature.is_twisted:
        return x
    return normalize(signature, (untwist_atom(signature, a) for a in x.maximal))

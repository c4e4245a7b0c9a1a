"""Molecules in a product of two (possibly twisted) infinite globes."""
from app.domain.atom import Sign
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


def _require_pair_input(x: Subcomplex):
    if x.signature.arity != 2:
        raise SignatureError(f"expected a product of 2 globes, got {x.signature.arity}")
    if x.is_empty:
        raise EmptySubcomplexError()
    if x.has_top:
        raise PreconditionError("capped subcomplexes are checked through their signed lifts")


def pair_is_molecule(x: Subcomplex) -> Verdict:
    """Staircase shape plus the sign link between consecutive maximal atoms.

    Listed by decreasing first dimension, the second dimensions must increase,
    and each atom's second sign must equal -(-1)^(i + t1 + t2) times the next
    atom's first sign, where i is the next atom's first dimension.
    """
    _require_pair_input(x)
    t1, t2 = x.signature.twists
    atoms = sorted(x.maximal, key=lambda a: (-a.dims[0], a.dims[1]))
    for prev, cur in zip(atoms, atoms[1:]):
        if not (prev.dims[0] > cur.dims[0] and prev.dims[1] < cur.dims[1]):
            return Verdict.reject("staircase", prev, cur)
    for prev, cur in zip(atoms, atoms[1:]):
        alpha = cur.factors[0].sign
        required = -alpha.twisted(cur.dims[0] + t1 + t2)
        if prev.factors[1].sign != required:
            return Verdict.reject("sign-link", prev, cur)
    return Verdict.accept()


def _require_molecule(x: Subcomplex):
    verdict = pair_is_molecule(x)
    if not verdict:
        raise NotAMoleculeError(verdict)


def pair_d(x: Subcomplex, p: int, gamma: Sign) -> Subcomplex:
    _require_molecule(x)
    return molecule_algebra.molecule_d(x, p, gamma)


def pair_compose(x: Subcomplex, p: int, y: Subcomplex) -> Subcomplex:
    _require_molecule(x)
    _require_molecule(y)
    return molecule_algebra.compose(x, p, y)


def decompose2(x: Subcomplex) -> MoleculeExpr:
    _require_molecule(x)
    return molecule_algebra.decompose(x)

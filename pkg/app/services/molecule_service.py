import logging
from typing import Callable, Dict, List, Optional, Tuple

from app import config
from app.domain.atom import ProductAtom, Sign, Signature
from app.domain.errors import EmptySubcomplexError, NotAMoleculeError, SignatureError
from app.domain.expr import MoleculeExpr, map_leaves
from app.domain.subcomplex import Subcomplex
from app.domain.verdict import Verdict
from app.services import molecule_algebra
from app.services.oracle import cap_quotient, signed_lifts
from app.services.pair_molecules import pair_is_molecule
from app.services.quad_molecules import quad_is_pairwise_def, quad_is_pairwise_explicit
from app.services.subcomplexes import is_condition1, normalize
from app.services.triple_molecules import triple_is_pairwise_def, triple_is_pairwise_explicit

logger = logging.getLogger(__name__)

Checker = Callable[[Subcomplex], Verdict]


def _single_globe(x: Subcomplex) -> Verdict:
    if x.is_empty:
        raise EmptySubcomplexError()
    if len(x.maximal) == 1:
        return Verdict.accept()
    return Verdict.reject("cond1", *x.maximal[:2])


DEFINITION_CHECKERS: Dict[int, Checker] = {
    1: _single_globe,
    2: pair_is_molecule,
    3: triple_is_pairwise_def,
    4: quad_is_pairwise_def,
}

EXPLICIT_CHECKERS: Dict[int, Checker] = {
    1: _single_globe,
    2: pair_is_molecule,
    3: triple_is_pairwise_explicit,
    4: quad_is_pairwise_explicit,
}


class MoleculeService:
    """Molecule operations for products of one to four globes.

    Capped subcomplexes are handled through their signed lifts: a capped
    subcomplex is a molecule when some lift is, and its decomposition is the
    image of the lift's decomposition.
    """

    def __init__(self, max_lifts: Optional[int] = None):
        self.max_lifts = max_lifts or config.MAX_SIGNED_LIFTS

    def _search_lifts(self, x: Subcomplex, checker: Checker) -> Tuple[Subcomplex, Verdict]:
        """The first lift the checker accepts, else the first lift with its verdict."""
        if x.is_empty:
            raise EmptySubcomplexError()
        if not is_condition1(x):
            # lifting keeps the dims of every maximal atom, so every lift fails condition 1 too
            lift = next(signed_lifts(x))
            return lift, checker(lift)
        first: Optional[Tuple[Subcomplex, Verdict]] = None
        for lift in signed_lifts(x, self.max_lifts):
            verdict = checker(lift)
            if verdict:
                logger.debug("capped %s accepted through lift %s", x, lift)
                return lift, verdict
            if first is None:
                first = (lift, verdict)
        return first

    def check(self, x: Subcomplex, explicit: bool = False) -> Verdict:
        checker = (EXPLICIT_CHECKERS if explicit else DEFINITION_CHECKERS)[x.signature.arity]
        if not x.signature.is_capped:
            return checker(x)
        return self._search_lifts(x, checker)[1]

    def molecule_lift(self, x: Subcomplex) -> Tuple[Subcomplex, Verdict]:
        """A signed lift of x that is a molecule; x itself when x is uncapped."""
        if not x.signature.is_capped:
            return x, self.check(x)
        return self._search_lifts(x, DEFINITION_CHECKERS[x.signature.arity])

    def require_molecule(self, x: Subcomplex) -> Subcomplex:
        verdict = self.check(x)
        if not verdict:
            raise NotAMoleculeError(verdict)
        return x

    def boundary(self, x: Subcomplex, p: int, gamma: Sign) -> Subcomplex:
        return molecule_algebra.molecule_d(self.require_molecule(x), p, gamma)

    def source(self, x: Subcomplex, p: int) -> Subcomplex:
        return self.boundary(x, p, Sign.MINUS)

    def target(self, x: Subcomplex, p: int) -> Subcomplex:
        return self.boundary(x, p, Sign.PLUS)

    def compose(self, x: Subcomplex, p: int, y: Subcomplex) -> Subcomplex:
        self.require_molecule(x)
        self.require_molecule(y)
        return molecule_algebra.compose(x, p, y)

    def decompose(self, x: Subcomplex) -> MoleculeExpr:
        lift, verdict = self.molecule_lift(x)
        if not verdict:
            raise NotAMoleculeError(verdict)
        expr = molecule_algebra.decompose(lift)
        if not x.signature.is_capped:
            return expr
        caps = x.signature.caps
        return map_leaves(expr, lambda atom: cap_quotient(normalize(lift.signature, [atom]), caps).maximal[0])

    def evaluate(self, expr: MoleculeExpr, signature: Signature) -> Subcomplex:
        return molecule_algebra.evaluate(expr, signature)

    def project(self, x: Subcomplex, axis: int, level: int) -> Subcomplex:
        return molecule_algebra.project(x, axis, level)

    def frame_dim(self, x: Subcomplex) -> int:
        return molecule_algebra.frame_dim(x)

    def adjacent_pairs(self, x: Subcomplex) -> List[Tuple[ProductAtom, ProductAtom]]:
        if x.signature.arity < 2:
            raise SignatureError("adjacency needs at least two factors")
        return molecule_algebra.adjacent_pairs(x)

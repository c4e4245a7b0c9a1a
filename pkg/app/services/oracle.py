"""Brute-force ground truth on products of finite globes.

A subcomplex is a down-closed set of atoms, stored as an int bitmask over
the atom table of a CellComplex. Sources and targets are computed from the
atom boundaries alone, and molecules are found as the closure of the atoms
under every defined composition.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from app import config
from app.domain.atom import FactorAtom, ProductAtom, Sign, Signature
from app.domain.catalog import Catalog
from app.domain.errors import BoundExceededError, EmptySubcomplexError, SignatureError
from app.domain.subcomplex import Subcomplex
from app.services.atom_algebra import atom_boundary, atom_contains
from app.services.subcomplexes import normalize

logger = logging.getLogger(__name__)

Mask = int


def _bits(mask: Mask) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CellComplex:
    """The atoms of a capped product with containment and boundary tables."""

    def __init__(self, signature: Signature):
        if not signature.is_capped:
            raise SignatureError("the oracle needs a capped signature")
        self.signature = signature
        factor_atoms = [
            [FactorAtom(d, s) for d in range(cap) for s in (Sign.MINUS, Sign.PLUS)] + [FactorAtom(cap)]
            for cap in signature.caps
        ]
        self.atoms: List[ProductAtom] = sorted(
            (ProductAtom(tuple(fs)) for fs in product(*factor_atoms)),
            key=ProductAtom.sort_key,
        )
        self.index: Dict[ProductAtom, int] = {a: n for n, a in enumerate(self.atoms)}
        self.max_dim = max(a.dim for a in self.atoms)

        self.closure: List[Mask] = []
        self.strict_supersets: List[Mask] = []
        for a in self.atoms:
            below = 0
            above = 0
            for n, b in enumerate(self.atoms):
                if atom_contains(a, b):
                    below |= 1 << n
                if b != a and atom_contains(b, a):
                    above |= 1 << n
            self.closure.append(below)
            self.strict_supersets.append(above)

        self.boundary: List[Dict[Sign, Mask]] = []
        for a in self.atoms:
            if a.dim == 0:
                self.boundary.append({})
                continue
            self.boundary.append({
                gamma: self.mask_of(atom_boundary(signature, a, gamma).maximal)
                for gamma in (Sign.MINUS, Sign.PLUS)
            })

        self.skeleton: List[Mask] = []
        self.of_dim: List[Mask] = []
        for n in range(self.max_dim + 2):
            self.skeleton.append(sum(1 << m for m, a in enumerate(self.atoms) if a.dim <= n))
            self.of_dim.append(sum(1 << m for m, a in enumerate(self.atoms) if a.dim == n))
        self.d = lru_cache(maxsize=config.ORACLE_D_CACHE_SIZE)(self._d)
        self._molecules: Optional[Set[Mask]] = None

    def __len__(self) -> int:
        return len(self.atoms)

    def mask_of(self, atoms: Iterable[ProductAtom]) -> Mask:
        mask = 0
        for atom in atoms:
            mask |= self.closure[self.index[atom]]
        return mask

    def dim_of(self, mask: Mask) -> int:
        return max(self.atoms[n].dim for n in _bits(mask))

    def maximal_of(self, mask: Mask) -> List[ProductAtom]:
        return [self.atoms[n] for n in _bits(mask) if not self.strict_supersets[n] & mask]

    def _d(self, x: Mask, n: int, alpha: Sign) -> Mask:
        """d_n^alpha: cells of dimension <= n not interior to an (n+1)-atom of x on the wrong side."""
        result = x & self.skeleton[n] if n <= self.max_dim else x
        if n + 1 <= self.max_dim:
            for b in _bits(x & self.of_dim[n + 1]):
                result &= ~(self.closure[b] & ~self.boundary[b][alpha])
        return result

    def composable(self, x: Mask, y: Mask, n: int) -> bool:
        target = self.d(x, n, Sign.PLUS)
        return x & y == target and target == self.d(y, n, Sign.MINUS)


@dataclass
class AxiomReport:
    checked: Dict[str, int] = field(default_factory=dict)
    failures: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, axiom: str):
        self.checked[axiom] = self.checked.get(axiom, 0) + 1

    def fail(self, axiom: str, message: str):
        self.failures.setdefault(axiom, message)


def build_complex(caps: Sequence[int], twists: Sequence[int] = (), max_atoms: Optional[int] = None) -> CellComplex:
    signature = Signature.capped(caps, twists)
    max_atoms = max_atoms or config.ORACLE_MAX_ATOMS
    count = 1
    for cap in signature.caps:
        count *= 2 * cap + 1
    if count > max_atoms:
        raise BoundExceededError(f"{count} atoms exceed the bound of {max_atoms}")
    return CellComplex(signature)


def subcomplex_to_mask(complex_: CellComplex, x: Subcomplex) -> Mask:
    if x.signature != complex_.signature:
        raise SignatureError(f"signature mismatch: {x.signature} vs {complex_.signature}")
    return complex_.mask_of(x.maximal)


def mask_to_subcomplex(complex_: CellComplex, mask: Mask) -> Subcomplex:
    return normalize(complex_.signature, complex_.maximal_of(mask))


def oracle_d(complex_: CellComplex, x: Subcomplex, n: int, alpha: Sign) -> Subcomplex:
    if x.is_empty:
        raise EmptySubcomplexError()
    return mask_to_subcomplex(complex_, complex_.d(subcomplex_to_mask(complex_, x), n, alpha))


def oracle_enumerate_molecules(complex_: CellComplex, max_atomsets: Optional[int] = None) -> Set[Mask]:
    """Closure of the atoms under every composition x #_n y with x & y == d_n^+ x == d_n^- y."""
    if complex_._molecules is not None:
        return complex_._molecules
    max_atomsets = max_atomsets or config.ORACLE_MAX_ATOMSETS
    levels = range(complex_.max_dim)
    molecules: Set[Mask] = set()
    by_source: Dict[Tuple[int, Mask], List[Mask]] = {}
    by_target: Dict[Tuple[int, Mask], List[Mask]] = {}
    worklist: List[Mask] = []

    def register(z: Mask):
        if z in molecules:
            return
        if len(molecules) >= max_atomsets:
            raise BoundExceededError(f"more than {max_atomsets} molecules in {complex_.signature}")
        molecules.add(z)
        for n in levels:
            by_source.setdefault((n, complex_.d(z, n, Sign.MINUS)), []).append(z)
            by_target.setdefault((n, complex_.d(z, n, Sign.PLUS)), []).append(z)
        worklist.append(z)

    for closure in complex_.closure:
        register(closure)
    while worklist:
        x = worklist.pop()
        for n in levels:
            target = complex_.d(x, n, Sign.PLUS)
            for y in list(by_source.get((n, target), ())):
                if x & y == target:
                    register(x | y)
            source = complex_.d(x, n, Sign.MINUS)
            for w in list(by_target.get((n, source), ())):
                if w & x == source:
                    register(w | x)
    logger.info("%d molecules in %s", len(molecules), complex_.signature)
    complex_._molecules = molecules
    return molecules


def oracle_is_molecule(complex_: CellComplex, x: Subcomplex) -> bool:
    return subcomplex_to_mask(complex_, x) in oracle_enumerate_molecules(complex_)


def _composite(complex_: CellComplex, molecules: Set[Mask], x: Mask, y: Mask, n: int) -> Optional[Mask]:
    if x in molecules and y in molecules and complex_.composable(x, y, n):
        z = x | y
        return z if z in molecules else None
    return None


def check_axioms(complex_: CellComplex, molecules: Iterable[Mask]) -> AxiomReport:
    """Check the partial omega-category axioms over a finite set of molecules."""
    M = set(molecules)
    report = AxiomReport()
    levels = range(complex_.max_dim + 1)
    d = complex_.d
    signs = (Sign.MINUS, Sign.PLUS)

    for x in M:
        for n in levels:
            for alpha in signs:
                dx = d(x, n, alpha)
                for m in levels:
                    for beta in signs:
                        report.count("2")
                        expected = d(x, m, beta) if m < n else dx
                        if d(dx, m, beta) != expected:
                            report.fail("2", f"d_{m}^{beta.symbol} d_{n}^{alpha.symbol} {mask_to_subcomplex(complex_, x)}")
            report.count("3")
            if _composite(complex_, M, d(x, n, Sign.MINUS), x, n) != x or _composite(complex_, M, x, d(x, n, Sign.PLUS), n) != x:
                report.fail("3", f"identities at {n} for {mask_to_subcomplex(complex_, x)}")
        report.count("7")
        fixed = [all(d(x, n, a) == x for a in signs) for n in levels]
        p = fixed.index(True) if True in fixed else None
        if p is None or not all(fixed[p:]) or any(
            d(x, n, a) == x for n in levels[:p] for a in signs
        ):
            report.fail("7", f"no dimension for {mask_to_subcomplex(complex_, x)}")

    pairs: Dict[int, List[Tuple[Mask, Mask, Mask]]] = {n: [] for n in levels}
    for n in levels:
        for x in M:
            for y in M:
                z = _composite(complex_, M, x, y, n)
                if z is None:
                    continue
                pairs[n].append((x, y, z))
                report.count("1")
                if d(x, n, Sign.PLUS) != d(y, n, Sign.MINUS):
                    report.fail("1", f"#_{n} defined without matching boundaries")
                for m in levels:
                    for alpha in signs:
                        report.count("4")
                        if m < n:
                            ok = d(z, m, alpha) == d(x, m, alpha) == d(y, m, alpha)
                        elif m == n:
                            ok = d(z, n, alpha) == d(x if alpha is Sign.MINUS else y, n, alpha)
                        else:
                            ok = d(z, m, alpha) == _composite(complex_, M, d(x, m, alpha), d(y, m, alpha), n)
                        if not ok:
                            report.fail("4", f"d_{m}^{alpha.symbol} of a #_{n} composite")

    for n in levels:
        for x, y, xy in pairs[n]:
            for z in M:
                report.count("5")
                left = _composite(complex_, M, xy, z, n)
                yz = _composite(complex_, M, y, z, n)
                right = _composite(complex_, M, x, yz, n) if yz is not None else None
                if left != right:
                    report.fail("5", f"associativity at {n}")

    for n in levels:
        for m in range(n):
            for x, y, xy in pairs[n]:
                for x2, y2, xy2 in pairs[n]:
                    left = _composite(complex_, M, xy, xy2, m)
                    if left is None:
                        continue
                    report.count("6")
                    xx = _composite(complex_, M, x, x2, m)
                    yy = _composite(complex_, M, y, y2, m)
                    right = _composite(complex_, M, xx, yy, n) if xx is not None and yy is not None else None
                    if left != right:
                        report.fail("6", f"interchange at m={m} n={n}")
    return report


def cap_quotient(x: Subcomplex, caps: Sequence[int]) -> Subcomplex:
    """Erase the sign of every factor atom sitting at its cap."""
    caps = tuple(caps)
    signature = x.signature.uncapped().with_caps(caps)
    atoms = []
    for atom in x.maximal:
        factors = []
        for factor, cap in zip(atom.factors, caps):
            if factor.dim > cap:
                raise SignatureError(f"{atom} exceeds the caps {caps}")
            factors.append(FactorAtom(factor.dim) if factor.dim == cap else factor)
        atoms.append(ProductAtom(tuple(factors)))
    return normalize(signature, atoms)


def lift_bound(x: Subcomplex) -> int:
    """Upper bound on the number of signed lifts: two choices per Top factor of every maximal atom."""
    return 2 ** sum(f.is_top for atom in x.maximal for f in atom.factors)


def signed_lifts(x: Subcomplex, max_lifts: Optional[int] = None) -> Iterator[Subcomplex]:
    """Every signed subcomplex whose cap quotient is x, each Top factor taking both signs."""
    if max_lifts is not None and lift_bound(x) > max_lifts:
        raise BoundExceededError(f"{x} has up to {lift_bound(x)} signed lifts, more than {max_lifts}")
    signature = x.signature.uncapped()
    options = []
    for atom in x.maximal:
        choices = [
            (FactorAtom(f.dim, Sign.MINUS), FactorAtom(f.dim, Sign.PLUS)) if f.is_top else (f,)
            for f in atom.factors
        ]
        options.append([ProductAtom(tuple(fs)) for fs in product(*choices)])
    seen = set()
    for picked in product(*options):
        lift = normalize(signature, picked)
        if lift not in seen:
            seen.add(lift)
            yield lift


class OracleService:
    """Caches the most recently used cell complexes and answers molecule questions on them."""

    def __init__(self, max_atoms: Optional[int] = None, max_atomsets: Optional[int] = None):
        self.max_atoms = max_atoms or config.ORACLE_MAX_ATOMS
        self.max_atomsets = max_atomsets or config.ORACLE_MAX_ATOMSETS
        self._complex_of = lru_cache(maxsize=config.ORACLE_CACHED_COMPLEXES)(self._build_complex)

    def _build_complex(self, signature: Signature) -> CellComplex:
        return build_complex(signature.caps, signature.twists, self.max_atoms)

    def complex_for(self, caps: Sequence[int], twists: Sequence[int] = ()) -> CellComplex:
        return self._complex_of(Signature.capped(caps, twists))

    def molecules(self, caps: Sequence[int], twists: Sequence[int] = ()) -> List[Subcomplex]:
        complex_ = self.complex_for(caps, twists)
        masks = oracle_enumerate_molecules(complex_, self.max_atomsets)
        return sorted((mask_to_subcomplex(complex_, m) for m in masks), key=str)

    def enumerate(self, caps: Sequence[int], twists: Sequence[int] = ()) -> Catalog:
        complex_ = self.complex_for(caps, twists)
        return Catalog(complex_.signature, self.molecules(caps, twists), mode="oracle")

    def is_molecule(self, x: Subcomplex) -> bool:
        if not x.signature.is_capped:
            raise SignatureError("the oracle needs a capped signature")
        complex_ = self.complex_for(x.signature.caps, x.signature.twists)
        oracle_enumerate_molecules(complex_, self.max_atomsets)
        return oracle_is_molecule(complex_, x)

    def check_axioms(self, caps: Sequence[int], twists: Sequence[int] = ()) -> AxiomReport:
        complex_ = self.complex_for(caps, twists)
        return check_axioms(complex_, oracle_enumerate_molecules(complex_, self.max_atomsets))

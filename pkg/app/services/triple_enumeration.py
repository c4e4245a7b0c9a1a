"""Level-by-level description and enumeration of molecules in u x v x w.

Atoms are grouped by their middle dimension (the level). At each level J the
atoms at the level and the lowest atoms above it determine, through a list
of interval and sign rules, which sets of maximal atoms form a molecule.
The same rules drive the construction: pick the top level, then walk down
one level at a time choosing the atoms placed there.
"""
import logging
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from app.domain.atom import FactorAtom, ProductAtom, Sign, Signature
from app.domain.catalog import Catalog, LevelChoice, LevelState
from app.domain.errors import ConstructionError, PreconditionError, SignatureError
from app.domain.subcomplex import Subcomplex
from app.domain.verdict import Verdict
from app.services.oracle import cap_quotient
from app.services.subcomplexes import normalize

logger = logging.getLogger(__name__)

SIGNS = (Sign.MINUS, Sign.PLUS)


def _atom(l: int, sigma: Sign, level: int, tau: Sign, n: int, omega: Sign) -> ProductAtom:
    return ProductAtom((FactorAtom(l, sigma), FactorAtom(level, tau), FactorAtom(n, omega)))


def level_atoms(atoms: Sequence[ProductAtom], level: int) -> List[ProductAtom]:
    """Atoms with middle dimension `level`, by decreasing first dimension."""
    return sorted((a for a in atoms if a.dims[1] == level), key=lambda a: (-a.dims[0], a.dims[2]))


def lowest_above(atoms: Sequence[ProductAtom], level: int) -> List[ProductAtom]:
    """Atoms above `level` with nothing in between that dominates them in the outer factors."""
    above = [a for a in atoms if a.dims[1] > level]
    lowest = [
        a for a in above
        if not any(
            b.dims[0] >= a.dims[0] and level < b.dims[1] < a.dims[1] and b.dims[2] >= a.dims[2]
            for b in above
        )
    ]
    return sorted(lowest, key=lambda a: (-a.dims[0], a.dims[2]))


def _strict_staircase(atoms: Sequence[ProductAtom]) -> bool:
    return all(
        p.dims[0] > c.dims[0] and p.dims[2] < c.dims[2]
        for p, c in zip(atoms, atoms[1:])
    )


def _check_level(atoms: Sequence[ProductAtom], level: int, top: int) -> Optional[Verdict]:
    mus = level_atoms(atoms, level)
    if not _strict_staircase(mus):
        return Verdict.reject("le1", *mus, level=level)
    lams = lowest_above(atoms, level)
    if not _strict_staircase(lams):
        return Verdict.reject("le2", *lams, level=level)
    for lam in lams:
        for mu in mus:
            if mu.dims[0] <= lam.dims[0] and mu.dims[2] <= lam.dims[2]:
                return Verdict.reject("le2", lam, mu, level=level)

    S, T = len(lams), len(mus)
    i = [a.dims[0] for a in lams]
    k = [a.dims[2] for a in lams]
    alpha = [a.signs[0] for a in lams]
    eps = [a.signs[2] for a in lams]
    l = [a.dims[0] for a in mus]
    n = [a.dims[2] for a in mus]
    sigma = [a.signs[0] for a in mus]
    tau = [a.signs[1] for a in mus]
    omega = [a.signs[2] for a in mus]
    J = level

    for s in range(1, S):
        if not any(l[t] > i[s] and n[t] > k[s - 1] for t in range(T)):
            return Verdict.reject("le31", lams[s - 1], lams[s], level=level)

    for t in range(T):
        for s in range(1, S):
            if l[t] > i[s] and n[t] > k[s - 1]:
                if tau[t] != -alpha[s].twisted(i[s]) or tau[t] != -eps[s - 1].twisted(J):
                    return Verdict.reject("le35", lams[s - 1], lams[s], mus[t], level=level)
        if S and l[t] > i[0] and tau[t] != -alpha[0].twisted(i[0]):
            return Verdict.reject("le35", lams[0], mus[t], level=level)
        if S and n[t] > k[S - 1] and tau[t] != -eps[S - 1].twisted(J):
            return Verdict.reject("le35", lams[S - 1], mus[t], level=level)
    if J == top and len(set(tau)) > 1:
        return Verdict.reject("le35", *mus, level=level)

    for t in range(1, T):
        if not any(i[s] > l[t] and k[s] > n[t - 1] for s in range(S)):
            if omega[t - 1] != -sigma[t].twisted(l[t] + J):
                return Verdict.reject("le32", mus[t - 1], mus[t], level=level)

    for s in range(S):
        for t in range(T):
            last = s == S - 1 and t == T - 1
            first = s == 0 and t == 0
            if n[t] < k[s] and ((t < T - 1 and l[t + 1] <= i[s]) or last):
                if omega[t] != -alpha[s].twisted(i[s] + J):
                    return Verdict.reject("le33", lams[s], mus[t], level=level)
            if l[t] < i[s] and ((t > 0 and n[t - 1] <= k[s]) or first):
                if sigma[t] != -eps[s].twisted(l[t] + J):
                    return Verdict.reject("le34", lams[s], mus[t], level=level)
            if i[s] == l[t] and ((t > 0 and k[s] > n[t - 1]) or first):
                if alpha[s] != sigma[t]:
                    return Verdict.reject("le36", lams[s], mus[t], level=level)
            if k[s] == n[t] and ((t < T - 1 and i[s] > l[t + 1]) or last):
                if eps[s] != omega[t]:
                    return Verdict.reject("le37", lams[s], mus[t], level=level)
            if t < T - 1 and i[s] == l[t + 1] and k[s] == n[t]:
                if alpha[s] != sigma[t + 1] and eps[s] != omega[t]:
                    return Verdict.reject("le38", lams[s], mus[t], mus[t + 1], level=level)
    return None


def validate_maximal_atom_set(atoms: Sequence[ProductAtom], caps: Optional[Sequence[int]] = None) -> Verdict:
    """Whether `atoms` is exactly the set of maximal atoms of a molecule in u x v x w."""
    atoms = list(dict.fromkeys(atoms))
    if not atoms:
        return Verdict.reject("le1")
    for atom in atoms:
        if atom.arity != 3 or atom.has_top:
            raise SignatureError(f"{atom} is not a signed atom of a product of 3 globes")
        if caps is not None and any(d > c for d, c in zip(atom.dims, caps)):
            raise SignatureError(f"{atom} exceeds the caps {tuple(caps)}")
    top = max(a.dims[1] for a in atoms)
    for level in range(top, -1, -1):
        verdict = _check_level(atoms, level, top)
        if verdict is not None:
            return verdict
    return Verdict.accept()


def _bad(lams: Sequence[ProductAtom], s: int, level: int) -> bool:
    lam = lams[s]
    return lam.signs[2] == -lam.signs[0].twisted(lam.dims[0] + level)


def _interval(lo: int, hi: Optional[int], what: str) -> Tuple[int, Optional[int]]:
    if hi is not None and lo > hi:
        raise ConstructionError(f"empty interval [{lo}, {hi}] for {what}")
    return lo, hi


def _clip(lo: int, hi: Optional[int], cap: int) -> range:
    return range(lo, (cap if hi is None else min(hi, cap)) + 1)


class _LevelBuilder:
    """Generates the atom sequences allowed at one level below the top."""

    def __init__(self, state: LevelState):
        self.state = state
        self.level = state.level
        self.lams = state.lowest_above
        self.i = [a.dims[0] for a in self.lams]
        self.k = [a.dims[2] for a in self.lams]
        self.alpha = [a.signs[0] for a in self.lams]
        self.eps = [a.signs[2] for a in self.lams]
        self.S = len(self.lams)
        if self.S == 0:
            raise ConstructionError(f"no atoms above level {self.level}")

    def bad(self, s: int) -> bool:
        return _bad(self.lams, s, self.level)

    def _next_rule(self, lp: Optional[int], np: int) -> Tuple[bool, Optional[Tuple[int, Optional[int]]]]:
        """(may stop, l interval or None) for the atom after one at (lp, np); lp None means none yet."""
        i, k, S = self.i, self.k, self.S
        upper = None if lp is None else lp - 1
        if np > k[S - 1]:
            if lp == 0:
                return True, None
            return True, _interval(0, upper, "l after the last lowest atom")
        if np == k[S - 1]:
            if self.bad(S - 1):
                hi = i[S - 1] if upper is None else min(i[S - 1], upper)
                return True, _interval(0, hi, "l under a bad last lowest atom")
            return True, _interval(0, upper, "l at the last lowest atom")
        if S > 1 and k[S - 2] < np < k[S - 1]:
            return True, _interval(0, upper, "l before the last lowest atom")
        if S == 1:
            return True, _interval(0, upper, "l under the single lowest atom")
        if np < k[0]:
            return False, _interval(i[1] + 1, upper, "l before the first lowest atom")
        for s in range(S - 1):
            if np == k[s]:
                if self.bad(s):
                    hi = i[s] if upper is None else min(i[s], upper)
                    return False, _interval(i[s + 1] + 1, hi, f"l at bad lowest atom {s}")
                return False, _interval(i[s + 1] + 1, upper, f"l at lowest atom {s}")
            if s >= 1 and k[s - 1] < np < k[s]:
                return False, _interval(i[s + 1] + 1, upper, f"l between lowest atoms {s - 1} and {s}")
        raise ConstructionError(f"no rule for the position ({lp}, {np}) at level {self.level}")

    def _n_interval(self, l: int, np: int) -> Tuple[int, Optional[int]]:
        i, k, S = self.i, self.k, self.S
        bad = [s for s in range(S) if self.bad(s)]
        if l > i[0]:
            hi = k[bad[0]] if bad else None
            return _interval(np + 1, hi, f"n for l={l} left of all lowest atoms")
        if l <= i[S - 1]:
            return _interval(max(np, k[S - 1]) + 1, None, f"n for l={l}")
        s4 = next(s for s in range(1, S) if i[s] < l <= i[s - 1])
        later_bad = [s for s in bad if s >= s4]
        hi = k[later_bad[0]] if later_bad else None
        return _interval(max(k[s4 - 1], np) + 1, hi, f"n for l={l} over lowest atom {s4}")

    def _tau(self, l: int) -> Sign:
        i = self.i
        if l > i[0]:
            return -self.alpha[0].twisted(i[0])
        for s in range(1, self.S):
            if i[s] < l <= i[s - 1]:
                return -self.alpha[s].twisted(i[s])
        return -self.eps[self.S - 1].twisted(self.level)

    def _first_sigmas(self, l: int) -> Tuple[Sign, ...]:
        if l > self.i[0]:
            return SIGNS
        if l == self.i[0]:
            return (self.alpha[0],)
        return (-self.eps[0].twisted(l + self.level),)

    def _link_signs(self, l: int, n_prev: int) -> List[Tuple[Sign, Sign]]:
        """(omega of the previous atom, sigma of the new atom) pairs."""
        J = self.level
        match = [s for s in range(self.S) if self.i[s] >= l and self.k[s] >= n_prev]
        if not match:
            return [(w, -w.twisted(l + J)) for w in SIGNS]
        s = match[0]
        alpha, eps = self.alpha[s], self.eps[s]
        wider, higher = self.i[s] > l, self.k[s] > n_prev
        if wider and higher:
            return [(-alpha.twisted(self.i[s] + J), -eps.twisted(l + J))]
        if higher:
            return [(-alpha.twisted(self.i[s] + J), alpha)]
        if wider:
            return [(eps, -eps.twisted(l + J))]
        if self.bad(s):
            return [(eps, alpha)]
        return [(w, -w.twisted(l + J)) for w in SIGNS]

    def _last_omegas(self, n: int) -> Tuple[Sign, ...]:
        S = self.S
        if n > self.k[S - 1]:
            return SIGNS
        if n == self.k[S - 1]:
            return (self.eps[S - 1],)
        return (-self.alpha[S - 1].twisted(self.i[S - 1] + self.level),)

    def choices(self) -> Iterator[LevelChoice]:
        yield from self._extend([], [], None, -1)

    def _extend(self, placed, omegas, lp, np) -> Iterator[LevelChoice]:
        may_stop, l_range = self._next_rule(lp, np)
        cap_u, _, cap_w = self.state.caps
        if may_stop:
            if not placed:
                yield LevelChoice(self.level)
            else:
                for omega in self._last_omegas(np):
                    yield self._finish(placed, omegas + [omega])
        if l_range is None:
            return
        for l in _clip(*l_range, cap_u):
            n_lo, n_hi = self._n_interval(l, np)
            for n in _clip(n_lo, n_hi, cap_w):
                tau = self._tau(l)
                if not placed:
                    for sigma in self._first_sigmas(l):
                        yield from self._extend([(l, sigma, tau, n)], [], l, n)
                else:
                    for omega_prev, sigma in self._link_signs(l, np):
                        yield from self._extend(placed + [(l, sigma, tau, n)], omegas + [omega_prev], l, n)

    def _finish(self, placed, omegas) -> LevelChoice:
        atoms = tuple(
            _atom(l, sigma, self.level, tau, n, omega)
            for (l, sigma, tau, n), omega in zip(placed, omegas)
        )
        return LevelChoice(self.level, atoms)


def top_level_choices(level: int, caps: Sequence[int]) -> Iterator[LevelChoice]:
    """Every nonempty atom row allowed at the highest level: a twisted pair staircase with one middle sign."""
    cap_u, _, cap_w = caps
    for size in range(1, min(cap_u, cap_w) + 2):
        for ls in combinations(range(cap_u, -1, -1), size):
            for ns in combinations(range(cap_w + 1), size):
                for tau in SIGNS:
                    for sigmas in product(SIGNS, repeat=size):
                        for last_omega in SIGNS:
                            omegas = [
                                -sigmas[t + 1].twisted(ls[t + 1] + level)
                                for t in range(size - 1)
                            ] + [last_omega]
                            yield LevelChoice(level, tuple(
                                _atom(l, sigma, level, tau, n, omega)
                                for l, sigma, n, omega in zip(ls, sigmas, ns, omegas)
                            ))


def next_level_choices(state: LevelState) -> Iterator[LevelChoice]:
    return _LevelBuilder(state).choices()


def descend(state: LevelState, choice: LevelChoice) -> LevelState:
    """State for the level below `choice.level` once `choice` is placed."""
    placed = choice.atoms_at_level
    survivors = [
        a for a in state.lowest_above
        if not any(m.dims[0] >= a.dims[0] and m.dims[2] >= a.dims[2] for m in placed)
    ]
    lowest = tuple(sorted(list(placed) + survivors, key=lambda a: (-a.dims[0], a.dims[2])))
    return LevelState(choice.level - 1, lowest, state.atoms + placed, state.caps)


def _complete(state: LevelState) -> Iterator[Tuple[ProductAtom, ...]]:
    if state.level < 0:
        yield state.atoms
        return
    for choice in next_level_choices(state):
        yield from _complete(descend(state, choice))


def enumerate_signed3(caps: Sequence[int]) -> Iterator[Subcomplex]:
    """Molecules of the uncapped triple product whose maximal atoms fit under `caps`."""
    caps = tuple(caps)
    if len(caps) != 3:
        raise SignatureError(f"expected 3 caps, got {caps}")
    signature = Signature(3)
    for top in range(caps[1] + 1):
        start = LevelState(top, (), (), caps)
        for choice in top_level_choices(top, caps):
            for atoms in _complete(descend(start, choice)):
                verdict = validate_maximal_atom_set(atoms)
                if not verdict:
                    logger.warning("construction produced %s rejected by %s", ";".join(map(str, atoms)), verdict.reason)
                    continue
                yield normalize(signature, atoms)


ENUMERATION_MODES = ("signed", "capped")


class EnumerationService:
    """Collects the generator output of the construction into sorted catalogs."""

    def enumerate3(self, caps: Sequence[int], mode: str = "capped") -> Catalog:
        """All molecules of u x v x w within `caps`.

        Args:
            caps: per-factor dimension bounds (a, b, c).
            mode: "signed" keeps the uncapped molecules, "capped" maps them to
                the finite product and drops duplicates.

        Returns:
            Catalog sorted by canonical serialization.
        """
        if mode not in ENUMERATION_MODES:
            raise PreconditionError(f"unknown enumeration mode {mode!r}, expected one of {ENUMERATION_MODES}")
        caps = tuple(caps)
        signed = list(enumerate_signed3(caps))
        if mode == "signed":
            entries = signed
            signature = Signature(3)
        else:
            entries = list({cap_quotient(x, caps) for x in signed})
            signature = Signature.capped(caps)
        entries.sort(key=str)
        logger.info("enumerated %d %s molecules at caps %s", len(entries), mode, caps)
        return Catalog(signature, entries, mode=mode)

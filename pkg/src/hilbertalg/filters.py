"""Implicative filters: membership, generation, the full lattice, spectrum, depth.

Filters are bit masks over the algebra's universe (see core).  The
lattice keeps its members sorted by (popcount, mask) so every derived
structure is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import FiniteHilbertAlgebra, bit, iter_bits, subset_of
from .errors import NotInLatticeError, PreconditionError, SizeLimitError

# Beyond this size the one-word subset representation breaks down anyway;
# exhaustive subset scanning is only used up to SUBSET_SCAN_LIMIT.
FILTER_SIZE_CAP = 64
SUBSET_SCAN_LIMIT = 16


def is_implicative_filter(A: FiniteHilbertAlgebra, S: int) -> bool:
    """Contains 1 and is closed under modus ponens."""
    if not S >> A.top & 1:
        return False
    members = list(iter_bits(S))
    for a in members:
        row = A.arrow[a]
        for b in range(A.size):
            if S >> row[b] & 1 and not S >> b & 1:
                return False
    return True


def fg_closure(A: FiniteHilbertAlgebra, X: int) -> int:
    """Least implicative filter containing X (iterated modus ponens)."""
    F = X | bit(A.top)
    changed = True
    while changed:
        changed = False
        for a in iter_bits(F):
            row = A.arrow[a]
            for b in range(A.size):
                if F >> row[b] & 1 and not F >> b & 1:
                    F |= bit(b)
                    changed = True
    return F


def principal_filter(A: FiniteHilbertAlgebra, a: int) -> int:
    """The principal upset of a; always an implicative filter."""
    return A.upset_mask(a)


def fg_formula_member(A: FiniteHilbertAlgebra, X: int, a: int) -> bool:
    """Membership in Fg(X) via nested implications.

    a is in Fg(X) iff a = 1 or b_1 -> (... (b_k -> a)...) = 1 for some
    b_i in X.  Rather than enumerating nesting sequences, close {a}
    under t |-> b -> t for b in X and ask whether 1 shows up.
    """
    if a == A.top:
        return True
    reach = bit(a)
    frontier = [a]
    while frontier:
        t = frontier.pop()
        for b in iter_bits(X):
            v = A.arrow[b][t]
            if not reach >> v & 1:
                if v == A.top:
                    return True
                reach |= bit(v)
                frontier.append(v)
    return False


def fg_with_extra_member(A: FiniteHilbertAlgebra, X: int, c: int, a: int) -> bool:
    """Membership in Fg(X | {c}) via nestings ending in c -> a."""
    if a == A.top:
        return True
    start = A.arrow[c][a]
    if start == A.top:
        return True
    reach = bit(start)
    frontier = [start]
    while frontier:
        t = frontier.pop()
        for b in iter_bits(X):
            v = A.arrow[b][t]
            if not reach >> v & 1:
                if v == A.top:
                    return True
                reach |= bit(v)
                frontier.append(v)
    return False


def fg_with_extra(A: FiniteHilbertAlgebra, X: int, c: int) -> int:
    """Fg(X | {c}); fg_with_extra_member is the matching formula oracle."""
    return fg_closure(A, X | bit(c))


# ---------------------------------------------------------------------------
# the lattice of all filters


@dataclass(frozen=True)
class FilterLattice:
    algebra: FiniteHilbertAlgebra
    filters: tuple  # masks, sorted by (popcount, mask)

    @property
    def maximum(self) -> int:
        return self.algebra.universe_mask()

    @property
    def bottom(self) -> int:
        return bit(self.algebra.top)

    def __contains__(self, F: int) -> bool:
        return F in self.filters

    def meet(self, F: int, G: int) -> int:
        return F & G

    def join(self, F: int, G: int) -> int:
        return fg_closure(self.algebra, F | G)


def all_filters(A: FiniteHilbertAlgebra, cap: int = FILTER_SIZE_CAP) -> FilterLattice:
    """Every implicative filter of A.

    Small universes scan all subsets containing 1 with an upset
    pre-filter; larger ones grow the lattice by BFS over one-element
    extensions, which is exact for any size.
    """
    n = A.size
    if n > cap:
        raise SizeLimitError(f"universe size {n} exceeds filter cap {cap}")
    found = set()
    if n <= SUBSET_SCAN_LIMIT:
        up = [A.upset_mask(a) for a in range(n)]
        top_bit = bit(A.top)
        for rest in range(1 << n):
            S = rest | top_bit
            if S in found:
                continue
            if any(up[a] & ~S for a in iter_bits(S)):
                continue  # not an upset, cannot be a filter
            if is_implicative_filter(A, S):
                found.add(S)
    else:
        frontier = [fg_closure(A, 0)]
        found.add(frontier[0])
        while frontier:
            F = frontier.pop()
            for a in range(n):
                if not F >> a & 1:
                    G = fg_closure(A, F | bit(a))
                    if G not in found:
                        found.add(G)
                        frontier.append(G)
    ordered = sorted(found, key=lambda m: (m.bit_count(), m))
    return FilterLattice(algebra=A, filters=tuple(ordered))


# ---------------------------------------------------------------------------
# meet-irreducibles and the spectrum


@dataclass(frozen=True)
class SpectrumPoset:
    """Meet-irreducible filters under inclusion (the spectrum A_*)."""

    algebra: FiniteHilbertAlgebra
    filters: tuple  # masks, sorted by (popcount, mask)

    def __contains__(self, F: int) -> bool:
        return F in self.filters

    @staticmethod
    def leq(F: int, G: int) -> bool:
        return F & G == F

    def max_chain_size(self) -> int:
        """Longest chain, counted in elements."""
        best = {}
        for F in self.filters:  # popcount order: subsets come first
            best[F] = 1 + max(
                (best[G] for G in self.filters if G != F and G & F == G),
                default=0,
            )
        return max(best.values(), default=0)


def meet_irreducibles(L: FilterLattice) -> SpectrumPoset:
    """Filters that are neither the maximum nor a meet of two larger ones."""
    out = []
    for F in L.filters:
        if F == L.maximum:
            continue
        strictly_above = [G for G in L.filters if G != F and G & F == F]
        reducible = any(
            G & H == F
            for i, G in enumerate(strictly_above)
            for H in strictly_above[i:]
        )
        if not reducible:
            out.append(F)
    return SpectrumPoset(algebra=L.algebra, filters=tuple(out))


def is_meet_prime(L: FilterLattice, F: int) -> bool:
    """F < maximum and G & H <= F forces G <= F or H <= F."""
    if F not in L.filters:
        raise NotInLatticeError(f"mask {F:#x} is not a filter of this algebra")
    if F == L.maximum:
        return False
    for G in L.filters:
        for H in L.filters:
            if (G & H) & ~F == 0 and G & ~F and H & ~F:
                return False
    return True


def depth(A: FiniteHilbertAlgebra, lattice: Optional[FilterLattice] = None) -> int:
    """Maximum chain size in the spectrum; 0 for the trivial algebra."""
    if lattice is None:
        lattice = all_filters(A)
    return meet_irreducibles(lattice).max_chain_size()


def separate(
    A: FiniteHilbertAlgebra,
    F: int,
    a: int,
    lattice: Optional[FilterLattice] = None,
) -> int:
    """A meet-irreducible G with F <= G and a not in G.

    Deterministic: the inclusion-maximal candidate, ties broken by least
    bit pattern (the classical proof extends F to a filter maximal among
    those avoiding a).
    """
    if F >> a & 1:
        raise PreconditionError(f"element {a} already in the filter")
    if lattice is None:
        lattice = all_filters(A)
    spectrum = meet_irreducibles(lattice)
    candidates = [G for G in spectrum.filters if G & F == F and not G >> a & 1]
    if not candidates:
        raise PreconditionError("no separating meet-irreducible (input not a filter?)")
    maximal = [
        G for G in candidates if not any(H != G and H & G == G for H in candidates)
    ]
    return min(maximal)

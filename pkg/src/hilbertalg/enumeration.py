"""Isomorph-free exhaustive generation of finite Hilbert algebras, plus
finite Heyting algebras built as upset algebras of posets.

Generation strategy: fix the top element at index n-1, enumerate the
candidate partial orders below it, and backtrack over the table cells
a -> b with a !<= b.  The axioms force a -> a = 1, x -> 1 = 1, 1 -> x = x
and b <= a -> b < 1, which shrinks each cell's domain to the strict-below-
top part of b's upset.  Complete tables are validated and only canonical
representatives (lexicographically least table over permutations fixing
top) are emitted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, List, Optional, Tuple

from .core import FiniteHilbertAlgebra, axioms_hold, bit, iter_bits
from .errors import RangeError, SizeLimitError
from .filters import depth

DEFAULT_ENUM_CAP = 5
ENUM_CAP_ENV = "HILBERT_SIZE_CAP"


def enum_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True)
class Poset:
    size: int
    leq: tuple  # tuple of row tuples of bool

    def __post_init__(self):
        n = self.size
        for a in range(n):
            if not self.leq[a][a]:
                raise RangeError("leq is not reflexive")
            for b in range(n):
                if a != b and self.leq[a][b] and self.leq[b][a]:
                    raise RangeError("leq is not antisymmetric")
                for c in range(n):
                    if self.leq[a][b] and self.leq[b][c] and not self.leq[a][c]:
                        raise RangeError("leq is not transitive")

    def upset_mask(self, x: int) -> int:
        return sum(bit(y) for y in range(self.size) if self.leq[x][y])

    def longest_chain(self) -> int:
        """Maximum number of elements in a chain; 0 for the empty poset."""
        best = [0] * self.size
        order = sorted(range(self.size), key=lambda x: sum(self.leq[y][x] for y in range(self.size)))
        for x in order:
            below = [best[y] for y in range(self.size) if self.leq[y][x] and y != x]
            best[x] = 1 + max(below, default=0)
        return max(best, default=0)


def _relation_matrices(k: int) -> Iterator[tuple]:
    """All reflexive antisymmetric relations on k elements, as bool matrices."""
    pairs = list(combinations(range(k), 2))
    for states in product(range(3), repeat=len(pairs)):
        m = [[a == b for b in range(k)] for a in range(k)]
        for (a, b), s in zip(pairs, states):
            if s == 1:
                m[a][b] = True
            elif s == 2:
                m[b][a] = True
        yield tuple(tuple(row) for row in m)


def _transitive(m, k) -> bool:
    for a in range(k):
        for b in range(k):
            if m[a][b]:
                for c in range(k):
                    if m[b][c] and not m[a][c]:
                        return False
    return True


def all_posets(k: int, up_to_iso: bool = False) -> List[Poset]:
    """All posets on k labeled elements (or one per isomorphism class)."""
    out = []
    seen = set()
    for m in _relation_matrices(k):
        if not _transitive(m, k):
            continue
        if up_to_iso:
            canon = min(
                tuple(m[p[a]][p[b]] for a in range(k) for b in range(k))
                for p in permutations(range(k))
            )
            if canon in seen:
                continue
            seen.add(canon)
        out.append(Poset(size=k, leq=m))
    return out


# ---------------------------------------------------------------------------
# Heyting algebras of upsets


@dataclass(frozen=True)
class HeytingAlgebra:
    """Upsets of a poset: meet/join are intersection/union of masks,
    arrow is the relative pseudo-complement."""

    poset: Poset
    carrier: tuple  # upset masks, ascending
    arrow: tuple  # index table
    top: int
    bottom: int

    def index_of(self, mask: int) -> int:
        return self.carrier.index(mask)

    def meet(self, i: int, j: int) -> int:
        return self.index_of(self.carrier[i] & self.carrier[j])

    def join(self, i: int, j: int) -> int:
        return self.index_of(self.carrier[i] | self.carrier[j])


def upsets(P: Poset) -> List[int]:
    ups = [P.upset_mask(x) for x in range(P.size)]
    out = []
    for mask in range(1 << P.size):
        if all(ups[x] & ~mask == 0 for x in iter_bits(mask)):
            out.append(mask)
    return out


def heyting_from_poset(P: Poset) -> Tuple[HeytingAlgebra, FiniteHilbertAlgebra]:
    """The upset algebra of P and its implication reduct.

    U -> V = {x : upset(x) & U <= V}.
    """
    carrier = sorted(upsets(P))
    index = {mask: i for i, mask in enumerate(carrier)}
    ups = [P.upset_mask(x) for x in range(P.size)]
    k = len(carrier)
    table = []
    for U in carrier:
        row = []
        for V in carrier:
            row.append(index[sum(bit(x) for x in range(P.size) if ups[x] & U & ~V == 0)])
        table.append(row)
    heyting = HeytingAlgebra(
        poset=P,
        carrier=tuple(carrier),
        arrow=tuple(tuple(r) for r in table),
        top=k - 1,
        bottom=0,
    )
    return heyting, FiniteHilbertAlgebra.from_table(table)


def reduct_depth_vs_poset(P: Poset) -> Tuple[int, int, bool]:
    """Depth of the upset-algebra reduct vs the poset's longest chain."""
    _, reduct = heyting_from_poset(P)
    d = depth(reduct)
    chain = P.longest_chain()
    return d, chain, d == chain


# ---------------------------------------------------------------------------
# exhaustive generation


def _orders_with_top(n: int) -> Iterator[tuple]:
    """Partial orders on 0..n-1 where n-1 is the maximum."""
    k = n - 1
    for m in _relation_matrices(k):
        if not _transitive(m, k):
            continue
        full = [list(row) + [True] for row in m]
        full.append([False] * k + [True])
        yield tuple(tuple(row) for row in full)


def _fill_tables(n: int, order) -> Iterator[list]:
    top = n - 1
    table = [[top if order[a][b] else None for b in range(n)] for a in range(n)]
    for b in range(top):
        table[top][b] = b  # 1 -> x = x
    cells = [
        (a, b)
        for a in range(top)
        for b in range(n)
        if table[a][b] is None
    ]
    domains = [
        [v for v in range(n) if order[b][v] and v != top] for (a, b) in cells
    ]
    if any(not d for d in domains):
        return
    for choice in product(*domains):
        for (a, b), v in zip(cells, choice):
            table[a][b] = v
        yield table


def _canonical(flat: tuple, n: int, top: int) -> tuple:
    best = flat
    for images in permutations(range(top)):
        h = list(images) + [top]
        hinv = [0] * n
        for a, ha in enumerate(h):
            hinv[ha] = a
        relabeled = tuple(
            h[flat[hinv[x] * n + hinv[y]]] for x in range(n) for y in range(n)
        )
        if relabeled < best:
            best = relabeled
    return best


def enumerate_hilbert(
    n: int, cap: Optional[int] = None
) -> List[FiniteHilbertAlgebra]:
    """One representative per isomorphism class of n-element Hilbert
    algebras, in ascending canonical-table order."""
    if n < 1:
        raise RangeError("size must be at least 1")
    if cap is None:
        cap = enum_cap()
    if n > cap:
        raise SizeLimitError(f"size {n} exceeds enumeration cap {cap}")
    if n == 1:
        return [FiniteHilbertAlgebra.from_table([[0]])]
    top = n - 1
    found = []
    for order in _orders_with_top(n):
        for table in _fill_tables(n, order):
            if not axioms_hold(table, n, top):
                continue
            flat = tuple(table[a][b] for a in range(n) for b in range(n))
            if flat == _canonical(flat, n, top):
                found.append(flat)
    found.sort()
    return [
        FiniteHilbertAlgebra.from_table(
            [list(flat[a * n : (a + 1) * n]) for a in range(n)]
        )
        for flat in found
    ]

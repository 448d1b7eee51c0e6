"""Finite Hilbert algebras: tables, validation, terms, subuniverses, isomorphism.

Elements are indices 0..n-1.  Subsets of the universe are plain int bit
masks (bit i set <=> element i in the subset), which keeps filters and
generator sets hashable and makes inclusion a single `&`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    InvalidAlgebraError,
    RangeError,
    SizeLimitError,
    UnboundVariableError,
)

MAX_UNIVERSE = 64  # one machine word per subset mask


# ---------------------------------------------------------------------------
# subsets as bit masks


def bit(i: int) -> int:
    return 1 << i


def subset_of(elements) -> int:
    """Bit mask of an iterable of element indices."""
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_str(mask: int, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        return "{" + ",".join(str(i) for i in iter_bits(mask)) + "}"
    return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Imp:
    left: "Term"
    right: "Term"


Term = Union[Var, Imp]


def term_width(t: Term) -> int:
    """Number of variables (max index + 1) occurring in a term."""
    if isinstance(t, Var):
        return t.index + 1
    return max(term_width(t.left), term_width(t.right))


def term_str(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    return f"({term_str(t.left)} -> {term_str(t.right)})"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of axiom checking; violations are (axiom, witness) pairs."""

    size: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return f"valid Hilbert algebra, size {self.size}"
        lines = [f"invalid table, size {self.size}:"]
        for axiom, witness in self.violations:
            lines.append(f"  {axiom} fails at {witness}")
        return "\n".join(lines)


def _check_entries(table) -> int:
    n = len(table)
    if n < 1:
        raise RangeError("empty table")
    if n > MAX_UNIVERSE:
        raise SizeLimitError(f"universe size {n} exceeds cap {MAX_UNIVERSE}")
    for a, row in enumerate(table):
        if len(row) != n:
            raise RangeError(f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise RangeError(f"entry [{a}][{b}] = {v!r} out of range [0,{n})")
    return n


def validate(table) -> ValidationReport:
    """Check the Hilbert algebra axioms on a raw n x n table.

    The axioms: a->a is the same element 1 for every a, K and S hold as
    identities, and -> is antisymmetric (a->b = b->a = 1 implies a = b).
    """
    n = _check_entries(table)
    t = table
    top = t[0][0]
    bad = []
    for a in range(n):
        if t[a][a] != top:
            bad.append(("unit", (a,)))
    for a in range(n):
        for b in range(n):
            if t[a][t[b][a]] != top:
                bad.append(("K", (a, b)))
            if a < b and t[a][b] == top and t[b][a] == top:
                bad.append(("antisymmetry", (a, b)))
            for c in range(n):
                lhs = t[a][t[b][c]]
                rhs = t[t[a][b]][t[a][c]]
                if t[lhs][rhs] != top:
                    bad.append(("S", (a, b, c)))
    return ValidationReport(size=n, violations=tuple(bad))


def axioms_hold(table, n: int, top: int) -> bool:
    """Fast boolean version of validate() for search loops."""
    t = table
    for a in range(n):
        ta = t[a]
        if ta[a] != top:
            return False
        for b in range(n):
            if t[a][t[b][a]] != top:
                return False
            if a != b and ta[b] == top and t[b][a] == top:
                return False
            tb = t[b]
            for c in range(n):
                if t[ta[tb[c]]][t[ta[b]][ta[c]]] != top:
                    return False
    return True


# ---------------------------------------------------------------------------
# the algebra


@dataclass(frozen=True)
class FiniteHilbertAlgebra:
    size: int
    arrow: tuple  # tuple of row tuples
    top: int
    names: Optional[tuple] = None

    @classmethod
    def from_table(cls, table, names=None) -> "FiniteHilbertAlgebra":
        report = validate(table)
        if not report.ok:
            raise InvalidAlgebraError(report)
        n = len(table)
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise RangeError(f"{len(names)} names for {n} elements")
        return cls(
            size=n,
            arrow=tuple(tuple(row) for row in table),
            top=table[0][0],
            names=names,
        )

    def leq(self, a: int, b: int) -> bool:
        return self.arrow[a][b] == self.top

    def universe_mask(self) -> int:
        return (1 << self.size) - 1

    def upset_mask(self, a: int) -> int:
        """Principal upset of a, as a mask."""
        return subset_of(b for b in range(self.size) if self.leq(a, b))

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    def element_named(self, label: str) -> int:
        if self.names is not None and label in self.names:
            return self.names.index(label)
        try:
            a = int(label)
        except ValueError:
            raise RangeError(f"unknown element {label!r}")
        if not 0 <= a < self.size:
            raise RangeError(f"element index {a} out of range [0,{self.size})")
        return a


def leq(A: FiniteHilbertAlgebra, a: int, b: int) -> bool:
    return A.leq(a, b)


# ---------------------------------------------------------------------------
# term evaluation and identities


def eval_term(A: FiniteHilbertAlgebra, t: Term, assignment: Sequence[int]) -> int:
    if isinstance(t, Var):
        if t.index >= len(assignment):
            raise UnboundVariableError(
                f"x{t.index} unbound in assignment of length {len(assignment)}"
            )
        return assignment[t.index]
    return A.arrow[eval_term(A, t.left, assignment)][eval_term(A, t.right, assignment)]


def satisfies_identity(A: FiniteHilbertAlgebra, t: Term):
    """Does t evaluate to 1 under every assignment?

    Returns (True, None) or (False, v) where v is the lexicographically
    least failing assignment.
    """
    k = term_width(t)
    for v in product(range(A.size), repeat=k):
        if eval_term(A, t, v) != A.top:
            return False, v
    return True, None


# ---------------------------------------------------------------------------
# subuniverses and isomorphisms


def generated_subuniverse(A: FiniteHilbertAlgebra, X: int) -> int:
    """Least subset containing X and 1 that is closed under ->."""
    closed = X | bit(A.top)
    changed = True
    while changed:
        changed = False
        members = list(iter_bits(closed))
        for a in members:
            row = A.arrow[a]
            for b in members:
                if not closed >> row[b] & 1:
                    closed |= bit(row[b])
                    changed = True
    return closed


def find_isomorphism(A: FiniteHilbertAlgebra, B: FiniteHilbertAlgebra):
    """A permutation h with h(a -> b) = h(a) -> h(b), or None.

    Exhaustive over permutations mapping top to top; fine at desk scale.
    """
    if A.size != B.size:
        return None
    n = A.size
    rest_a = [x for x in range(n) if x != A.top]
    rest_b = [y for y in range(n) if y != B.top]
    for images in permutations(rest_b):
        h = [0] * n
        h[A.top] = B.top
        for x, y in zip(rest_a, images):
            h[x] = y
        if all(
            h[A.arrow[a][b]] == B.arrow[h[a]][h[b]]
            for a in range(n)
            for b in range(n)
        ):
            return tuple(h)
    return None


def chain_algebra(m: int) -> FiniteHilbertAlgebra:
    """The Goedel chain a_0 < ... < a_{m-1} < 1 on indices 0..m (top = m)."""
    if m < 1:
        raise RangeError("chain_algebra needs at least one non-top element")
    n = m + 1
    table = [[n - 1 if i <= j else j for j in range(n)] for i in range(n)]
    return FiniteHilbertAlgebra.from_table(table)


def trivial_algebra() -> FiniteHilbertAlgebra:
    return FiniteHilbertAlgebra.from_table([[0]])

"""The d_n term family, the equational depth test, and the two
constructive procedures extracted from the depth theorem's proof:

* a failing d_n assignment is turned into a strict (n+1)-chain of
  meet-irreducible filters, and
* such a chain is turned back into a chain subuniverse
  a_0 < ... < a_n < 1 on which every d_i(a_0..a_i) = a_i.

Both procedures check the proof's intermediate claims at runtime and
raise InternalInvariantError if one fails, which would signal a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .core import (
    FiniteHilbertAlgebra,
    Imp,
    Term,
    Var,
    bit,
    eval_term,
    iter_bits,
    satisfies_identity,
    subset_of,
)
from .errors import InternalInvariantError, PreconditionError
from .filters import (
    all_filters,
    depth,
    fg_closure,
    meet_irreducibles,
    principal_filter,
    separate,
)
from .quotient import correspondence_check, quotient


def d_term(n: int) -> Term:
    """d_0 = x0;  d_{k+1} = ((x_{k+1} -> d_k) -> x_{k+1}) -> x_{k+1}."""
    t: Term = Var(0)
    for k in range(1, n + 1):
        x = Var(k)
        t = Imp(Imp(Imp(x, t), x), x)
    return t


def depth_leq_via_identity(
    A: FiniteHilbertAlgebra, n: int
) -> Tuple[bool, Optional[tuple]]:
    """Whether A |= d_n = 1, with the least counterexample on failure."""
    return satisfies_identity(A, d_term(n))


@dataclass(frozen=True)
class DepthReport:
    algebra: FiniteHilbertAlgebra
    depth: int
    rows: tuple  # (n, depth <= n, d_n holds, agree)
    counterexamples: dict  # n -> least failing assignment

    @property
    def all_agree(self) -> bool:
        return all(agree for _, _, _, agree in self.rows)


def verify_main_theorem(A: FiniteHilbertAlgebra, n_max: int) -> DepthReport:
    """Compare depth(A) <= n against A |= d_n = 1 for every n <= n_max."""
    d = depth(A)
    rows = []
    counterexamples = {}
    for n in range(n_max + 1):
        holds, cex = depth_leq_via_identity(A, n)
        rows.append((n, d <= n, holds, (d <= n) == holds))
        if cex is not None:
            counterexamples[n] = cex
    return DepthReport(
        algebra=A, depth=d, rows=tuple(rows), counterexamples=counterexamples
    )


# ---------------------------------------------------------------------------
# proof procedure 1: counterexample -> chain of meet-irreducibles


@dataclass(frozen=True)
class ChainWitness:
    """Strictly increasing meet-irreducible filters F_0 < ... < F_n."""

    algebra: FiniteHilbertAlgebra
    filters: tuple


def chain_from_counterexample(
    A: FiniteHilbertAlgebra, assignment: Sequence[int], n: int
) -> ChainWitness:
    """Build a strict (n+1)-chain in the spectrum from a failing d_n assignment.

    Follows the proof's induction: separate off F_0, generate
    F = Fg(F_0 | {a_n}), recurse in A/F where d_{n-1} still fails, and
    pull the shorter chain back through the correspondence isomorphism.
    """
    assignment = tuple(assignment)
    if eval_term(A, d_term(n), assignment) == A.top:
        raise PreconditionError("d_n evaluates to 1 under this assignment")
    witness = ChainWitness(algebra=A, filters=tuple(_chain_rec(A, assignment, n)))
    _check_chain(witness)
    return witness


def _chain_rec(A, assignment, n):
    if n == 0:
        a0 = assignment[0]
        return [separate(A, bit(A.top), a0)]
    b = eval_term(A, d_term(n - 1), assignment[:n])
    an = assignment[n]
    lhs = A.arrow[A.arrow[an][b]][an]  # (a_n -> b) -> a_n, not <= a_n
    F0 = separate(A, principal_filter(A, lhs), an)
    F = fg_closure(A, F0 | bit(an))
    if F >> b & 1:
        raise InternalInvariantError("d_{n-1} value landed in Fg(F_0 | {a_n})")
    q = quotient(A, F)
    sub = _chain_rec(q.algebra, tuple(q.projection[a] for a in assignment[:n]), n - 1)
    mapping, ok = correspondence_check(A, F)
    if not ok:
        raise InternalInvariantError("filter correspondence failed to verify")
    inverse = {image: G for G, image in mapping.items()}
    return [F0] + [inverse[G] for G in sub]


def _check_chain(witness: ChainWitness) -> None:
    spectrum = meet_irreducibles(all_filters(witness.algebra))
    fs = witness.filters
    for F in fs:
        if F not in spectrum:
            raise InternalInvariantError("chain member is not meet-irreducible")
    for F, G in zip(fs, fs[1:]):
        if not (F & G == F and F != G):
            raise InternalInvariantError("chain inclusions are not strict")


# ---------------------------------------------------------------------------
# proof procedure 2: chain of meet-irreducibles -> chain subuniverse


@dataclass(frozen=True)
class SubalgebraChainWitness:
    """Elements a_0 < ... < a_n < 1 forming a subuniverse with a_n outside F_0."""

    algebra: FiniteHilbertAlgebra
    elements: tuple


def subalgebra_from_chain(
    A: FiniteHilbertAlgebra, chain: ChainWitness
) -> SubalgebraChainWitness:
    """Extract the chain subuniverse witnessing failure of d_n.

    Induction from the proof: the tail chain gives a_0 < ... < a_{n-1}
    with a_{n-1} outside the tail's first filter; the next element is
    the least member of (F_1 & G) - F_0 where G collects the b with
    a_{n-1} <= b and b -> a_{n-1} = a_{n-1}.
    """
    fs = chain.filters
    if not fs:
        raise PreconditionError("empty filter chain")
    spectrum = meet_irreducibles(all_filters(A))
    for F in fs:
        if F not in spectrum:
            raise PreconditionError("chain member is not in the spectrum")
    for F, G in zip(fs, fs[1:]):
        if not (F & G == F and F != G):
            raise PreconditionError("filter chain is not strictly increasing")
    elements = _subalg_rec(A, fs)
    witness = SubalgebraChainWitness(algebra=A, elements=tuple(elements))
    _check_subalgebra(witness, fs[0])
    return witness


def _subalg_rec(A, fs):
    F0 = fs[0]
    if len(fs) == 1:
        outside = A.universe_mask() & ~F0
        if not outside:
            raise InternalInvariantError("meet-irreducible filter covers the universe")
        return [min(iter_bits(outside))]
    prev = _subalg_rec(A, fs[1:])
    am = prev[-1]
    G = subset_of(
        b for b in range(A.size) if A.leq(am, b) and A.arrow[b][am] == am
    )
    candidates = fs[1] & G & ~F0
    if not candidates:
        raise InternalInvariantError("(F_1 & G) - F_0 is empty")
    return prev + [min(iter_bits(candidates))]


def _check_subalgebra(witness: SubalgebraChainWitness, F0: int) -> None:
    A = witness.algebra
    es = witness.elements
    if F0 >> es[-1] & 1:
        raise InternalInvariantError("top chain element lies in F_0")
    for a, b in zip(es, es[1:]):
        if not (A.leq(a, b) and a != b):
            raise InternalInvariantError("witness elements are not strictly increasing")
    if any(a == A.top for a in es):
        raise InternalInvariantError("witness chain reaches the top element")
    for j, aj in enumerate(es):
        for i in range(j):
            if A.arrow[aj][es[i]] != es[i]:
                raise InternalInvariantError("a_j -> a_i = a_i fails on the witness")
    closed = subset_of(es) | bit(A.top)
    for a in iter_bits(closed):
        for b in iter_bits(closed):
            if not closed >> A.arrow[a][b] & 1:
                raise InternalInvariantError("witness elements do not form a subuniverse")

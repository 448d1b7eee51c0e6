"""Quotients by filters: the congruence theta_F, A/F, and the filter
correspondence between the interval above F and the quotient's lattice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .core import FiniteHilbertAlgebra, bit, iter_bits, validate
from .errors import InternalInvariantError, NotAFilterError
from .filters import all_filters, is_implicative_filter


@dataclass(frozen=True)
class Congruence:
    blocks: tuple  # disjoint masks covering the universe, by least member
    class_of: tuple  # element -> block index


@dataclass(frozen=True)
class QuotientResult:
    algebra: FiniteHilbertAlgebra
    projection: tuple  # element -> quotient element


def theta(A: FiniteHilbertAlgebra, F: int) -> Congruence:
    """Partition of A by a ~ b iff a->b and b->a both lie in F."""
    if not is_implicative_filter(A, F):
        raise NotAFilterError(f"mask {F:#x} is not an implicative filter")
    n = A.size
    related = [
        [F >> A.arrow[a][b] & 1 and F >> A.arrow[b][a] & 1 for b in range(n)]
        for a in range(n)
    ]
    class_of = [-1] * n
    blocks = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        members = [b for b in range(n) if related[a][b]]
        idx = len(blocks)
        for b in members:
            class_of[b] = idx
        blocks.append(sum(bit(b) for b in members))
    _assert_congruence(A, related, class_of)
    return Congruence(blocks=tuple(blocks), class_of=tuple(class_of))


def _assert_congruence(A, related, class_of):
    n = A.size
    for a in range(n):
        if not related[a][a]:
            raise InternalInvariantError("theta_F is not reflexive")
        for b in range(n):
            if related[a][b] != related[b][a]:
                raise InternalInvariantError("theta_F is not symmetric")
            if related[a][b] and class_of[a] != class_of[b]:
                raise InternalInvariantError("theta_F is not transitive")
    for a in range(n):
        for a2 in range(n):
            if class_of[a] != class_of[a2]:
                continue
            for b in range(n):
                for b2 in range(n):
                    if class_of[b] == class_of[b2] and class_of[
                        A.arrow[a][b]
                    ] != class_of[A.arrow[a2][b2]]:
                        raise InternalInvariantError("theta_F not arrow-compatible")


def quotient(A: FiniteHilbertAlgebra, F: int) -> QuotientResult:
    """The quotient algebra A/F with blocks indexed by least representative."""
    cong = theta(A, F)
    reps = [min(iter_bits(block)) for block in cong.blocks]
    # blocks were created in order of least member, so reps is ascending
    k = len(reps)
    table = [
        [cong.class_of[A.arrow[reps[i]][reps[j]]] for j in range(k)] for i in range(k)
    ]
    report = validate(table)
    if not report.ok:
        raise InternalInvariantError(f"quotient failed validation: {report.summary()}")
    names = None
    if A.names is not None:
        names = [A.names[r] for r in reps]
    return QuotientResult(
        algebra=FiniteHilbertAlgebra.from_table(table, names=names),
        projection=cong.class_of,
    )


def correspondence_check(
    A: FiniteHilbertAlgebra, F: int
) -> Tuple[Dict[int, int], bool]:
    """The map h(G) = {g/F : g in G} from filters above F to filters of A/F.

    Returns (mapping, verdict): verdict is True iff h is a bijection onto
    Fi(A/F) that preserves and reflects inclusion.  False signals a bug.
    """
    q = quotient(A, F)
    proj = q.projection
    above = [G for G in all_filters(A).filters if G & F == F]
    mapping = {}
    for G in above:
        image = 0
        for g in iter_bits(G):
            image |= bit(proj[g])
        mapping[G] = image
    quotient_filters = set(all_filters(q.algebra).filters)
    images = list(mapping.values())
    ok = (
        len(set(images)) == len(above)
        and set(images) == quotient_filters
        and all(
            (G & H == G) == (mapping[G] & mapping[H] == mapping[G])
            for G in above
            for H in above
        )
    )
    return mapping, ok


def pull_back(A: FiniteHilbertAlgebra, q: QuotientResult, H: int) -> int:
    """Preimage of a quotient filter under the projection, as a filter of A."""
    return sum(bit(a) for a in range(A.size) if H >> q.projection[a] & 1)

"""Toolkit for finite Hilbert algebras: implicative filter lattices,
meet-irreducible spectra, depth, and the equational depth test d_n = 1,
together with both constructive proof procedures and isomorph-free
exhaustive generation."""

from .core import (
    FiniteHilbertAlgebra,
    Imp,
    Term,
    ValidationReport,
    Var,
    chain_algebra,
    eval_term,
    find_isomorphism,
    generated_subuniverse,
    leq,
    satisfies_identity,
    subset_of,
    trivial_algebra,
    validate,
)
from .depth_terms import (
    ChainWitness,
    DepthReport,
    SubalgebraChainWitness,
    chain_from_counterexample,
    d_term,
    depth_leq_via_identity,
    subalgebra_from_chain,
    verify_main_theorem,
)
from .enumeration import (
    HeytingAlgebra,
    Poset,
    all_posets,
    enumerate_hilbert,
    heyting_from_poset,
    reduct_depth_vs_poset,
)
from .filters import (
    FilterLattice,
    SpectrumPoset,
    all_filters,
    depth,
    fg_closure,
    fg_formula_member,
    fg_with_extra,
    fg_with_extra_member,
    is_implicative_filter,
    is_meet_prime,
    meet_irreducibles,
    separate,
)
from .quotient import Congruence, QuotientResult, correspondence_check, quotient, theta

__all__ = [
    "FiniteHilbertAlgebra",
    "Imp",
    "Term",
    "ValidationReport",
    "Var",
    "chain_algebra",
    "eval_term",
    "find_isomorphism",
    "generated_subuniverse",
    "leq",
    "satisfies_identity",
    "subset_of",
    "trivial_algebra",
    "validate",
    "ChainWitness",
    "DepthReport",
    "SubalgebraChainWitness",
    "chain_from_counterexample",
    "d_term",
    "depth_leq_via_identity",
    "subalgebra_from_chain",
    "verify_main_theorem",
    "HeytingAlgebra",
    "Poset",
    "all_posets",
    "enumerate_hilbert",
    "heyting_from_poset",
    "reduct_depth_vs_poset",
    "FilterLattice",
    "SpectrumPoset",
    "all_filters",
    "depth",
    "fg_closure",
    "fg_formula_member",
    "fg_with_extra",
    "fg_with_extra_member",
    "is_implicative_filter",
    "is_meet_prime",
    "meet_irreducibles",
    "separate",
    "Congruence",
    "QuotientResult",
    "correspondence_check",
    "quotient",
    "theta",
]

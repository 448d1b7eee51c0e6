"""Command-line front end: check | analyze | verify | quotient | enumerate."""

from __future__ import annotations

import argparse
import sys

from .core import FiniteHilbertAlgebra, mask_str, subset_of
from .depth_terms import verify_main_theorem
from .dot import hasse_covers, poset_dot
from .enumeration import enum_cap, enumerate_hilbert
from .errors import (
    AlgebraFileError,
    HilbertError,
    InvalidAlgebraError,
    NotAFilterError,
    RangeError,
    SizeLimitError,
)
from .files import dump_algebra, load_algebra
from .filters import all_filters, depth, is_implicative_filter, meet_irreducibles
from .quotient import quotient

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _load(path: str) -> FiniteHilbertAlgebra:
    return load_algebra(path)


def cmd_check(args) -> int:
    try:
        A = _load(args.path)
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidAlgebraError as exc:
        print(exc.report.summary())
        return EXIT_DOMAIN
    except (RangeError, SizeLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"valid Hilbert algebra, size {A.size}")
    return EXIT_OK


def _spectrum_shape(spectrum) -> str:
    fs = spectrum.filters
    comparable = [
        spectrum.leq(F, G) or spectrum.leq(G, F)
        for i, F in enumerate(fs)
        for G in fs[i + 1 :]
    ]
    if all(comparable):
        return "chain"
    if not any(comparable):
        return "antichain"
    return "poset"


def cmd_analyze(args) -> int:
    try:
        A = _load(args.path)
        lattice = all_filters(A)
    except HilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, AlgebraFileError) else EXIT_DOMAIN
    spectrum = meet_irreducibles(lattice)
    d = spectrum.max_chain_size()
    k = len(lattice.filters)
    m = len(spectrum.filters)
    plural = "" if k == 1 else "s"
    if m == 0:
        print(f"{k} filter{plural}, spectrum 0, depth {d}")
    else:
        print(f"{k} filter{plural}, spectrum {m} ({_spectrum_shape(spectrum)}), depth {d}")
    label = lambda F: mask_str(F, A.names)
    if args.filters:
        for F in lattice.filters:
            print(f"  filter {label(F)}")
    if args.spectrum or m:
        covers = hasse_covers(spectrum.filters, spectrum.leq)
        rel = ", ".join(
            f"{label(spectrum.filters[i])} < {label(spectrum.filters[j])}"
            for i, j in covers
        )
        print(f"spectrum Hasse: {rel if rel else '(no covers)'}")
        if args.spectrum:
            for F in spectrum.filters:
                print(f"  meet-irreducible {label(F)}")
    if args.depth:
        print(f"depth: {d}")
    if args.dot:
        subset_leq = lambda F, G: F & G == F
        lattice_covers = hasse_covers(lattice.filters, subset_leq)
        with open(args.dot + "-filters.dot", "w", encoding="utf-8") as fh:
            fh.write(poset_dot([label(F) for F in lattice.filters], lattice_covers, "filters"))
        spec_covers = hasse_covers(spectrum.filters, subset_leq)
        with open(args.dot + "-spectrum.dot", "w", encoding="utf-8") as fh:
            fh.write(poset_dot([label(F) for F in spectrum.filters], spec_covers, "spectrum"))
    return EXIT_OK


def _print_report(A, report) -> None:
    for n, depth_leq, identity, agree in report.rows:
        cex = report.counterexamples.get(n)
        extra = f", counterexample {cex}" if cex is not None else ""
        print(
            f"n={n}: depth<={n} {'yes' if depth_leq else 'no'}, "
            f"d_{n} holds {'yes' if identity else 'no'}, "
            f"{'agree' if agree else 'DISAGREE'}{extra}"
        )


def cmd_verify(args) -> int:
    nmax = args.nmax
    try:
        if args.enumerate is not None:
            algebras = []
            for size in range(1, args.enumerate + 1):
                algebras.extend(enumerate_hilbert(size))
            pairs = 0
            bad = 0
            for A in algebras:
                report = verify_main_theorem(A, nmax)
                pairs += len(report.rows)
                if not report.all_agree:
                    bad += 1
                    print(f"disagreement on table {A.arrow}:")
                    _print_report(A, report)
            if bad:
                print(f"{len(algebras)} algebras checked, {bad} disagree")
                return EXIT_DOMAIN
            print(
                f"{len(algebras)} algebras checked, {pairs} (algebra,n) pairs, all agree"
            )
            return EXIT_OK
        A = _load(args.path)
        report = verify_main_theorem(A, nmax)
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"depth {report.depth}")
    _print_report(A, report)
    return EXIT_OK if report.all_agree else EXIT_DOMAIN


def cmd_quotient(args) -> int:
    try:
        A = _load(args.path)
        elements = [
            A.element_named(tok.strip()) for tok in args.filter.split(",") if tok.strip()
        ]
        F = subset_of(elements)
        if not is_implicative_filter(A, F):
            raise NotAFilterError(
                f"{mask_str(F, A.names)} is not an implicative filter "
                "(must contain 1 and be closed under modus ponens)"
            )
        result = quotient(A, F)
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(dump_algebra(result.algebra))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        algebras = enumerate_hilbert(args.size)
    except HilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for A in algebras:
        print(dump_algebra(A))
    print(f"{len(algebras)} algebras of size {args.size}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertalg",
        description="Finite Hilbert algebras: filters, spectra, depth, "
        "and the d_n equational depth test.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate an algebra file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="filters, spectrum, depth of an algebra")
    p.add_argument("path")
    p.add_argument("--filters", action="store_true", help="list every filter")
    p.add_argument("--spectrum", action="store_true", help="list the spectrum")
    p.add_argument("--depth", action="store_true", help="print the depth line")
    p.add_argument("--dot", metavar="OUT", help="write OUT-filters.dot and OUT-spectrum.dot")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check depth<=n against d_n = 1")
    p.add_argument("path", nargs="?", help="algebra file (omit with --enumerate)")
    p.add_argument(
        "--enumerate",
        type=int,
        metavar="N",
        help="verify every algebra with at most N elements",
    )
    p.add_argument("--nmax", type=int, default=4, help="largest n to test (default 4)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quotient", help="emit the quotient by a filter")
    p.add_argument("path")
    p.add_argument(
        "--filter",
        required=True,
        help="comma-separated filter elements (names when present, else indices)",
    )
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser(
        "enumerate",
        help=f"emit all algebras of a size, one JSON line each (cap {enum_cap()})",
    )
    p.add_argument("size", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and (args.path is None) == (args.enumerate is None):
        parser.error("verify needs exactly one of PATH or --enumerate N")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``ietkit <subcommand> [flags]``.

Exit status: 0 success or verified, 1 refuted (or a negative membership
answer), 2 usage error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import e3n, harness
from .iet3 import Closure, DomainError, IetParams, code_orbit
from .qfield import QFieldError, qx_parse
from .wordmorph import (
    WordError,
    apply_morphism,
    apply_morphism_window,
    check_word,
    compose,
    format_morphism,
    incidence_matrix,
    parse_morphism,
    parse_window,
    phi_k,
    xi,
)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _add_iet_flags(sp: argparse.ArgumentParser, closure: bool = True) -> None:
    g = sp.add_argument_group(
        "transformation", "exact numbers: terms like 3, -1/2, 1/2*s or s joined by + and -, with s = sqrt(disc)"
    )
    g.add_argument("--disc", type=int, default=5, help="square-free discriminant d (default 5)")
    g.add_argument("--alpha", required=True)
    g.add_argument("--beta", required=True)
    g.add_argument("--gamma", required=True)
    if closure:
        g.add_argument("--closure", choices=["left", "right"], default="left")
    g.add_argument("--x0", default=None, help="seed point (default 0 for left closure, alpha for right)")


def _iet_from(args) -> tuple:
    d = args.disc
    closure = Closure(getattr(args, "closure", "left"))
    p = IetParams(qx_parse(args.alpha, d), qx_parse(args.beta, d), qx_parse(args.gamma, d), closure)
    if args.x0 is not None:
        x0 = qx_parse(args.x0, d)
    else:
        x0 = qx_parse("0", d) if closure is Closure.LEFT else p.alpha
    return p, x0


def _add_morphism_flags(sp: argparse.ArgumentParser, dest: str = "morphism", prefix: str = "") -> None:
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument(f"--{prefix}morphism", dest=dest, help="A=<word>;B=<word>;C=<word>")
    g.add_argument(f"--{prefix}phik", dest=f"{dest}_phik", type=_positive_int, help="use phi_k for this k")
    g.add_argument(f"--{prefix}xi", dest=f"{dest}_xi", action="store_true", help="use the swap A<->C")


def _morphism_from(args, dest: str = "morphism"):
    if getattr(args, f"{dest}_phik"):
        return phi_k(getattr(args, f"{dest}_phik"))
    if getattr(args, f"{dest}_xi"):
        return xi()
    return parse_morphism(getattr(args, dest))


def _emit_report(rep: harness.VerificationReport, args) -> int:
    print(rep.summary() if args.summary else rep.to_line())
    return rep.status.exit_code


def _add_report_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--summary", action="store_true", help="human-readable report instead of the tab-separated line")


# --- subcommands ------------------------------------------------------------


def cmd_word(args) -> int:
    p, x0 = _iet_from(args)
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} is greater than --to {args.stop}")
    w = code_orbit(p, x0, args.start, args.stop)
    print(str(w) if args.window else w.letters)
    return EXIT_OK


def cmd_apply(args) -> int:
    m = _morphism_from(args)
    if (args.word is None) == (args.window is None):
        raise UsageError("give exactly one of --word or --window")
    if args.word is not None:
        print(apply_morphism(m, check_word(args.word)))
    else:
        print(apply_morphism_window(m, parse_window(args.window)))
    return EXIT_OK


def cmd_compose(args) -> int:
    print(format_morphism(compose(_morphism_from(args, "outer"), _morphism_from(args, "inner"))))
    return EXIT_OK


def cmd_matrix(args) -> int:
    print(e3n.format_matrix(incidence_matrix(_morphism_from(args))))
    return EXIT_OK


def cmd_e3n_check(args) -> int:
    info = e3n.membership(e3n.parse_matrix(args.matrix))
    print(info.describe())
    return EXIT_OK if info.member else EXIT_REFUTED


def cmd_eigvec(args) -> int:
    c = e3n.left_eigvec_check(e3n.parse_matrix(args.matrix))
    print("none" if c is None else f"c={c}")
    return EXIT_OK if c is not None else EXIT_REFUTED


def cmd_units(args) -> int:
    if args.matrix is None:
        for u in (e3n.IDENTITY, e3n.P):
            print(e3n.format_matrix(u))
        return EXIT_OK
    unit = e3n.is_unit(e3n.parse_matrix(args.matrix))
    print("unit" if unit else "not-unit")
    return EXIT_OK if unit else EXIT_REFUTED


def cmd_mk(args) -> int:
    if args.which == "m1-tilde":
        m = e3n.m1_tilde()
    else:
        if args.k is None:
            raise UsageError(f"--k is required for {args.which}")
        m = e3n.mk(args.k) if args.which == "mk" else e3n.mk_tilde(args.k)
    print(e3n.format_matrix(m))
    return EXIT_OK


def cmd_factorize(args) -> int:
    m = e3n.parse_matrix(args.matrix)
    if args.tree:
        tree, complete = harness.factorization_tree(m, args.max_depth)
        _print_tree(tree)
        if not complete:
            print(f"depth cap {args.max_depth} reached")
            return EXIT_INCONCLUSIVE
        return EXIT_OK
    pairs = e3n.factor_pairs(m)
    if args.canonical:
        pairs = e3n.canonical_pairs(pairs)
    for fp in pairs:
        print(f"{e3n.format_matrix(fp.left)}\t{e3n.format_matrix(fp.right)}")
    label = "canonical" if args.canonical else "ordered"
    print(f"# {len(pairs)} {label} pairs" + ("; non-decomposable" if not pairs else ""))
    return EXIT_OK


def _print_tree(tree, indent: int = 0) -> None:
    pad = "  " * indent
    # inner nodes are pairs, leaves are 3x3 matrices
    if len(tree) == 2:
        print(f"{pad}*")
        _print_tree(tree[0], indent + 1)
        _print_tree(tree[1], indent + 1)
    else:
        print(f"{pad}{e3n.format_matrix(tree)}")


def cmd_verify_phik(args) -> int:
    p, x0 = _iet_from(args)
    if args.negative_control:
        rep = harness.phik_negative_control(args.k, p, x0, args.n)
    elif args.two_sided:
        rep = harness.verify_phik_two_sided(args.k, p, x0, args.n)
    else:
        rep = harness.verify_phik(args.k, p, x0, args.n)
    return _emit_report(rep, args)


def cmd_verify_xi(args) -> int:
    p, x0 = _iet_from(args)
    if args.negative_control:
        rep = harness.xi_negative_control(p, x0, args.N)
    else:
        rep = harness.verify_xi(p, x0, args.N)
    return _emit_report(rep, args)


def cmd_verify_decomposition(args) -> int:
    return _emit_report(harness.verify_unique_decomposition(args.k, args.cap), args)


def cmd_enumerate(args) -> int:
    pool = e3n.enumerate_E3N(args.max_entry)
    for m in pool:
        print(e3n.format_matrix(m))
    print(f"# {len(pool)} members with entries <= {args.max_entry}")
    return EXIT_OK


def cmd_witnesses(args) -> int:
    if args.kmax > args.cap:
        raise UsageError(f"--kmax {args.kmax} exceeds --cap {args.cap}")
    worst = EXIT_OK
    for _, rep in harness.witness_family(args.kmax, args.cap):
        worst = max(worst, _emit_report(rep, args))
    return worst


def cmd_check_morphism(args) -> int:
    return _emit_report(harness.check_morphism(_morphism_from(args)), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ietkit",
        description="Exact three-interval exchanges, 3iet-preserving morphisms and the monoid E(3,N).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    sp = sub.add_parser("word", help="code an orbit into letters")
    _add_iet_flags(sp)
    sp.add_argument("--from", dest="start", type=int, default=0)
    sp.add_argument("--to", dest="stop", type=int, required=True)
    sp.add_argument("--window", action="store_true", help="print as <start>:<letters>")
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("apply", help="apply a morphism to a word or an anchored window")
    _add_morphism_flags(sp)
    sp.add_argument("--word")
    sp.add_argument("--window", help="<start>:<letters>, must cover index 0")
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("compose", help="composition outer(inner(x))")
    _add_morphism_flags(sp, "outer", "outer-")
    _add_morphism_flags(sp, "inner", "inner-")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("matrix", help="incidence matrix of a morphism")
    _add_morphism_flags(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("e3n-check", help="membership in E(3,N)")
    sp.add_argument("--matrix", required=True, help='rows split by ";", e.g. "0 1 0; 0 2 1; 1 0 2"')
    sp.set_defaults(func=cmd_e3n_check)

    sp = sub.add_parser("eigvec", help="eigenvalue of the left eigenvector (1,-1,1), if any")
    sp.add_argument("--matrix", required=True)
    sp.set_defaults(func=cmd_eigvec)

    sp = sub.add_parser("units", help="list the units, or test one matrix")
    sp.add_argument("--matrix")
    sp.set_defaults(func=cmd_units)

    sp = sub.add_parser("mk", help="print M_k, its left factor, or the shared right factor")
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--which", choices=["mk", "mk-tilde", "m1-tilde"], default="mk")
    sp.set_defaults(func=cmd_mk)

    sp = sub.add_parser("factorize", help="all non-unit factor pairs in E(3,N)")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--canonical", action="store_true", help="one pair per unit orbit")
    sp.add_argument("--tree", action="store_true", help="recursive factorization tree")
    sp.add_argument("--max-depth", type=_positive_int, default=harness.TREE_DEPTH_CAP)
    sp.set_defaults(func=cmd_factorize)

    sp = sub.add_parser("verify-phik", help="check that phi_k maps the coding to the derived coding")
    sp.add_argument("--k", type=_positive_int, required=True)
    _add_iet_flags(sp, closure=False)
    sp.add_argument("--n", type=_positive_int, default=1000, help="code indices 0..n")
    sp.add_argument("--two-sided", action="store_true", help="also compare negative indices")
    sp.add_argument("--negative-control", action="store_true", help="perturb the derived parameters")
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_verify_phik)

    sp = sub.add_parser("verify-xi", help="check the A<->C swap against the mirrored transformation")
    _add_iet_flags(sp, closure=False)
    sp.add_argument("--N", type=_positive_int, default=500, help="compare indices -N..N")
    sp.add_argument("--negative-control", action="store_true", help="perturb the mirrored seed")
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_verify_xi)

    sp = sub.add_parser("verify-decomposition", help="exhaustively factor M_k")
    sp.add_argument("--k", type=_positive_int, required=True)
    sp.add_argument("--cap", type=_positive_int, default=harness.DEFAULT_CAP)
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_verify_decomposition)

    sp = sub.add_parser("enumerate", help="all members of E(3,N) with bounded entries")
    sp.add_argument("--max-entry", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("witnesses", help="certify mk_tilde(k), k=1..kmax, non-decomposable")
    sp.add_argument("--kmax", type=_positive_int, required=True)
    sp.add_argument("--cap", type=_positive_int, default=harness.DEFAULT_CAP)
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_witnesses)

    sp = sub.add_parser("check-morphism", help="best-effort refutation of 3iet preservation")
    _add_morphism_flags(sp)
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_check_morphism)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, QFieldError, WordError, DomainError, e3n.MatrixError, ValueError) as exc:
        print(f"ietkit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Simple roots use Bourbaki numbering, 1-based:
  B_n: alpha_n short      C_n: alpha_n long
  D_n: alpha_{n-2} is the branch node
  E_n: alpha_2 hangs off alpha_4, the chain is 1-3-4-5-...
  F_4: alpha_1, alpha_2 long      G_2: alpha_1 short

Exit codes: 0 ok, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
import time
from pathlib import Path

from . import __version__
from .checks import SUITES, coweight_orbit_size, run_suite
from .documents import document_from_poset, emit_dot, emit_json
from .golden import has_golden
from .orbits import (
    enumerate_fiber,
    enumerate_hermitian,
    enumerate_nilradical,
    fiber_poset,
    hermitian_poset,
    nilradical_dim,
    nilradical_poset,
)
from .rootsys import HermitianContext, InputError, build_hermitian_context, build_root_system
from .weyl import enumerate_WP, weyl_group_order

log = logging.getLogger("hsorbits")


def _context(args) -> HermitianContext:
    rs = build_root_system(args.type, args.rank)
    return build_hermitian_context(rs, args.node - 1)


def _guard(ctx: HermitianContext, args) -> None:
    if ctx.rs.cartan_type == "E" and not args.force:
        raise InputError(f"{ctx.label} is large; pass --force to enumerate it")


def _parse_word(text: str, rank: int) -> list[int]:
    """Accept "e", "s2s1s2", "2,1,2" or the compact "212"; returns 0-based letters."""
    text = text.strip().lower()
    if text in ("", "e", "id"):
        return []
    if "," in text or "s" in text:
        tokens = re.findall(r"\d+", text)
    elif text.isdigit():
        tokens = list(text)
    else:
        raise InputError(f"cannot parse word {text!r}")
    word = [int(t) for t in tokens]
    for i in word:
        if not 1 <= i <= rank:
            raise InputError(f"word letter {i} out of range 1..{rank}")
    return [i - 1 for i in word]


def _poset(ctx: HermitianContext, space: str, threads: int):
    if space == "pu":
        return nilradical_poset(ctx)
    if space == "gl":
        return hermitian_poset(ctx, threads=threads)
    if space.startswith("fiber:"):
        word = _parse_word(space.split(":", 1)[1], ctx.rs.rank)
        v = enumerate_WP(ctx).find_word(word)
        return fiber_poset(v, ctx)
    raise InputError(f"unknown space {space!r}; expected pu, gl or fiber:<word>")


def _fmt_word(word) -> str:
    return "".join(f"s{i + 1}" for i in word) or "e"


def _fmt_set(ctx, roots) -> str:
    return "{" + ", ".join(str(list(ctx.rs.roots[k])) for k in roots) + "}"


def cmd_enum(args) -> int:
    ctx = _context(args)
    space = args.space
    if space == "pu":
        sets = enumerate_nilradical(ctx)
        print(f"count: {len(sets)}")
        for n, S in enumerate(sets):
            print(f"{n}\tS={_fmt_set(ctx, S.roots)}\tdim={nilradical_dim(S, ctx)}")
    elif space == "gl":
        _guard(ctx, args)
        pairs = enumerate_hermitian(ctx)
        print(f"count: {len(pairs)}")
        for n, p in enumerate(pairs):
            print(f"{n}\tv={_fmt_word(p.v.word)}\tS={_fmt_set(ctx, p.S.roots)}\tdim={p.dim}")
    elif space.startswith("fiber:"):
        word = _parse_word(space.split(":", 1)[1], ctx.rs.rank)
        v = enumerate_WP(ctx).find_word(word)
        sets = enumerate_fiber(v, ctx)
        print(f"count: {len(sets)}")
        from .orbits import AdmissiblePair

        for n, S in enumerate(sets):
            print(f"{n}\tS={_fmt_set(ctx, S.roots)}\tdim={AdmissiblePair(ctx, v, S).dim}")
    else:
        raise InputError(f"unknown space {space!r}; expected pu, gl or fiber:<word>")
    return 0


def cmd_hasse(args) -> int:
    ctx = _context(args)
    if args.space == "gl":
        _guard(ctx, args)
    doc = document_from_poset(_poset(ctx, args.space, args.threads))
    text = emit_json(doc) if args.format == "json" else emit_dot(doc)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        log.info("wrote %s", args.out)
    return 0


def cmd_verify(args) -> int:
    ctx = _context(args)
    _guard(ctx, args)
    names = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    for name in names:
        t0 = time.perf_counter()
        if name == "golden" and not has_golden(ctx):
            print(f"SKIP {name}: no checked-in fixture for {ctx.label}")
            continue
        violations = run_suite(name, ctx)
        dt = time.perf_counter() - t0
        if violations:
            failed = True
            print(f"FAIL {name} ({dt:.2f}s)")
            for v in violations:
                print(f"  {v.clause}: {v.detail}")
        else:
            print(f"PASS {name} ({dt:.2f}s)")
    return 1 if failed else 0


def cmd_info(args) -> int:
    rs = build_root_system(args.type, args.rank)
    order = weyl_group_order(rs.cartan_type, rs.rank)
    print(f"type: {rs.name}")
    print(f"|W|: {order}")
    print(f"positive roots: {rs.n_positive}")
    print(f"cominuscule nodes: {sorted(i + 1 for i, c in enumerate(rs.highest_root) if c == 1)}")
    if args.node is None:
        return 0
    ctx = build_hermitian_context(rs, args.node - 1)
    quotient = coweight_orbit_size(ctx)
    npsi = len(ctx.psi)
    print(f"node: {args.node}")
    print(f"|W^P|: {quotient}")
    print(f"|W_P|: {order // quotient}")
    print(f"|Psi|: {npsi}")
    print(f"dim G/L: {2 * npsi}")
    n_sets = len(enumerate_nilradical(ctx))
    print(f"orthogonal subsets of Psi: {n_sets}")
    bound = quotient * n_sets
    print(f"estimated cost: at most {bound} admissible pairs, {bound * bound} order comparisons")
    if args.force:
        print(f"admissible pairs: {len(enumerate_hermitian(ctx))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsorbits",
        description="B-orbits in abelian nilradicals and Hermitian symmetric varieties.",
        epilog=__doc__.split("\n\n")[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, node_required=True):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"), type=str.upper)
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--node", required=node_required, type=int, help="1-based cominuscule node")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--force", action="store_true", help="allow E6/E7-scale enumeration")

    p = sub.add_parser("enum", help="list orbit parameters")
    common(p)
    p.add_argument("--space", default="gl", help="pu, gl or fiber:<word>")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("hasse", help="write the Hasse diagram")
    common(p)
    p.add_argument("--space", default="gl", help="pu, gl or fiber:<word>")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run invariant suites")
    common(p)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="group and quotient sizes")
    common(p, node_required=False)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

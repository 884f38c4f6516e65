"""Command line interface.

    schubert poly --family C --n 2 --w "[-2,1]" [--single] [--closed] [--verify]
    schubert verify --suite mgras [--n 3] [--jobs 4]
    schubert structure --family C --n 2 --u s0 --v s0
    schubert locus --family C --n 2 --lambda 2

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import re
import sys

from .divided import apply_element
from .formats import to_json, to_latex, to_text
from .loci import chern_notation, lagrangian_class, lq1_record
from .partitions import is_strict, strict_partitions
from .quotient import NotStable, structure_constants
from .schubert import closed_max_grassmannian, positivity_form, schubert
from .verify import SUITES, run_suite
from .weyl import WeylGroup, max_grassmannian, parse_element


class UsageError(Exception):
    pass


def parse_partition(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t.lower() in ("", "()", "[]", "0", "empty"):
        return ()
    if re.search(r"[^\d\s,\[\]\(\)]", t):
        raise UsageError(f"cannot parse partition {text!r}")
    lam = tuple(int(v) for v in re.findall(r"\d+", t))
    if not is_strict(lam):
        raise UsageError(f"{lam} is not a strict partition")
    return lam


def grassmannian_shape(family: str, w, n: int) -> tuple[int, ...] | None:
    k = n - 1 if family == "D" else n
    for lam in strict_partitions(k):
        if max_grassmannian(family, lam, n) == w:
            return lam
    return None


def _render(f, fmt: str, family: str, element: str) -> str:
    if fmt == "latex":
        return to_latex(f)
    if fmt == "json":
        return to_json(f, family, element)
    return to_text(f)


def _element(family: str, n: int, text: str):
    try:
        return parse_element(text, family, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_poly(args) -> int:
    family, n = args.family, args.n
    w = _element(family, n, args.w)
    if args.closed:
        if family == "A":
            raise UsageError("no closed formula in type A")
        lam = grassmannian_shape(family, w, n)
        if lam is None:
            raise UsageError(f"{w} is not a maximal Grassmannian element")
        f = closed_max_grassmannian(family, lam, n, args.variant)
        if args.single:
            f = f.set_y_zero()
    else:
        f = schubert(family, n, w, args.single)
    print(_render(f, args.format, family, str(w)))
    if args.verify:
        ok, how = _verify_poly(family, n, w, f, args)
        print(f"verify ({how}): {'PASS' if ok else 'FAIL'}", file=sys.stderr)
        return 0 if ok else 1
    return 0


def _verify_poly(family, n, w, f, args):
    """Recompute f by an independent route."""
    if args.closed:
        return f == schubert(family, n, w, args.single), "definition"
    lam = grassmannian_shape(family, w, n) if family != "A" else None
    if lam is not None:
        g = closed_max_grassmannian(family, lam, n, args.variant)
        return f == (g.set_y_zero() if args.single else g), "closed formula"
    if family in ("B", "C") and w.is_unsigned() and not args.single:
        lhs, rhs = positivity_form(family, n, w)
        return f == rhs, "type A form"
    W = WeylGroup(family, n)
    top = schubert(family, n, W.longest(), args.single)
    g = apply_element(top, w.inverse() * W.longest(), family, primed=family != "A")
    return f == g, "greedy reduced word"


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suite(args.suite, args.n, args.jobs)
    failed = 0
    for r in results:
        if not r.ok:
            failed += 1
        line = f"{'PASS' if r.ok else 'FAIL'} {r.label}"
        print(line + (f"  ({r.detail})" if r.detail and (args.verbose or not r.ok) else ""))
    if args.suite == "lq1":
        for key, val in lq1_record().items():
            print(f"  {key}: {val}")
    print(f"{args.suite}: {len(results) - failed}/{len(results)} passed")
    return 1 if failed else 0


def cmd_structure(args) -> int:
    family, n = args.family, args.n
    if family not in ("A", "C"):
        raise UsageError("structure constants are available for types A and C")
    u, v = _element(family, n, args.u), _element(family, n, args.v)
    try:
        consts = structure_constants(family, u, v, n)
    except NotStable as exc:
        raise UsageError(str(exc)) from exc
    if not consts:
        print("0")
    for w in sorted(consts):
        print(f"{consts[w]} * {w}")
    return 0


def cmd_locus(args) -> int:
    family, n = args.family, args.n
    lam = parse_partition(args.lam)
    k = n - 1 if family == "D" else n
    if any(p > k for p in lam):
        raise UsageError(f"parts of {lam} must be at most {k}")
    f = lagrangian_class(family, lam, n, args.variant)
    if args.format == "chern":
        print(chern_notation(f))
    else:
        print(_render(f, args.format, family, str(max_grassmannian(family, lam, n))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubert", description="Double Schubert polynomials of classical type.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("poly", help="print the polynomial of a group element")
    q.add_argument("--family", choices="ABCD", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--w", required=True, help='e.g. "[-2,1]", "box", "s0", "w0"')
    q.add_argument("--single", action="store_true", help="set Y = 0")
    q.add_argument("--closed", action="store_true", help="use the closed formula")
    q.add_argument("--verify", action="store_true", help="recompute by a second route")
    q.add_argument("--variant", type=int, choices=(1, 2), default=1, help="type D closed formula")
    q.add_argument("--format", choices=("text", "latex", "json"), default="text")
    q.set_defaults(func=cmd_poly)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("-v", "--verbose", action="store_true", help="show details of passing checks")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("structure", help="structure constants of a product")
    s.add_argument("--family", choices="AC", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.set_defaults(func=cmd_structure)

    loc = sub.add_parser("locus", help="class of a degeneracy locus")
    loc.add_argument("--family", choices="BCD", required=True)
    loc.add_argument("--n", type=int, required=True)
    loc.add_argument("--lambda", dest="lam", required=True)
    loc.add_argument("--variant", type=int, choices=(1, 2), default=1)
    loc.add_argument("--format", choices=("chern", "text", "latex", "json"), default="chern")
    loc.set_defaults(func=cmd_locus)
    return p


_VALUE_OPTIONS = ("--w", "--u", "--v", "--lambda")


def _glue_signed_values(argv: list[str]) -> list[str]:
    """Let "--u -1,2" through: argparse would read -1,2 as an option."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTIONS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_signed_values(sys.argv[1:] if argv is None else list(argv)))
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

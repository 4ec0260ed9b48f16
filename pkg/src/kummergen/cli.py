"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import itertools
import math
import random
import sys
from fractions import Fraction

from . import __version__
from .artin_schreier import as_component_count, is_free_additive, wp, wp_reduce
from .corpus import engineered_curves, random_ratfunc_fp, torus_corpus
from .errors import DomainError, ParseError, ResourceError
from .expr import parse_curve
from .family import FamilySpec, degeneration_candidates, scan
from .kummer import (
    analyze,
    component_count,
    is_free_alternant,
    is_free_rank,
    oracle_component_count,
    verify_stabilizing,
)
from .lattice import DEFAULT_CAP, kernel_size_mod_n
from .poly import format_poly, format_ratfunc
from .wire import WIRE_VERSION, dumps, poly_to_wire, report_to_dict, scalar_to_wire

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_int_set(text: str) -> list:
    """``"1..6"`` or ``"2,3,10"`` (mixable) into a sorted list of ints."""
    return sorted({int(v) for v in _parse_values(text)})


def _parse_values(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"empty item in list {text!r}")
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {part!r}") from None
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(Fraction(part))
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value {part!r}") from None
    return out


def _int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")

    parser = _Parser(prog="kummergen", description="Kummer-genericity of parametrized torus curves.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="full report for a curve in G_m^k")
    p.add_argument("--curve", required=True)
    p.add_argument("--counts", help="values of n, e.g. 1..6 or 2,3,5")
    p.add_argument("--verify-stabilizing", type=_int, metavar="N")
    p.add_argument("--oracle", action="store_true", help="cross-check counts by brute force")

    p = sub.add_parser("components", parents=[common], help="components of [n]^-1(X)")
    p.add_argument("--curve", required=True)
    p.add_argument("--n", type=_int, required=True)

    p = sub.add_parser("oracle", parents=[common], help="brute-force component count")
    p.add_argument("--curve", required=True)
    p.add_argument("--n", type=_int, required=True)

    p = sub.add_parser("scan", parents=[common], help="scan a one-parameter family")
    p.add_argument("--family", required=True)
    p.add_argument("--param", default="c")
    p.add_argument("--values", required=True, help="comma list or a..b (use --values=-6..6)")

    p = sub.add_parser("as", parents=[common], help="Artin-Schreier analogue in G_a^k over F_p")
    p.add_argument("--p", type=_int, required=True)
    p.add_argument("--curve", required=True)

    sub.add_parser("selftest", parents=[common], help="run the invariant corpus")
    return parser


# -- subcommands -----------------------------------------------------------

def _fmt_index(x):
    return "inf" if x == math.inf else str(x)


def _report_lines(report, curve_text):
    vm = report.valuation
    primes = report.obstruction_primes
    return [
        f"curve: {curve_text}",
        f"k: {report.k}",
        "basis: " + (" | ".join(format_poly(b) for b in vm.basis) or "(none)"),
        f"matrix: {[list(r) for r in vm.matrix]}",
        f"divisors: ({', '.join(map(str, report.divisors))})",
        f"free: {str(report.free).lower()}",
        f"index: {_fmt_index(report.index)}",
        f"exponent: {report.exponent if report.exponent is not None else '-'}",
        "obstruction primes: " + ("all" if primes is None else (", ".join(map(str, primes)) or "none")),
        f"kummer-generic: {str(report.kummer_generic).lower()}",
        f"stabilizing level: {report.stabilizing_level if report.stabilizing_level is not None else '-'}",
    ]


def cmd_analyze(args, out):
    curve = parse_curve(args.curve)
    report = analyze(curve)
    ns = parse_int_set(args.counts) if args.counts else []
    if args.oracle and not ns:
        ns = list(range(1, 7))
    for n in ns:
        if n < 1:
            raise DomainError(f"n must be positive, got {n}")
    counts = {n: component_count(report, n) for n in ns}
    agreement = None
    if args.oracle:
        agreement = all(oracle_component_count(curve, n, cap=args.cap) == counts[n] for n in ns)
    verified = None
    if args.verify_stabilizing is not None:
        if not report.free:
            raise DomainError("no stabilizing level exists: index infinite")
        verified = verify_stabilizing(report, report.stabilizing_level, args.verify_stabilizing)
    if args.json:
        doc = report_to_dict(report, str(curve), counts, agreement)
        if verified is not None:
            doc["stabilizing_verified"] = verified
        print(dumps(doc), file=out)
        return EXIT_OK
    lines = _report_lines(report, str(curve))
    if counts:
        lines.append("component counts: " + " ".join(f"{n}:{c}" for n, c in counts.items()))
    if agreement is not None:
        lines.append(f"oracle agreement: {str(agreement).lower()}")
    if verified is not None:
        lines.append(f"stabilizing verified (n <= {args.verify_stabilizing}): {str(verified).lower()}")
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_components(args, out):
    curve = parse_curve(args.curve)
    count = component_count(analyze(curve), args.n)
    if args.json:
        print(dumps({"version": WIRE_VERSION, "curve": str(curve), "n": args.n,
                     "component_count": count}), file=out)
    else:
        print(f"components of [{args.n}]^-1(X): {count}", file=out)
    return EXIT_OK


def cmd_oracle(args, out):
    curve = parse_curve(args.curve)
    if args.n < 1:
        raise DomainError(f"n must be positive, got {args.n}")
    oc = oracle_component_count(curve, args.n, cap=args.cap)
    sc = component_count(analyze(curve), args.n)
    if args.json:
        print(dumps({"version": WIRE_VERSION, "curve": str(curve), "n": args.n, "oracle_count": oc,
                     "component_count": sc, "oracle_agreement": oc == sc}), file=out)
    else:
        print(f"oracle count: {oc}\nsmith count: {sc}\nagreement: {str(oc == sc).lower()}", file=out)
    return EXIT_OK


def cmd_scan(args, out):
    family = FamilySpec.parse(args.family, param=args.param)
    values = _parse_values(args.values)
    if len({Fraction(v) for v in values}) != len(values):
        raise UsageError("scan values must be pairwise distinct")
    result = scan(family, values)
    cands = degeneration_candidates(family)
    if args.json:
        rows = []
        for row in result.rows:
            if row.error:
                rows.append({"value": scalar_to_wire(row.value), "error": row.error})
            else:
                r = row.report
                rows.append({"value": scalar_to_wire(row.value), "signature": row.signature,
                             "free": r.free, "divisors": list(r.divisors),
                             "index": "inf" if r.index == math.inf else r.index})
        doc = {
            "version": WIRE_VERSION,
            "family": str(family),
            "param": family.param,
            "rows": rows,
            "strata": {s: [scalar_to_wire(v) for v in vs] for s, vs in result.strata.items()},
            "max_index": result.max_index,
            "degeneration_candidates": [poly_to_wire(c) for c in cands],
        }
        print(dumps(doc), file=out)
        return EXIT_OK
    lines = [f"family: {family}"]
    for row in result.rows:
        v = scalar_to_wire(row.value)
        lines.append(f"  {family.param} = {v}: " + (f"error: {row.error}" if row.error else row.signature))
    lines.append("strata:")
    for s, vs in result.strata.items():
        lines.append(f"  {s}: " + ", ".join(str(scalar_to_wire(v)) for v in vs))
    lines.append(f"max index: {result.max_index if result.max_index is not None else '-'}")
    lines.append("degeneration candidates: "
                 + ("; ".join(format_poly(c, family.param) for c in cands) or "(none)"))
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_as(args, out):
    curve = parse_curve(args.curve, p=args.p)
    reductions = [wp_reduce(c, seed=args.seed) for c in curve.coords]
    count = as_component_count(curve, cap=args.cap, seed=args.seed)
    free = is_free_additive(curve)
    if args.json:
        doc = {
            "version": WIRE_VERSION,
            "p": curve.p,
            "curve": ", ".join(format_ratfunc(c) for c in curve.coords),
            "k": curve.k,
            "reductions": [{"g": format_ratfunc(w.g), "r": format_ratfunc(w.r)} for w in reductions],
            "component_count": count,
            "as_generic": count == 1,
            "free": free,
        }
        print(dumps(doc), file=out)
        return EXIT_OK
    lines = [f"p: {curve.p}", "curve: " + ", ".join(format_ratfunc(c) for c in curve.coords)]
    for i, w in enumerate(reductions, 1):
        lines.append(f"  coordinate {i}: g = {format_ratfunc(w.g)}, r = {format_ratfunc(w.r)}")
    lines += [f"level-1 component count: {count}", f"as-generic: {str(count == 1).lower()}",
              f"free: {str(free).lower()}"]
    print("\n".join(lines), file=out)
    return EXIT_OK


def selftest_checks(seed: int = 0, size: int = 30):
    """Yield ``(name, passed)`` for a small seeded invariant corpus."""
    corpus = torus_corpus(size=size, seed=seed) + engineered_curves()
    ok = True
    for curve in corpus:
        r = analyze(curve)
        for n in range(1, 7):
            if n**curve.k <= 1000 and oracle_component_count(curve, n) != component_count(r, n):
                ok = False
    yield "oracle equivalence (n <= 6)", ok
    yield "freeness agreement", all(is_free_rank(c) == is_free_alternant(c) for c in corpus)
    rng = random.Random(seed)
    yield "smith kernel count", all(
        kernel_size_mod_n(m, n) == _brute_kernel(m, n)
        for m, n in ((_rand_matrix(rng), rng.randint(1, 8)) for _ in range(40))
    )
    ok = True
    for p in (2, 3, 5):
        for _ in range(20):
            f = random_ratfunc_fp(rng, p)
            w = wp_reduce(f, seed=seed)
            ok &= wp(w.g) + w.r == f
    yield "artin-schreier certificates", ok
    frees = [analyze(c) for c in corpus]
    yield "stabilization", all(verify_stabilizing(r, r.stabilizing_level, 20) for r in frees if r.free)


def _rand_matrix(rng):
    k, s = rng.randint(1, 3), rng.randint(0, 3)
    return [[rng.randint(-6, 6) for _ in range(s)] for _ in range(k)]


def _brute_kernel(m, n):
    k = len(m)
    s = len(m[0]) if m else 0
    return sum(
        all(sum(a[i] * m[i][j] for i in range(k)) % n == 0 for j in range(s))
        for a in itertools.product(range(n), repeat=k)
    )


def cmd_selftest(args, out):
    results = list(selftest_checks(seed=args.seed))
    passed = all(ok for _, ok in results)
    if args.json:
        print(dumps({"version": WIRE_VERSION, "seed": args.seed,
                     "checks": [{"name": n, "passed": ok} for n, ok in results],
                     "passed": passed}), file=out)
    else:
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
    return EXIT_OK if passed else EXIT_DOMAIN


COMMANDS = {
    "analyze": cmd_analyze,
    "components": cmd_components,
    "oracle": cmd_oracle,
    "scan": cmd_scan,
    "as": cmd_as,
    "selftest": cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource error: {exc}", file=err)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

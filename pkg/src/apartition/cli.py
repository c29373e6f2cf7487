"""Command-line interface.

Usage examples:

    apartition poly --multiset 1,2,3,4,5 --upto 7
    apartition eval --multiset plane --n 6 --x 5/2
    apartition colored --multiset naturals --k 3 --upto 10
    apartition oracle colored --multiset naturals --k 1 --upto 4
    apartition bo check --multiset 1,2 --a 1 --b 1 --x 3
    apartition bo sweep-sets3 --a-max 11 --b-max 6 --sum-max 12
    apartition bo sweep-multisets5 --sum-max 8
    apartition roots figure --multiset 1,2,2,3,5,5,5 --a-max 10 --b-max 10

Exit codes: 0 success, 1 expectation violated (inequality violation, oracle
mismatch), 2 usage error, 3 internal or numeric failure.  Errors go to
stderr prefixed with ``error:``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bo_verify, oracle, roots
from .multiset import MultisetSpecError, parse_multiset_spec
from .partition_poly import (
    build_sequence,
    derivative_sequence,
    evaluate_colored,
)
from .polyring import format_rational, parse_rational

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _multiset(text):
    try:
        return parse_multiset_spec(text)
    except MultisetSpecError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def default_workers() -> int:
    env = os.environ.get("APARTITION_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"APARTITION_WORKERS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


# -- subcommands ------------------------------------------------------------


def cmd_poly(args) -> int:
    S = build_sequence(args.multiset, args.upto)
    if args.format == "json":
        data = S.to_json()
        if args.derivatives:
            data["derivatives"] = [g.to_strings() for g in derivative_sequence(S)]
        _emit(data)
        return EXIT_OK
    for n in range(1, S.upto + 1):
        print(f"{n}\t{S.f[n]}")
    if args.derivatives:
        for n, g in enumerate(derivative_sequence(S)):
            if n:
                print(f"{n}'\t{g}")
    return EXIT_OK


def cmd_eval(args) -> int:
    S = build_sequence(args.multiset, args.n)
    value = S.f[args.n](args.x)
    if args.format == "json":
        _emit({"multiset": args.multiset.spec(), "n": args.n, "x": format_rational(args.x),
               "value": format_rational(value)})
    else:
        print(format_rational(value) if value.denominator != 1 else value.numerator)
    return EXIT_OK


def _print_series(args, label: str, values: list[int]) -> None:
    if args.format == "json":
        _emit({"multiset": args.multiset.spec(), label: getattr(args, "k", 1),
               "upto": len(values) - 1, "values": values})
    elif args.format == "csv":
        print("n,value")
        for n, v in enumerate(values):
            print(f"{n},{v}")
    else:
        for n, v in enumerate(values):
            print(f"{n}\t{v}")


def cmd_colored(args) -> int:
    S = build_sequence(args.multiset, args.upto)
    _print_series(args, "k", [evaluate_colored(S, n, args.k) for n in range(args.upto + 1)])
    return EXIT_OK


def cmd_oracle(args) -> int:
    k = getattr(args, "k", 1)
    if args.which == "brute":
        series = oracle.enumerate_colored_brute(args.multiset, k, args.upto)
    else:
        series = oracle.count_colored_series(args.multiset, k, args.upto)
    values = list(series.coefficients)
    _print_series(args, "k", values)
    S = build_sequence(args.multiset, args.upto)
    for n, v in enumerate(values):
        expected = evaluate_colored(S, n, k)
        if v != expected:
            print(f"error: oracle mismatch at n={n}: oracle {v}, polynomial {expected}", file=sys.stderr)
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_bo_check(args) -> int:
    S = build_sequence(args.multiset, args.a + args.b)
    rep = bo_verify.check_bo(S, args.a, args.b, args.x)
    if args.format == "json":
        _emit({"multiset": args.multiset.spec(), **rep.to_json(), "status": rep.status})
    else:
        print(f"{rep.status}\tdifference={format_rational(rep.difference)}")
    return EXIT_VIOLATION if rep.violated else EXIT_OK


def cmd_bo_sweep(args) -> int:
    S = build_sequence(args.multiset, args.upto)
    reports = bo_verify.bo_grid(S, args.x)
    non_strict = [r for r in reports if not r.strict]
    if args.format == "json":
        _emit({"multiset": args.multiset.spec(), "checked": len(reports),
               "non_strict": [dict(r.to_json(), status=r.status) for r in non_strict]})
    else:
        print(f"checked {len(reports)} instances")
        for r in non_strict:
            print(f"{r.status}\ta={r.a} b={r.b} x={format_rational(r.x)} difference={format_rational(r.difference)}")
    return EXIT_VIOLATION if any(r.violated for r in reports) else EXIT_OK


def _report_summary(args, summary: bo_verify.SweepSummary) -> int:
    if args.format == "json":
        _emit(summary.to_json())
    else:
        print(summary.family)
        print(f"checked {summary.checked}")
        for label, items in (("violation", summary.violations), ("equality", summary.equalities)):
            for inst in items:
                print(f"{label}\tA={inst.multiset} a={inst.a} b={inst.b} difference={format_rational(inst.difference)}")
        for inst in summary.unexpected_equalities:
            print(f"unexpected-equality\tA={inst.multiset} a={inst.a} b={inst.b}")
        if summary.missing_equalities:
            print(f"missing-equalities\t{summary.missing_equalities}")
        if summary.incomplete:
            print("incomplete")
    if summary.incomplete:
        print("error: sweep interrupted, summary incomplete", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_sweep_sets3(args) -> int:
    summary = bo_verify.sweep_sets_at_3(
        args.a_max, args.b_max, sum_max=args.sum_max, x=args.x,
        workers=args.workers, deep=args.deep,
    )
    return _report_summary(args, summary)


def cmd_sweep_multisets5(args) -> int:
    summary = bo_verify.sweep_multisets_at_5(
        args.sum_max, x=args.x, workers=args.workers, deep=args.deep
    )
    return _report_summary(args, summary)


def cmd_quasi12(args) -> int:
    S = build_sequence(parse_multiset_spec("1,2"), args.upto)
    rows, bad = [], []
    for n in range(args.upto + 1):
        q = bo_verify.quasi_poly_12_at_3(n)
        v = evaluate_colored(S, n, 3)
        rows.append((n, q, v))
        if q != v:
            bad.append(n)
    if args.format == "json":
        _emit({"upto": args.upto, "values": [format_rational(q) for _, q, _ in rows], "mismatches": bad})
    else:
        for n, q, v in rows:
            print(f"{n}\t{format_rational(q)}\t{v}")
    if bad:
        print(f"error: quasi-polynomial mismatch at n={bad[:10]}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_aux(args) -> int:
    rep = bo_verify.check_aux_positivity(args.which, args.lo, args.hi, args.step)
    if args.format == "json":
        _emit(rep.to_json())
    else:
        verdict = "PASS" if rep.passed else "FAIL"
        print(f"{verdict}\t{rep.which} on [{rep.lo:g}, {rep.hi:g}] step {rep.step:g}: "
              f"min {rep.min_value:.15g} at x={rep.argmin:.15g} ({rep.points} points, grid spot-check)")
        print(f"slack\tpassed_with_slack={rep.passed_with_slack} near_zero={rep.near_zero}")
    if not rep.finite:
        print("error: non-finite values on the grid", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_monotone(args) -> int:
    S = build_sequence(args.multiset, args.upto)
    grid = args.grid or list(bo_verify.MONOTONE_GRID)
    rep = bo_verify.check_monotonicity(S, grid)
    if args.format == "json":
        _emit(rep.to_json())
    else:
        print(f"{'PASS' if rep.passed else 'FAIL'}\t{rep.comparisons} comparisons")
        for line in rep.failures:
            print(line)
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_roots_figure(args) -> int:
    records = roots.figure_dataset(args.multiset, args.a_max, args.b_max)
    if args.format == "json":
        _emit([{"a": r.a, "b": r.b, "re": r.root.real, "im": r.root.imag, "residual": r.residual}
               for r in records])
    else:
        sys.stdout.write(roots.to_csv(records))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--workers", type=_positive, default=None,
                        help="parallel workers (default: $APARTITION_WORKERS or all cores)")

    p = _Parser(prog="apartition", description="A-partition polynomials and their inequalities")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name, func, **kw):
        sp = parent.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=func)
        return sp

    sp = leaf(sub, "poly", cmd_poly, help="print f_{A,1..N}")
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--upto", type=_nonneg, required=True)
    sp.add_argument("--derivatives", action="store_true")

    sp = leaf(sub, "eval", cmd_eval, help="evaluate f_{A,n} at a rational x")
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--x", type=_rational, required=True)

    sp = leaf(sub, "colored", cmd_colored, help="k-colored A-partition numbers from the polynomials")
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--upto", type=_nonneg, required=True)

    orc = sub.add_parser("oracle", help="independent counting oracles").add_subparsers(dest="which", required=True)
    for name in ("partitions", "colored", "brute"):
        sp = leaf(orc, name, cmd_oracle)
        sp.add_argument("--multiset", type=_multiset, required=True)
        sp.add_argument("--upto", type=_nonneg, required=True)
        if name != "partitions":
            sp.add_argument("--k", type=_positive, default=1)

    bo = sub.add_parser("bo", help="inequality checks").add_subparsers(dest="action", required=True)
    sp = leaf(bo, "check", cmd_bo_check)
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--a", type=_positive, required=True)
    sp.add_argument("--b", type=_positive, required=True)
    sp.add_argument("--x", type=_rational, required=True)

    sp = leaf(bo, "sweep", cmd_bo_sweep, help="all a+b <= upto for one multiset")
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--upto", type=_positive, required=True)
    sp.add_argument("--x", type=_rational, action="append", required=True)

    sp = leaf(bo, "sweep-sets3", cmd_sweep_sets3)
    sp.add_argument("--a-max", type=_positive, required=True)
    sp.add_argument("--b-max", type=_positive, required=True)
    sp.add_argument("--sum-max", type=_positive, default=None)
    sp.add_argument("--x", type=_rational, default=Fraction(3))
    sp.add_argument("--deep", action="store_true", help="lift the desk-scale guard")

    sp = leaf(bo, "sweep-multisets5", cmd_sweep_multisets5)
    sp.add_argument("--sum-max", type=_positive, required=True)
    sp.add_argument("--x", type=_rational, default=Fraction(5))
    sp.add_argument("--deep", action="store_true", help="lift the desk-scale guard")

    sp = leaf(bo, "quasi12", cmd_quasi12)
    sp.add_argument("--upto", type=_nonneg, default=200)

    sp = leaf(bo, "aux", cmd_aux)
    sp.add_argument("--which", choices=sorted(bo_verify.AUX_FUNCTIONS), required=True)
    sp.add_argument("--lo", type=_rational, required=True)
    sp.add_argument("--hi", type=_rational, required=True)
    sp.add_argument("--step", type=_rational, default=Fraction(1, 4))

    sp = leaf(bo, "monotone", cmd_monotone)
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--upto", type=_positive, required=True)
    sp.add_argument("--grid", type=_rational, action="append", default=None)

    rts = sub.add_parser("roots", help="complex roots of difference polynomials").add_subparsers(
        dest="action", required=True)
    sp = leaf(rts, "figure", cmd_roots_figure)
    sp.add_argument("--multiset", type=_multiset, required=True)
    sp.add_argument("--a-max", type=_positive, default=10)
    sp.add_argument("--b-max", type=_positive, default=10)

    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.workers is None:
            args.workers = default_workers()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (bo_verify.ResourceGuardError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except roots.RootFindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except KeyboardInterrupt:
        print("error: interrupted", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"error: internal failure: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())

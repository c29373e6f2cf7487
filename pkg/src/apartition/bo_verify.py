"""Checks of the supermultiplicativity f_{A,a}(x) f_{A,b}(x) > f_{A,a+b}(x).

Everything except the auxiliary positivity grid is exact: differences are
rationals and equality means an exact zero.

The exhaustive sweeps only look at multisets supported on {1, ..., a+b}:
larger parts cannot occur in partitions of a, b or a+b, so they do not change
any of the three values being compared.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .multiset import explicit
from .partition_poly import PolySequence, derivative_sequence, values_at
from .polyring import RatPolynomial, format_rational

__all__ = [
    "BOReport",
    "Instance",
    "SweepSummary",
    "ResourceGuardError",
    "difference_poly",
    "check_bo",
    "bo_grid",
    "sweep_sets_at_3",
    "sweep_multisets_at_5",
    "quasi_poly_12_at_3",
    "AUX_FUNCTIONS",
    "AuxReport",
    "check_aux_positivity",
    "MonotonicityReport",
    "check_monotonicity",
    "MONOTONE_GRID",
    "SET_SUM_GUARD",
    "MULTISET_SUM_GUARD",
]

SET_SUM_GUARD = 16
MULTISET_SUM_GUARD = 9
SLACK = 1e-9
MONOTONE_GRID = (
    Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3), Fraction(15, 2), Fraction(10),
)


class ResourceGuardError(ValueError):
    pass


@dataclass(frozen=True)
class BOReport:
    a: int
    b: int
    x: Fraction
    difference: Fraction

    @property
    def strict(self) -> bool:
        return self.difference > 0

    @property
    def equality(self) -> bool:
        return self.difference == 0

    @property
    def violated(self) -> bool:
        return self.difference < 0

    @property
    def status(self) -> str:
        if self.strict:
            return "strict"
        return "equality" if self.equality else "violated"

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "x": format_rational(self.x),
            "difference": format_rational(self.difference),
            "strict": self.strict,
            "equality": self.equality,
        }


def _check_indices(S: PolySequence, a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise IndexError("a and b must be positive")
    if a + b > S.upto:
        raise IndexError(f"a+b={a + b} exceeds the sequence bound {S.upto}")


def difference_poly(S: PolySequence, a: int, b: int) -> RatPolynomial:
    """f_a * f_b - f_{a+b}."""
    _check_indices(S, a, b)
    return S.f[a] * S.f[b] - S.f[a + b]


def check_bo(S: PolySequence, a: int, b: int, x) -> BOReport:
    _check_indices(S, a, b)
    x = Fraction(x)
    fa, fb, fab = S.f[a](x), S.f[b](x), S.f[a + b](x)
    return BOReport(a, b, x, fa * fb - fab)


def bo_grid(S: PolySequence, xs: Sequence) -> list[BOReport]:
    """check_bo for every b <= a with a + b <= S.upto and every x in xs."""
    out = []
    for x in xs:
        x = Fraction(x)
        vals = [p(x) for p in S.f]
        for s in range(2, S.upto + 1):
            for b in range(1, s // 2 + 1):
                a = s - b
                out.append(BOReport(a, b, x, vals[a] * vals[b] - vals[s]))
    return out


# -- exhaustive sweeps ------------------------------------------------------


@dataclass(frozen=True, order=True)
class Instance:
    sort_key: tuple = field(repr=False)
    multiset: str = field(compare=False)
    a: int = field(compare=False)
    b: int = field(compare=False)
    x: Fraction = field(compare=False)
    difference: Fraction = field(compare=False)

    def to_json(self) -> dict:
        return {
            "multiset": self.multiset,
            "a": self.a,
            "b": self.b,
            "x": format_rational(self.x),
            "difference": format_rational(self.difference),
        }


@dataclass
class SweepSummary:
    family: str
    checked: int = 0
    violations: list[Instance] = field(default_factory=list)
    equalities: list[Instance] = field(default_factory=list)
    unexpected_equalities: list[Instance] = field(default_factory=list)
    missing_equalities: int = 0
    incomplete: bool = False

    @property
    def ok(self) -> bool:
        """No violation, and equalities exactly where the theorem predicts them."""
        return (
            not self.violations
            and not self.unexpected_equalities
            and not self.missing_equalities
            and not self.incomplete
        )

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "checked": self.checked,
            "violations": [i.to_json() for i in self.violations],
            "equalities": [i.to_json() for i in self.equalities],
            "unexpected_equalities": [i.to_json() for i in self.unexpected_equalities],
            "missing_equalities": self.missing_equalities,
            "incomplete": self.incomplete,
        }


def _divisor_lists(s: int) -> list[list[int]]:
    divs = [[] for _ in range(s + 1)]
    for d in range(1, s + 1):
        for m in range(d, s + 1, d):
            divs[m].append(d)
    return divs


def _mu_from_index(idx: int, radices: Sequence[int]) -> list[int]:
    # mu[0] unused, mu[1] = 1, mu[j] for j >= 2 from the mixed-radix digits
    mu = [0, 1]
    for r in radices:
        idx, digit = divmod(idx, r)
        mu.append(digit)
    return mu


def _sweep_chunk(s, pairs, radices, lo, hi, x, expected_mu2):
    """Check index range [lo, hi) of the family supported on {1..s}.

    Returns (checked, violations, equalities, unexpected, expected_hits) with
    instances as plain tuples so the result pickles cheaply.
    """
    divs = _divisor_lists(s)
    violations, equalities, unexpected = [], [], []
    expected_hits = 0
    for idx in range(lo, hi):
        mu = _mu_from_index(idx, radices)
        sigma = [0] + [sum(d * mu[d] for d in divs[j]) for j in range(1, s + 1)]
        vals = values_at(sigma, s, x)
        for a, b in pairs:
            diff = vals[a] * vals[b] - vals[s]
            if diff > 0:
                continue
            rec = (tuple(mu), a, b, diff)
            if diff < 0:
                violations.append(rec)
            else:
                equalities.append(rec)
                if a == b == 1 and expected_mu2 is not None and mu[2] == expected_mu2:
                    expected_hits += 1
                else:
                    unexpected.append(rec)
    return (hi - lo) * len(pairs), violations, equalities, unexpected, expected_hits


def _instance(rec, x) -> Instance:
    mu, a, b, diff = rec
    A = explicit({j: m for j, m in enumerate(mu) if j and m})
    key = (a + b, a, b, tuple(mu))
    return Instance(key, A.spec(), a, b, Fraction(x), Fraction(diff))


def _run_family(
    family: str,
    groups: dict[int, list[tuple[int, int]]],
    radix_rule: Callable[[int], int],
    x,
    expected_mu2,
    workers: int,
    cancel: threading.Event | None,
    chunk_size: int = 4096,
) -> SweepSummary:
    x = x if isinstance(x, int) else Fraction(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        x = int(x)
    tasks = []
    expected_total = 0
    for s in sorted(groups):
        pairs = groups[s]
        radices = [radix_rule(j) for j in range(2, s + 1)]
        total = math.prod(radices)
        if expected_mu2 is not None and (1, 1) in pairs:
            expected_total += total // radices[0] if radices and expected_mu2 < radices[0] else 0
        for lo in range(0, total, chunk_size):
            tasks.append((s, pairs, radices, lo, min(total, lo + chunk_size), x, expected_mu2))

    summary = SweepSummary(family)
    raw_v, raw_e, raw_u = [], [], []
    hits = 0

    def absorb(result):
        nonlocal hits
        checked, v, e, u, h = result
        summary.checked += checked
        raw_v.extend(v)
        raw_e.extend(e)
        raw_u.extend(u)
        hits += h

    try:
        if workers <= 1:
            for t in tasks:
                if cancel is not None and cancel.is_set():
                    summary.incomplete = True
                    break
                absorb(_sweep_chunk(*t))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                pending = {pool.submit(_sweep_chunk, *t) for t in tasks}
                while pending:
                    if cancel is not None and cancel.is_set():
                        for fut in pending:
                            fut.cancel()
                        summary.incomplete = True
                        break
                    done, pending = wait(pending, timeout=0.5, return_when=FIRST_COMPLETED)
                    for fut in done:
                        absorb(fut.result())
    except KeyboardInterrupt:
        summary.incomplete = True

    summary.violations = sorted(_instance(r, x) for r in raw_v)
    summary.equalities = sorted(_instance(r, x) for r in raw_e)
    summary.unexpected_equalities = sorted(_instance(r, x) for r in raw_u)
    if not summary.incomplete:
        summary.missing_equalities = expected_total - hits
    return summary


def _pairs_by_sum(a_max: int, b_max: int, sum_max: int) -> dict[int, list[tuple[int, int]]]:
    groups: dict[int, list[tuple[int, int]]] = {}
    for a in range(1, a_max + 1):
        for b in range(1, min(a, b_max) + 1):
            if a + b <= sum_max:
                groups.setdefault(a + b, []).append((a, b))
    return groups


def sweep_sets_at_3(
    a_max: int,
    b_max: int,
    *,
    sum_max: int | None = None,
    x=3,
    workers: int = 1,
    deep: bool = False,
    cancel: threading.Event | None = None,
) -> SweepSummary:
    """Every set A with 1 in A inside {1..a+b}, every 1 <= b <= a <= a_max, b <= b_max.

    At x = 3 the expected outcome is no violation and equality exactly for
    (a, b) = (1, 1) with 2 in A.  For other x no equality is expected.
    """
    if a_max < 1 or b_max < 1:
        raise ValueError("a_max and b_max must be >= 1")
    limit = a_max + b_max if sum_max is None else min(sum_max, a_max + b_max)
    if limit > SET_SUM_GUARD and not deep:
        raise ResourceGuardError(
            f"a+b up to {limit} exceeds the desk guard {SET_SUM_GUARD} (deep mode lifts it)"
        )
    groups = _pairs_by_sum(a_max, b_max, limit)
    x = Fraction(x)
    expected = 1 if x == 3 else None
    family = f"sets with 1 in A, b <= a <= {a_max}, b <= {b_max}, a+b <= {limit}, x = {x}"
    return _run_family(family, groups, lambda j: 2, x, expected, workers, cancel)


def sweep_multisets_at_5(
    sum_max: int,
    *,
    x=5,
    workers: int = 1,
    deep: bool = False,
    cancel: threading.Event | None = None,
) -> SweepSummary:
    """Every multiset on {1..a+b} with mu(1) = 1 and mu(j) <= j, all b <= a, a+b <= sum_max.

    At x = 5 the expected outcome is no violation and equality exactly for
    (1, 1) with mu(2) = 2.
    """
    if sum_max < 2:
        raise ValueError("sum_max must be >= 2")
    if sum_max > MULTISET_SUM_GUARD and not deep:
        raise ResourceGuardError(
            f"sum_max {sum_max} exceeds the desk guard {MULTISET_SUM_GUARD} (deep mode lifts it)"
        )
    groups = _pairs_by_sum(sum_max, sum_max, sum_max)
    x = Fraction(x)
    expected = 2 if x == 5 else None
    family = f"multisets with mu(1)=1, mu(j)<=j, a+b <= {sum_max}, x = {x}"
    return _run_family(family, groups, lambda j: j + 1, x, expected, workers, cancel)


# -- closed forms and spot checks -------------------------------------------


_EVEN = (Fraction(1, 960), Fraction(3, 128), Fraction(19, 96), Fraction(25, 32), Fraction(173, 120), Fraction(1))
_ODD = (Fraction(1, 960), Fraction(3, 128), Fraction(19, 96), Fraction(49, 64), Fraction(1249, 960), Fraction(91, 128))


def quasi_poly_12_at_3(n: int) -> Fraction:
    """Two-branch quasi-polynomial for f_{{1,2},n}(3) (n^5 coefficient first)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = _EVEN if n % 2 == 0 else _ODD
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * n + c
    return acc


def _Psi3(x):
    return (x + 1) * (x + 2) - 4 * x * (1 + np.log(2 * x))


def _psi3(x):
    return (x + 1) * (x + 2) - 2 * x * (1 + np.log(2 * x))


def _Psi4(x):
    return (x + 1) * (x + 2) * (x + 3) * (x + 4) - 48 * x * (4 * x - 1)


def _psi4(x):
    return (x + 1) * (x + 2) * (x + 3) * (x + 4) - 96 * x**2 + 24 * x


# name -> (function, strict positivity required)
AUX_FUNCTIONS = {
    "Psi3": (_Psi3, False),
    "psi3": (_psi3, True),
    "Psi4": (_Psi4, False),
    "psi4": (_psi4, True),
}


@dataclass(frozen=True)
class AuxReport:
    """Grid spot-check of one auxiliary function; not a proof of positivity."""

    which: str
    lo: float
    hi: float
    step: float
    points: int
    min_value: float
    argmin: float
    finite: bool
    passed: bool
    passed_with_slack: bool
    near_zero: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def check_aux_positivity(which: str, lo, hi, step) -> AuxReport:
    if which not in AUX_FUNCTIONS:
        raise ValueError(f"unknown function {which!r}; choose from {sorted(AUX_FUNCTIONS)}")
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if step <= 0:
        raise ValueError("step must be positive")
    fn, strict = AUX_FUNCTIONS[which]
    count = int((hi - lo) / step) + 1
    xs = np.array([float(lo + i * step) for i in range(count)])
    with np.errstate(all="ignore"):
        ys = fn(xs)
    finite = bool(np.all(np.isfinite(ys)))
    i = int(np.nanargmin(ys)) if not np.all(np.isnan(ys)) else 0
    y_min = float(ys[i])
    if strict:
        passed = finite and y_min > 0
        slack = finite and y_min > -SLACK
    else:
        passed = finite and y_min >= 0
        slack = finite and y_min >= -SLACK
    return AuxReport(
        which=which,
        lo=float(lo),
        hi=float(hi),
        step=float(step),
        points=count,
        min_value=y_min,
        argmin=float(xs[i]),
        finite=finite,
        passed=passed,
        passed_with_slack=slack,
        near_zero=int(np.sum(np.abs(ys) <= SLACK)),
    )


@dataclass
class MonotonicityReport:
    multiset: str
    upto: int
    grid: tuple
    comparisons: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "multiset": self.multiset,
            "upto": self.upto,
            "grid": [format_rational(Fraction(x)) for x in self.grid],
            "comparisons": self.comparisons,
            "failures": self.failures,
            "passed": self.passed,
        }


def check_monotonicity(S: PolySequence, x_grid: Sequence = MONOTONE_GRID) -> MonotonicityReport:
    """Exact grid check of f[n] <= f[n+1] (strict for x > 1) and 1 <= g[n] < g[n+1]."""
    grid = tuple(Fraction(x) for x in x_grid)
    if any(x < 1 for x in grid):
        raise ValueError("grid points must be >= 1")
    g = derivative_sequence(S)
    report = MonotonicityReport(S.multiset.spec(), S.upto, grid)
    for x in grid:
        fv = [p(x) for p in S.f]
        gv = [p(x) for p in g]
        for n in range(S.upto):
            report.comparisons += 1
            if x > 1 and not fv[n] < fv[n + 1]:
                report.failures.append(f"f[{n}]({x}) = {fv[n]} not < f[{n + 1}]({x}) = {fv[n + 1]}")
            elif not fv[n] <= fv[n + 1]:
                report.failures.append(f"f[{n}]({x}) = {fv[n]} > f[{n + 1}]({x}) = {fv[n + 1]}")
            if n >= 1:
                report.comparisons += 1
                if gv[n] < 1:
                    report.failures.append(f"f'[{n}]({x}) = {gv[n]} < 1")
                if not gv[n] < gv[n + 1]:
                    report.failures.append(f"f'[{n}]({x}) = {gv[n]} not < f'[{n + 1}]({x}) = {gv[n + 1]}")
    return report

"""Complex roots of the difference polynomials f_a f_b - f_{a+b}.

Roots come from companion-matrix eigenvalues (numpy) and are then Newton
polished in double precision.  Residuals are measured at the returned double
values with the exact rational coefficients, in 50-digit arithmetic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import mpmath
import numpy as np

from .bo_verify import difference_poly
from .multiset import IntegerMultiset
from .partition_poly import build_sequence
from .polyring import RatPolynomial

__all__ = [
    "RootRecord",
    "RootFindingError",
    "find_roots",
    "residual",
    "figure_dataset",
    "to_csv",
    "conjugate_mismatch",
    "RESIDUAL_TOL",
]

RESIDUAL_TOL = 1e-8
_NEWTON_STEPS = 50


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootRecord:
    a: int
    b: int
    root: complex
    residual: float


def residual(p: RatPolynomial, z: complex) -> float:
    """|p(z)| / sum_i |c_i| |z|^i, i.e. the relative backward error at z."""
    with mpmath.workdps(50):
        zm = mpmath.mpc(z.real, z.imag)
        value = mpmath.mpc(0)
        scale = mpmath.mpf(0)
        r = abs(zm)
        for c in reversed(p.coeffs):
            cm = mpmath.mpf(c.numerator) / c.denominator
            value = value * zm + cm
            scale = scale * r + abs(cm)
        if scale == 0:
            return 0.0
        return float(abs(value) / scale)


def _polish(coeffs_high_first: np.ndarray, z: complex) -> complex:
    dp = np.polyder(coeffs_high_first)
    best, best_val = z, abs(np.polyval(coeffs_high_first, z))
    for _ in range(_NEWTON_STEPS):
        d = np.polyval(dp, best)
        if d == 0:
            break
        cand = best - np.polyval(coeffs_high_first, best) / d
        val = abs(np.polyval(coeffs_high_first, cand))
        if not val < best_val:
            break
        best, best_val = cand, val
    return complex(best)


def find_roots(p: RatPolynomial, tol: float = RESIDUAL_TOL) -> list[complex]:
    """All deg(p) roots with multiplicity, sorted by (re, im)."""
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    _, ints = p.integer_coefficients()
    # exact zero roots are split off so they are reported exactly
    zeros = 0
    while ints[zeros] == 0:
        zeros += 1
    high_first = np.array([float(c) for c in reversed(ints[zeros:])])
    high_first = high_first / np.max(np.abs(high_first))
    found = [0j] * zeros
    if len(high_first) > 1:
        for z in np.roots(high_first):
            found.append(_polish(high_first, complex(z)))
    bad = [z for z in found if residual(p, z) > tol]
    if bad or len(found) != p.degree:
        raise RootFindingError(f"root finding did not converge for {p}: {len(bad)} roots above tolerance")
    return sorted(found, key=lambda z: (z.real, z.imag))


def conjugate_mismatch(roots: list[complex]) -> float:
    """Largest distance between a root and its matched conjugate partner."""
    remaining = list(roots)
    worst = 0.0
    while remaining:
        z = remaining.pop()
        target = z.conjugate()
        if abs(z.imag) == 0:
            continue
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] - target), default=None)
        if j is None:
            worst = max(worst, abs(z - target))
            continue
        d = abs(remaining[j] - target)
        if d > abs(z - target):
            # closer to its own conjugate: a real root with rounding noise
            worst = max(worst, abs(z - target))
            continue
        worst = max(worst, d)
        remaining.pop(j)
    return worst


def figure_dataset(A: IntegerMultiset, a_max: int, b_max: int) -> list[RootRecord]:
    if a_max < 1 or b_max < 1:
        raise ValueError("bounds must be >= 1")
    S = build_sequence(A, a_max + b_max)
    records = []
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            p = difference_poly(S, a, b)
            for z in find_roots(p):
                records.append(RootRecord(a, b, z, residual(p, z)))
    return records


def to_csv(records: list[RootRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "re", "im", "residual"])
    for r in records:
        w.writerow([r.a, r.b, f"{r.root.real:.15g}", f"{r.root.imag:.15g}", f"{r.residual:.15g}"])
    return buf.getvalue()

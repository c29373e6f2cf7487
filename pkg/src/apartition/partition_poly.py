"""The polynomials f_{A,n}(x) with sum_n f_{A,n}(x) q^n = prod_{a in A} (1 - q^a)^(-x).

The sequence is built bottom-up from

    f_{A,n}(x) = (x/n) * sum_{j=1}^{n} sigma_A(j) f_{A,n-j}(x),

and the derivatives from

    f'_{A,n}(x) = sum_{j=1}^{n} (sigma_A(j)/j) f_{A,n-j}(x).

Internally both run on integer coefficient vectors: F_n = n! f_n satisfies
F_n = x * sum_j sigma_A(j) (n-1)!/(n-j)! F_{n-j}, and G_n = n! f'_n satisfies
G_n = sum_j sigma_A(j) C(n, j) (j-1)! F_{n-j}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .multiset import IntegerMultiset, sigma_A, truncate
from .polyring import RatPolynomial

__all__ = [
    "PolySequence",
    "build_sequence",
    "derivative_sequence",
    "delta",
    "closed_form_singleton",
    "stirling_coefficients",
    "evaluate_colored",
    "sigma_table",
    "values_at",
]


@dataclass(frozen=True)
class PolySequence:
    """f[n] = f_{A,n}(x) for 0 <= n <= upto.

    ``sigma[j]`` is sigma_A(j) for 1 <= j <= upto; ``sigma[0]`` is an unused 0
    so indices line up.  ``scaled[n]`` holds the integer coefficients of n! f[n].
    """

    multiset: IntegerMultiset
    upto: int
    f: tuple[RatPolynomial, ...]
    sigma: tuple[int, ...]
    scaled: tuple[tuple[int, ...], ...]

    @property
    def degenerate(self) -> bool:
        """True when 1 is missing from A, so f[1] = 0 and degrees collapse."""
        return self.upto >= 1 and self.sigma[1] == 0

    def to_json(self) -> dict:
        return {
            "multiset": self.multiset.spec(),
            "upto": self.upto,
            "sigma": list(self.sigma[1:]),
            "f": [p.to_strings() for p in self.f],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def sigma_table(A: IntegerMultiset, N: int) -> tuple[int, ...]:
    """(0, sigma_A(1), ..., sigma_A(N)) computed on A truncated at N."""
    if N < 1:
        return (0,)
    At = truncate(A, N)
    return (0,) + tuple(sigma_A(At, j) for j in range(1, N + 1))


def _scaled_to_poly(ints, n: int) -> RatPolynomial:
    nf = factorial(n)
    return RatPolynomial(Fraction(c, nf) for c in ints)


def build_sequence(A: IntegerMultiset, N: int) -> PolySequence:
    """Compute f_{A,0..N} exactly via the divisor-sum recurrence."""
    if N < 0:
        raise ValueError("N must be non-negative")
    sigma = sigma_table(A, N)
    scaled: list[list[int]] = [[1]]
    for n in range(1, N + 1):
        acc = [0] * n  # coefficients of sum_j ..., degree <= n-1
        weight = 1  # (n-1)!/(n-j)!
        for j in range(1, n + 1):
            if j > 1:
                weight *= n - j + 1
            s = sigma[j]
            if s:
                w = s * weight
                for i, c in enumerate(scaled[n - j]):
                    if c:
                        acc[i] += w * c
        while acc and acc[-1] == 0:
            acc.pop()
        scaled.append([0] + acc if acc else [])
    f = tuple(_scaled_to_poly(c, n) for n, c in enumerate(scaled))
    return PolySequence(
        multiset=A,
        upto=N,
        f=f,
        sigma=sigma,
        scaled=tuple(tuple(c) for c in scaled),
    )


def derivative_sequence(S: PolySequence) -> list[RatPolynomial]:
    """g[n] = sum_{j=1}^{n} (sigma_A(j)/j) f[n-j]; g[0] is the zero polynomial."""
    out = [RatPolynomial()]
    for n in range(1, S.upto + 1):
        acc = [0] * n
        for j in range(1, n + 1):
            s = S.sigma[j]
            if not s:
                continue
            w = s * comb(n, j) * factorial(j - 1)
            for i, c in enumerate(S.scaled[n - j]):
                if c:
                    acc[i] += w * c
        out.append(_scaled_to_poly(acc, n))
    return out


def delta(S: PolySequence, n: int) -> RatPolynomial:
    """f[n+1] - f[n]."""
    if n < 0 or n + 1 > S.upto:
        raise IndexError(f"delta({n}) needs f up to {n + 1}, sequence stops at {S.upto}")
    return S.f[n + 1] - S.f[n]


def closed_form_singleton(n: int) -> RatPolynomial:
    """x(x+1)...(x+n-1)/n!, the sequence for A = {1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = RatPolynomial.constant(1)
    for i in range(n):
        p = p * RatPolynomial([i, 1])
    return p.scale(Fraction(1, factorial(n)))


def stirling_coefficients(n: int) -> list[int]:
    """Coefficients of the rising factorial x(x+1)...(x+n-1), lowest degree first."""
    nf = factorial(n)
    out = []
    for c in closed_form_singleton(n).coeffs:
        v = c * nf
        assert v.denominator == 1
        out.append(int(v))
    return out


def evaluate_colored(S: PolySequence, n: int, k: int) -> int:
    """p_{A,-k}(n) = f_{A,n}(k), the number of k-colored A-partitions of n."""
    if not 0 <= n <= S.upto:
        raise IndexError(f"n={n} outside 0..{S.upto}")
    # n! f_n(k) from the integer vector, then one exact division
    total = 0
    for c in reversed(S.scaled[n]):
        total = total * k + c
    value, rem = divmod(total, factorial(n))
    assert rem == 0, f"non-integral f_{n}({k}) for {S.multiset.spec()}"
    return value


def values_at(sigma, N: int, x) -> list:
    """f_{A,0..N}(x) evaluated directly through the recurrence.

    ``sigma`` is a sigma table as returned by :func:`sigma_table`.  Integer x
    stays in integer arithmetic (each division is exact); anything else goes
    through Fraction.
    """
    if isinstance(x, int):
        vals = [1]
        for n in range(1, N + 1):
            s = 0
            for j in range(1, n + 1):
                s += sigma[j] * vals[n - j]
            q, r = divmod(x * s, n)
            assert r == 0
            vals.append(q)
        return vals
    x = Fraction(x)
    vals = [Fraction(1)]
    for n in range(1, N + 1):
        s = sum(sigma[j] * vals[n - j] for j in range(1, n + 1))
        vals.append(x * s / n)
    return vals

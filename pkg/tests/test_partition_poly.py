from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from apartition.multiset import explicit, mcolor, naturals, plane, truncate
from apartition.oracle import count_colored_series
from apartition.partition_poly import (
    build_sequence,
    closed_form_singleton,
    delta,
    derivative_sequence,
    evaluate_colored,
    stirling_coefficients,
    values_at,
)
from apartition.polyring import RatPolynomial

from conftest import TABLE1_SET, TABLE2_MULTISET

# numerators of n! f_{A,n}(x), lowest degree first; the factored table rows
# were expanded independently with sympy
TABLE1 = {
    1: [0, 1],
    2: [0, 3, 1],
    3: [0, 8, 9, 1],
    4: [0, 42, 59, 18, 1],
    5: [0, 144, 450, 215, 30, 1],
    6: [0, 720, 3394, 2475, 565, 45, 1],
    7: [0, 720, 25872, 28294, 9345, 1225, 63, 1],
}
TABLE2 = {
    1: [0, 1],
    2: [0, 5, 1],
    3: [0, 8, 15, 1],
    4: [0, 30, 107, 30, 1],
    5: [0, 384, 550, 455, 50, 1],
    6: [0, 960, 5194, 4725, 1285, 75, 1],
    7: [0, 720, 55440, 49294, 22575, 2905, 105, 1],
}


def golden(rows, n):
    return RatPolynomial(Fraction(c, factorial(n)) for c in rows[n])


def stirling_table(n_max):
    """Unsigned Stirling numbers of the first kind from c(n,i) = c(n-1,i-1) + (n-1) c(n-1,i)."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        rows.append([(prev[i - 1] if i else 0) + (n - 1) * prev[i] for i in range(n + 1)])
    return rows


@pytest.mark.parametrize("n", range(1, 8))
def test_table1(n):
    assert build_sequence(TABLE1_SET, 7).f[n] == golden(TABLE1, n)


@pytest.mark.parametrize("n", range(1, 8))
def test_table2(n):
    assert build_sequence(TABLE2_MULTISET, 7).f[n] == golden(TABLE2, n)


def test_f0_is_one():
    for A in (naturals(), explicit([3, 4]), plane()):
        assert build_sequence(A, 0).f == (RatPolynomial([1]),)


def test_sequence_invariants(multiset5):
    S = build_sequence(multiset5, 25)
    for n in range(1, 26):
        p = S.f[n]
        assert p.degree == n
        assert p.coeffs[0] == 0
        assert p.leading() == Fraction(1, factorial(n))
        assert all(c >= 0 for c in p.coeffs)


def test_degenerate_without_one():
    S = build_sequence(explicit([2, 3]), 6)
    assert S.degenerate
    assert S.f[1].is_zero()
    assert S.f[2] == RatPolynomial([0, 1])  # one part 2, x colors
    assert not build_sequence(naturals(), 3).degenerate


def test_derivative_examples():
    S = build_sequence(explicit([1]), 5)
    g = derivative_sequence(S)
    assert g[1] == RatPolynomial([1])
    assert g[2] == RatPolynomial([Fraction(1, 2), 1])
    assert g[2] == S.f[2].derivative()
    assert derivative_sequence(build_sequence(explicit([1, 1, 1]), 1))[1] == RatPolynomial([3])


def test_derivative_consistency(multiset5):
    S = build_sequence(multiset5, 20)
    for n, g in enumerate(derivative_sequence(S)):
        assert g == S.f[n].derivative()


def test_delta_examples():
    for s2 in (0, 1, 2):
        A = explicit([1] + [2] * s2 + [3])
        S = build_sequence(A, 4)
        assert S.f[2] == RatPolynomial([0, Fraction(1 + 2 * s2, 2), Fraction(1, 2)])
        d1 = delta(S, 1)
        assert d1 == S.f[2] - S.f[1]
        assert d1(1) >= 0
    S = build_sequence(explicit([1]), 8)
    for n in range(8):
        assert delta(S, n)(1) == 0
    with pytest.raises(IndexError):
        delta(S, 8)


def test_closed_form_singleton():
    assert closed_form_singleton(3) == RatPolynomial([0, Fraction(2, 6), Fraction(3, 6), Fraction(1, 6)])
    assert closed_form_singleton(0) == RatPolynomial([1])
    for n in range(12):
        p = closed_form_singleton(n)
        for k in range(1, 7):
            assert p(k) == comb(k + n - 1, n)
    S = build_sequence(explicit([1]), 20)
    assert all(S.f[n] == closed_form_singleton(n) for n in range(21))


def test_stirling():
    assert stirling_coefficients(3) == [0, 2, 3, 1]
    assert stirling_coefficients(1) == [0, 1]
    assert stirling_coefficients(0) == [1]
    table = stirling_table(15)
    for n in range(16):
        assert stirling_coefficients(n) == table[n]


def test_evaluate_colored_examples():
    S = build_sequence(TABLE1_SET, 6)
    assert evaluate_colored(S, 2, 3) == 9
    assert evaluate_colored(S, 0, 17) == 1
    assert evaluate_colored(build_sequence(explicit([1, 3, 4]), 2), 2, 3) == 6
    with pytest.raises(IndexError):
        evaluate_colored(S, 7, 1)


def test_partition_numbers():
    S = build_sequence(naturals(), 12)
    assert [evaluate_colored(S, n, 1) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_colored_integrality_and_oracle(multiset5):
    N = 18
    S = build_sequence(multiset5, N)
    for k in range(1, 5):
        series = count_colored_series(multiset5, k, N)
        for n in range(N + 1):
            v = S.f[n](k)
            assert v.denominator == 1 and v >= 0
            assert v == series[n] == evaluate_colored(S, n, k)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=8), st.integers(1, 12))
def test_truncation_stability(elements, N):
    A = explicit([1] + elements)
    S = build_sequence(A, N)
    for n in range(1, N + 1):
        assert build_sequence(truncate(A, n), n).f[n] == S.f[n]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 9), max_size=8))
def test_dominance_over_singleton(elements):
    B = explicit([1] + elements)
    S = build_sequence(B, 10)
    for n in range(11):
        base = closed_form_singleton(n)
        for x in (Fraction(0), Fraction(1, 3), Fraction(1), Fraction(5, 2), Fraction(7)):
            assert base(x) <= S.f[n](x)


@pytest.mark.parametrize("m", [2, 3, 5])
@pytest.mark.parametrize("base", [explicit([1]), explicit([1, 2, 3]), naturals()])
def test_m_fold_identity(base, m):
    S = build_sequence(base, 15)
    Sm = build_sequence(mcolor(m, base), 15)
    for n in range(16):
        assert Sm.f[n] == S.f[n].substitute_scaled(m)


def test_json_shape():
    data = build_sequence(TABLE1_SET, 2).to_json()
    assert data == {
        "multiset": "1,2,3,4,5",
        "upto": 2,
        "sigma": [1, 3],
        "f": [["1/1"], ["0/1", "1/1"], ["0/1", "3/2", "1/2"]],
    }


def test_values_at_matches_polynomials(multiset5):
    S = build_sequence(multiset5, 15)
    for x in (3, 5, Fraction(7, 2), Fraction(-1, 3)):
        assert values_at(S.sigma, 15, x) == [p(x) for p in S.f]

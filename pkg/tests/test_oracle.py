import pytest

from apartition.multiset import explicit, kregular, naturals, plane
from apartition.oracle import (
    count_colored_series,
    count_partitions_dp,
    enumerate_colored_brute,
)
from apartition.partition_poly import build_sequence, evaluate_colored


def test_partitions_examples():
    assert count_partitions_dp(explicit([1, 2, 2, 3, 3]), 4)[4] == 8
    assert list(count_partitions_dp(explicit([1]), 9).coefficients) == [1] * 10
    assert count_partitions_dp(naturals(), 4)[4] == 5


def test_colored_examples():
    assert count_colored_series(naturals(), 3, 2)[2] == 9
    assert count_colored_series(explicit([1, 2, 2, 7]), 5, 2)[2] == 25
    for A in (plane(), kregular(3), explicit([1, 4, 4])):
        assert count_colored_series(A, 1, 15) == count_partitions_dp(A, 15)


def test_zero_bound():
    s = count_colored_series(naturals(), 2, 0)
    assert s.coefficients == (1,) and s.bound == 0


def test_brute_examples():
    assert enumerate_colored_brute(explicit([1, 2, 2, 3, 3]), 1, 4)[4] == 8
    for k in (1, 2, 5):
        assert enumerate_colored_brute(explicit([1, 3]), k, 1)[1] == k
    assert enumerate_colored_brute(explicit([1, 2]), 1, 4)[4] == 3


def test_brute_limit():
    with pytest.raises(ValueError):
        enumerate_colored_brute(naturals(), 1, 13)


@pytest.mark.parametrize("A", [naturals(), plane(), kregular(2), explicit([1, 2, 2, 3, 5, 5, 5])])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_brute_agrees_with_series(A, k):
    n_max = 10 if k < 3 else 8
    assert enumerate_colored_brute(A, k, n_max) == count_colored_series(A, k, n_max)


def test_monotone_in_k():
    for A in (naturals(), explicit([1, 5]), kregular(3)):
        prev = count_colored_series(A, 1, 25)
        for k in range(2, 6):
            cur = count_colored_series(A, k, 25)
            assert all(cur[n] >= prev[n] for n in range(1, 26))
            prev = cur


def test_series_agrees_with_polynomials(multiset5):
    S = build_sequence(multiset5, 30)
    for k in (1, 2, 3, 5):
        series = count_colored_series(multiset5, k, 30)
        assert [evaluate_colored(S, n, k) for n in range(31)] == list(series.coefficients)


def test_plane_partition_numbers():
    # pp(n), the plane partition numbers
    assert list(count_partitions_dp(plane(), 10).coefficients) == [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]

"""Counting oracles for (colored) A-partitions.

Nothing here touches the polynomial recurrence or rational arithmetic; the
series are built from plain integer knapsack passes or by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multiset import IntegerMultiset, truncate

__all__ = [
    "SeriesTruncation",
    "count_partitions_dp",
    "count_colored_series",
    "enumerate_colored_brute",
    "BRUTE_LIMIT",
]

BRUTE_LIMIT = 12


@dataclass(frozen=True)
class SeriesTruncation:
    coefficients: tuple[int, ...]
    bound: int

    def __post_init__(self):
        assert len(self.coefficients) == self.bound + 1
        assert self.coefficients[0] == 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)


def _geometric_pass(series: list[int], a: int) -> None:
    # in-place multiplication by 1/(1 - q^a)
    for n in range(a, len(series)):
        series[n] += series[n - a]


def count_colored_series(A: IntegerMultiset, k: int, N: int) -> SeriesTruncation:
    """Coefficients of prod_{a <= N} (1 - q^a)^(-k mu(a)) up to q^N."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    series = [1] + [0] * N
    if N >= 1:
        for a, mu in truncate(A, N).items:
            for _ in range(k * mu):
                _geometric_pass(series, a)
    return SeriesTruncation(tuple(series), N)


def count_partitions_dp(A: IntegerMultiset, N: int) -> SeriesTruncation:
    """p_A(n) for 0 <= n <= N."""
    return count_colored_series(A, 1, N)


def enumerate_colored_brute(A: IntegerMultiset, k: int, n_max: int) -> SeriesTruncation:
    """Count k-colored A-partitions of each n <= n_max by listing them.

    A part species is a triple (part, copy, color); a partition is a multiset
    of species, generated once each as a non-increasing sequence of species
    indices.
    """
    if n_max > BRUTE_LIMIT:
        raise ValueError(f"brute-force enumeration is limited to n_max <= {BRUTE_LIMIT}")
    if k < 1 or n_max < 0:
        raise ValueError("need k >= 1 and n_max >= 0")
    species = []
    if n_max >= 1:
        for a, mu in truncate(A, n_max).items:
            species.extend(a for _copy in range(mu) for _color in range(k))
    counts = [0] * (n_max + 1)

    def extend(total: int, top: int) -> None:
        counts[total] += 1
        for i in range(top, -1, -1):
            nxt = total + species[i]
            if nxt <= n_max:
                extend(nxt, i)

    extend(0, len(species) - 1)
    return SeriesTruncation(tuple(counts), n_max)

"""Multisets of positive integers given by a multiplicity function.

Finite multisets are stored explicitly as sorted ``(element, multiplicity)``
pairs.  Infinite ones (all naturals, the plane-partition multiset, k-regular
parts, m-fold copies) are kept as rules and only materialized through
:func:`truncate`.

Textual form::

    spec := list | "naturals" | "plane" | "kregular:" INT | "mcolor:" INT ":" spec
    list := INT ("," INT)*

Repetition in ``list`` encodes multiplicity, e.g. ``"1,2,2,3"``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "IntegerMultiset",
    "MultisetSpecError",
    "DomainError",
    "explicit",
    "naturals",
    "plane",
    "kregular",
    "mcolor",
    "multiplicity",
    "sigma_A",
    "truncate",
    "parse_multiset_spec",
]

EXPLICIT = "explicit"
NATURALS = "naturals"
PLANE = "plane"
KREGULAR = "kregular"
MCOLOR = "mcolor"


class MultisetSpecError(ValueError):
    """Raised for malformed multiset specs; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerMultiset:
    kind: str
    items: tuple[tuple[int, int], ...] = ()
    k: int = 0
    m: int = 0
    base: IntegerMultiset | None = None

    def __post_init__(self):
        if self.kind == EXPLICIT:
            prev = 0
            for a, mu in self.items:
                if a < 1 or mu < 1:
                    raise ValueError(f"invalid pair ({a}, {mu}) in explicit multiset")
                if a <= prev:
                    raise ValueError("explicit items must be strictly increasing")
                prev = a
        elif self.kind == KREGULAR:
            if self.k < 2:
                raise ValueError("kregular needs k >= 2")
        elif self.kind == MCOLOR:
            if self.m < 1 or self.base is None:
                raise ValueError("mcolor needs m >= 1 and a base multiset")
        elif self.kind not in (NATURALS, PLANE):
            raise ValueError(f"unknown multiset kind {self.kind!r}")

    def multiplicity(self, a: int) -> int:
        if a < 1:
            raise ValueError("elements are positive integers")
        if self.kind == EXPLICIT:
            return dict(self.items).get(a, 0)
        if self.kind == NATURALS:
            return 1
        if self.kind == PLANE:
            return a
        if self.kind == KREGULAR:
            return 0 if a % self.k == 0 else 1
        return self.m * self.base.multiplicity(a)

    @property
    def is_finite(self) -> bool:
        if self.kind == EXPLICIT:
            return True
        if self.kind == MCOLOR:
            return self.base.is_finite
        return False

    def is_set(self) -> bool:
        """True when no element occurs more than once."""
        if self.kind == EXPLICIT:
            return all(mu == 1 for _, mu in self.items)
        if self.kind == MCOLOR:
            return self.m == 1 and self.base.is_set()
        return self.kind in (NATURALS, KREGULAR)

    def elements(self) -> list[int]:
        """Elements with repetition, ascending.  Finite multisets only."""
        if not self.is_finite:
            raise ValueError("cannot list the elements of an infinite multiset")
        return [a for a, mu in truncate(self, self.max_element()).items for _ in range(mu)]

    def max_element(self) -> int:
        if self.kind == EXPLICIT:
            return self.items[-1][0] if self.items else 0
        if self.kind == MCOLOR and self.base.is_finite:
            return self.base.max_element()
        raise ValueError("infinite multiset has no largest element")

    def spec(self) -> str:
        if self.kind == EXPLICIT:
            return ",".join(str(a) for a, mu in self.items for _ in range(mu))
        if self.kind in (NATURALS, PLANE):
            return self.kind
        if self.kind == KREGULAR:
            return f"kregular:{self.k}"
        return f"mcolor:{self.m}:{self.base.spec()}"

    def __str__(self) -> str:
        return self.spec()


def explicit(elements: Iterable[int] | dict[int, int]) -> IntegerMultiset:
    """Build an explicit multiset from an element list (with repeats) or a map."""
    counts = Counter(elements) if not isinstance(elements, dict) else dict(elements)
    items = tuple(sorted((a, mu) for a, mu in counts.items() if mu))
    return IntegerMultiset(EXPLICIT, items=items)


def naturals() -> IntegerMultiset:
    return IntegerMultiset(NATURALS)


def plane() -> IntegerMultiset:
    return IntegerMultiset(PLANE)


def kregular(k: int) -> IntegerMultiset:
    return IntegerMultiset(KREGULAR, k=k)


def mcolor(m: int, base: IntegerMultiset) -> IntegerMultiset:
    return IntegerMultiset(MCOLOR, m=m, base=base)


def multiplicity(A: IntegerMultiset, a: int) -> int:
    return A.multiplicity(a)


def sigma_A(A: IntegerMultiset, i: int, require_positive: bool = False) -> int:
    """Multiplicity-weighted divisor sum: sum of d * mu(d) over divisors d of i.

    >>> sigma_A(explicit([1, 2, 2, 3, 5, 5, 5]), 2)
    5
    """
    if i < 1:
        raise ValueError("sigma_A is defined for i >= 1")
    if require_positive and A.multiplicity(1) == 0:
        raise DomainError(f"1 does not occur in {A.spec()}")
    total = 0
    d = 1
    while d * d <= i:
        if i % d == 0:
            total += d * A.multiplicity(d)
            e = i // d
            if e != d:
                total += e * A.multiplicity(e)
        d += 1
    return total


def truncate(A: IntegerMultiset, bound: int) -> IntegerMultiset:
    """Explicit multiset of the elements a <= bound, multiplicities kept."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if A.kind == EXPLICIT:
        return IntegerMultiset(EXPLICIT, items=tuple(p for p in A.items if p[0] <= bound))
    items = tuple((a, mu) for a in range(1, bound + 1) if (mu := A.multiplicity(a)))
    return IntegerMultiset(EXPLICIT, items=items)


def _read_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit() and text[end].isascii():
        end += 1
    if end == pos:
        found = repr(text[pos]) if pos < len(text) else "end of input"
        raise MultisetSpecError(f"expected an integer, found {found}", pos)
    return int(text[pos:end]), end


def _parse(text: str, pos: int) -> IntegerMultiset:
    for word in (NATURALS, PLANE):
        if text.startswith(word, pos):
            if pos + len(word) != len(text):
                raise MultisetSpecError("unexpected trailing input", pos + len(word))
            return IntegerMultiset(word)
    if text.startswith("kregular:", pos):
        start = pos + len("kregular:")
        k, end = _read_int(text, start)
        if end != len(text):
            raise MultisetSpecError("unexpected trailing input", end)
        if k < 2:
            raise MultisetSpecError("kregular needs k >= 2", start)
        return kregular(k)
    if text.startswith("mcolor:", pos):
        start = pos + len("mcolor:")
        m, end = _read_int(text, start)
        if m < 1:
            raise MultisetSpecError("mcolor needs m >= 1", start)
        if end >= len(text) or text[end] != ":":
            raise MultisetSpecError("expected ':' after mcolor count", end)
        return mcolor(m, _parse(text, end + 1))

    elements = []
    while True:
        start = pos
        value, pos = _read_int(text, pos)
        if value < 1:
            raise MultisetSpecError("elements must be positive integers", start)
        elements.append(value)
        if pos == len(text):
            break
        if text[pos] != ",":
            raise MultisetSpecError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return explicit(elements)


def parse_multiset_spec(text: str) -> IntegerMultiset:
    """Parse a multiset spec such as ``"1,2,2,3"``, ``"plane"`` or ``"mcolor:3:naturals"``."""
    return _parse(text, 0)

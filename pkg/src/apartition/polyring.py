"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "RatPolynomial",
    "parse_rational",
    "format_rational",
    "add",
    "mul",
    "scale",
    "shift_mul_x",
    "evaluate",
    "formal_derivative",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer.  Decimal and exponent forms are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    for part in (num, den) if sep else (num,):
        body = part[1:] if part[:1] in "+-" else part
        if not body.isdigit():
            raise ValueError(f"not a rational of the form p/q: {text!r}")
    if sep and den[:1] in "+-":
        raise ValueError(f"denominator must be unsigned: {text!r}")
    if sep and int(den) == 0:
        raise ValueError("zero denominator")
    return Fraction(int(num), int(den) if sep else 1)


def format_rational(c: Rational) -> str:
    return f"{c.numerator}/{c.denominator}"


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RatPolynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RatPolynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> RatPolynomial:
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def constant(cls, c) -> RatPolynomial:
        return cls([c])

    @classmethod
    def x(cls) -> RatPolynomial:
        return cls([0, 1])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> RatPolynomial:
        return cls(parse_rational(s) for s in items)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: RatPolynomial) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            other = RatPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> RatPolynomial:
        return RatPolynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RatPolynomial) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            other = RatPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPolynomial._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPolynomial._raw(_trim(out))

    __rmul__ = __mul__

    def scale(self, c) -> RatPolynomial:
        c = Fraction(c)
        if c == 0:
            return RatPolynomial._raw(())
        return RatPolynomial._raw(tuple(a * c for a in self.coeffs))

    def shift_mul_x(self) -> RatPolynomial:
        if not self.coeffs:
            return self
        return RatPolynomial._raw((Fraction(0),) + self.coeffs)

    def __call__(self, x0) -> Fraction:
        """Horner evaluation.  Exact for int/Fraction arguments."""
        acc = Fraction(0) if not isinstance(x0, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return Fraction(acc)

    def derivative(self) -> RatPolynomial:
        return RatPolynomial._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def substitute_scaled(self, m) -> RatPolynomial:
        """p(m*x), by scaling coefficient i with m**i."""
        m = Fraction(m)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= m
        return RatPolynomial(out)

    def common_denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def integer_coefficients(self) -> tuple[int, list[int]]:
        """``(d, ints)`` with ``self == RatPolynomial(ints) / d`` and d the least such."""
        d = self.common_denominator()
        return d, [int(c * d) for c in self.coeffs]

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial([{', '.join(map(str, self.coeffs))}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        d, ints = self.integer_coefficients()
        terms = []
        for i in range(len(ints) - 1, -1, -1):
            c = ints[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            terms.append((sign, body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        if d == 1:
            return text
        return f"1/{d}*({text})"


def add(p: RatPolynomial, q: RatPolynomial) -> RatPolynomial:
    return p + q


def mul(p: RatPolynomial, q: RatPolynomial) -> RatPolynomial:
    return p * q


def scale(p: RatPolynomial, c) -> RatPolynomial:
    return p.scale(c)


def shift_mul_x(p: RatPolynomial) -> RatPolynomial:
    return p.shift_mul_x()


def evaluate(p: RatPolynomial, x0) -> Fraction:
    return p(x0)


def formal_derivative(p: RatPolynomial) -> RatPolynomial:
    return p.derivative()

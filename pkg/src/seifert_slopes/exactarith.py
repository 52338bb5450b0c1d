"""Exact rationals extended by the infinite slope, continued fractions and
integer determinants.

Continued fractions are written in the order used throughout the package:

    F([a_1, ..., a_k]) = a_k + 1/(a_{k-1} + 1/( ... + 1/a_1))

so the *last* term carries the integer part.  The empty word evaluates to
1/0, which makes F([a]) = a and F([0, 0]) = 1/0 fall out of one recursion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

ContinuedFraction = tuple[int, ...]


class _Infinite:
    """Sentinel for an infinite group order (|H1| when the presentation
    matrix is singular)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()
Order = Union[int, _Infinite]


@dataclass(frozen=True)
class ExtendedRational:
    """A reduced fraction p/q, or the infinite value 1/0.

    The constructor normalizes, so ``ExtendedRational(-3, -11)`` is 3/11 and
    ``ExtendedRational(5, 0)`` is the infinite slope.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        p, q = int(self.numerator), int(self.denominator)
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        if q == 0:
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @classmethod
    def coerce(cls, value) -> "ExtendedRational":
        if isinstance(value, ExtendedRational):
            return value
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        raise TypeError(f"cannot interpret {value!r} as an extended rational")

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("1/0 has no finite value")
        return Fraction(self.numerator, self.denominator)

    def reciprocal(self) -> "ExtendedRational":
        if self.numerator == 0:
            return INF
        if self.is_infinite:
            return ZERO
        return ExtendedRational(self.denominator, self.numerator)

    def floor(self) -> int:
        if self.is_infinite:
            raise ValueError("1/0 has no integer part")
        return self.numerator // self.denominator

    def __neg__(self):
        if self.is_infinite:
            return self
        return ExtendedRational(-self.numerator, self.denominator)

    def __add__(self, other):
        try:
            other = ExtendedRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            raise ValueError("1/0 + 1/0 is undefined")
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtendedRational.coerce(self.as_fraction() + other.as_fraction())

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = ExtendedRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        if self.is_infinite:
            if other == 0:
                raise ValueError("0 * 1/0 is undefined")
            return self
        return ExtendedRational(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __lt__(self, other):
        other = ExtendedRational.coerce(other)
        return self.as_fraction() < other.as_fraction()

    def __le__(self, other):
        return self == ExtendedRational.coerce(other) or self < other

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"ExtendedRational({self})"


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)


def reduce(p: int, q: int = 1) -> ExtendedRational:
    """Reduced form of p/q; (p, 0) is 1/0 for every p != 0."""
    return ExtendedRational(p, q)


def cf_expand(r: ExtendedRational) -> ContinuedFraction:
    """Canonical continued fraction of a finite value (last term = integer part).

    Negative values are the term-wise negation of the expansion of -r.
    """
    r = ExtendedRational.coerce(r)
    if r.is_infinite:
        raise ValueError("1/0 has no finite continued fraction")
    if r.numerator < 0:
        return tuple(-a for a in cf_expand(-r))
    p, q = r.numerator, r.denominator
    terms = []
    while q:
        a, rem = divmod(p, q)
        terms.append(a)
        p, q = q, rem
    return tuple(reversed(terms))


def cf_value(cf: Sequence[int]) -> ExtendedRational:
    value = INF
    for a in cf:
        value = ExtendedRational(a) + value.reciprocal()
    return value


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def order_from_det(det: int) -> Order:
    return INFINITE if det == 0 else abs(det)

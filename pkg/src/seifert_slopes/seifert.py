"""Seifert fibered spaces over S^2 and lens spaces.

A manifold is stored as an obstruction ``b`` and fibers ``(alpha, beta)``.
Its surgery picture is an unknot with coefficient ``-b`` carrying one
meridian per fiber with coefficient ``alpha/beta``, so that slam-dunking
every meridian leaves ``-(b + sum beta/alpha)``, the Euler number.

Lens spaces follow the convention that -p/q surgery on the unknot is
L(p, q).  L(0, 1) is S^2 x S^1 and L(1, 0) is S^3.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Optional

from .exactarith import INF, ExtendedRational, Order, integer_det, order_from_det

Fiber = tuple[int, int]


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 0:
            p, q = -p, -q
        if p == 0:
            if abs(q) != 1:
                raise ValueError("L(0, q) requires q = +-1")
            q = 1
        elif p == 1:
            q = 0
        else:
            if gcd(p, q) != 1:
                raise ValueError(f"gcd({p}, {q}) != 1")
            q %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def mirror(self) -> "LensSpace":
        return LensSpace(self.p, -self.q)

    def is_homeomorphic(self, other: "LensSpace", oriented: bool = False) -> bool:
        """Classification of lens spaces: q' = q^(+-1) mod p preserving
        orientation, q' = +-q^(+-1) allowing reversal."""
        if self.p != other.p:
            return False
        p = self.p
        if p <= 1:
            return True
        inv = pow(self.q, -1, p)
        candidates = {self.q, inv}
        if not oriented:
            candidates |= {(-c) % p for c in candidates}
        return other.q in candidates

    def __str__(self):
        return f"L({self.p},{self.q})"


def _lens_of_value(v: ExtendedRational) -> LensSpace:
    if v.is_infinite:
        return LensSpace(1, 0)
    return LensSpace(v.numerator, -v.denominator)


def _chain_value(chain: list[ExtendedRational]) -> ExtendedRational:
    """Slam-dunk a linear chain of unknots from its right end.

    Every entry but the last must be integral.
    """
    value = chain[-1]
    for c in reversed(chain[:-1]):
        assert c.is_integer
        value = c - value.reciprocal()
    return value


def _integral_expansion(r: ExtendedRational) -> list[ExtendedRational]:
    """Integral chain [a_1, a_2, ...] with r = a_1 - 1/(a_2 - ...).

    Undoes slam dunks: an unknot with coefficient r becomes one with
    coefficient ceil(r) plus a meridian carrying 1/(ceil(r) - r).
    """
    out = []
    while not r.is_infinite:
        a = -((-r.numerator) // r.denominator)
        out.append(ExtendedRational(a))
        r = (ExtendedRational(a) - r).reciprocal()
    return out or [INF]


@dataclass(frozen=True)
class SeifertManifold:
    obstruction: int = 0
    fibers: tuple[Fiber, ...] = ()

    def __post_init__(self):
        fibers = []
        for alpha, beta in self.fibers:
            alpha, beta = int(alpha), int(beta)
            if alpha == 0:
                raise ValueError("fiber index 0 is not allowed")
            if alpha < 0:
                alpha, beta = -alpha, -beta
            if gcd(alpha, beta) != 1:
                raise ValueError(f"fiber ({alpha}, {beta}) is not coprime")
            fibers.append((alpha, beta))
        object.__setattr__(self, "obstruction", int(self.obstruction))
        object.__setattr__(self, "fibers", tuple(fibers))

    @classmethod
    def from_fractions(cls, b: int, fractions) -> "SeifertManifold":
        """Build SFS(b; beta_1/alpha_1, ...) from fiber fractions."""
        fibers = []
        for r in fractions:
            r = ExtendedRational.coerce(r)
            if r.is_infinite:
                raise ValueError("a fiber fraction must be finite")
            fibers.append((r.denominator, r.numerator))
        return cls(b, tuple(fibers))

    def normalize(self) -> "SeifertManifold":
        b = self.obstruction
        fibers = []
        for alpha, beta in self.fibers:
            quotient, rest = divmod(beta, alpha)
            b += quotient
            if alpha > 1:
                fibers.append((alpha, rest))
        return SeifertManifold(b, tuple(fibers))

    def euler_number(self) -> ExtendedRational:
        total = self.obstruction + sum(Fraction(beta, alpha) for alpha, beta in self.fibers)
        return ExtendedRational.coerce(-Fraction(total))

    def presentation_matrix(self) -> list[list[int]]:
        """Relations alpha_i c_i + beta_i h = 0 and sum c_i - b h = 0."""
        k = len(self.fibers)
        rows = []
        for i, (alpha, beta) in enumerate(self.fibers):
            row = [0] * (k + 1)
            row[i], row[k] = alpha, beta
            rows.append(row)
        rows.append([1] * k + [-self.obstruction])
        return rows

    def h1_order(self) -> Order:
        return order_from_det(integer_det(self.presentation_matrix()))

    def h1_order_closed_form(self) -> Order:
        alphas = prod(alpha for alpha, _ in self.fibers)
        total = self.obstruction + sum(Fraction(beta, alpha) for alpha, beta in self.fibers)
        value = alphas * total
        assert value.denominator == 1
        return order_from_det(value.numerator)

    def exceptional_indices(self) -> tuple[int, ...]:
        return tuple(sorted(alpha for alpha, _ in self.normalize().fibers))

    def small_seifert_type(self) -> Optional[tuple[int, int, int]]:
        indices = self.exceptional_indices()
        return indices if len(indices) == 3 else None

    def as_lens(self) -> Optional[LensSpace]:
        s = self.normalize()
        if len(s.fibers) > 2:
            return None
        central = ExtendedRational(-s.obstruction)
        if not s.fibers:
            return _lens_of_value(central)
        meridians = [ExtendedRational(alpha, beta) for alpha, beta in s.fibers]
        *rest, last = meridians
        # the last meridian slam-dunks straight into the central unknot;
        # a remaining one is unrolled into an integral chain first
        chain = [central, last]
        if rest:
            chain = list(reversed(_integral_expansion(rest[0]))) + chain
        return _lens_of_value(_chain_value(chain))

    def mirror(self) -> "SeifertManifold":
        return SeifertManifold(
            -self.obstruction, tuple((alpha, -beta) for alpha, beta in self.fibers)
        )

    def _key(self):
        s = self.normalize()
        return s.obstruction, Counter(s.fibers)

    def same_up_to_homeo(self, other: "SeifertManifold", oriented: bool = True) -> bool:
        lens_a, lens_b = self.as_lens(), other.as_lens()
        if lens_a is not None or lens_b is not None:
            if lens_a is None or lens_b is None:
                return False
            return lens_a.is_homeomorphic(lens_b, oriented=oriented)
        if self._key() == other._key():
            return True
        return not oriented and self._key() == other.mirror()._key()

    def __str__(self):
        fibers = ", ".join(f"{beta}/{alpha}" for alpha, beta in self.fibers)
        return f"SFS({self.obstruction}; {fibers})" if fibers else f"SFS({self.obstruction})"


def same_up_to_homeo(a: SeifertManifold, b: SeifertManifold, oriented: bool = True) -> bool:
    return a.same_up_to_homeo(b, oriented=oriented)

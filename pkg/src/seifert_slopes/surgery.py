"""Framed-link surgery descriptions and their first homology.

A component with coefficient 1/0 is an unfilled (trivially filled)
component and can be deleted.  Twisting conventions: 1/m surgery on an
unknotted circle equals a (-m)-twist of the strands passing through it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactarith import ExtendedRational, Order, integer_det, order_from_det


@dataclass(frozen=True)
class FramedLink:
    labels: tuple[str, ...]
    coefficients: tuple[ExtendedRational, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        coeffs = tuple(ExtendedRational.coerce(c) for c in self.coefficients)
        linking = tuple(tuple(int(x) for x in row) for row in self.linking)
        n = len(labels)
        if len(coeffs) != n:
            raise ValueError("one coefficient per component is required")
        if len(set(labels)) != n:
            raise ValueError("component labels must be distinct")
        if len(linking) != n or any(len(row) != n for row in linking):
            raise ValueError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if linking[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(i):
                if linking[i][j] != linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "linking", linking)

    @classmethod
    def from_dict(cls, data: dict) -> "FramedLink":
        from .syntax import parse_fraction

        comps = data["components"]
        labels = [c["label"] for c in comps]
        coeffs = [
            parse_fraction(c["coeff"]) if isinstance(c["coeff"], str)
            else ExtendedRational.coerce(c["coeff"])
            for c in comps
        ]
        linking = data.get("linking") or [[0] * len(comps) for _ in comps]
        return cls(tuple(labels), tuple(coeffs), tuple(map(tuple, linking)))

    def to_dict(self) -> dict:
        return {
            "components": [
                {"label": lab, "coeff": str(c)}
                for lab, c in zip(self.labels, self.coefficients)
            ],
            "linking": [list(row) for row in self.linking],
        }

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no component labelled {label!r}") from None

    def coefficient(self, label: str) -> ExtendedRational:
        return self.coefficients[self.index(label)]

    def reorder(self, order) -> "FramedLink":
        order = list(order)
        return FramedLink(
            tuple(self.labels[i] for i in order),
            tuple(self.coefficients[i] for i in order),
            tuple(tuple(self.linking[i][j] for j in order) for i in order),
        )


def two_component(label_a, coeff_a, label_b, coeff_b, lk: int) -> FramedLink:
    return FramedLink(
        (label_a, label_b), (coeff_a, coeff_b), ((0, lk), (lk, 0))
    )


def twist_slope(r, m: int, w: int) -> ExtendedRational:
    """Slope on the untwisted knot realizing (twisted knot; r), given -1/m
    surgery on a circle that the knot links w times."""
    r = ExtendedRational.coerce(r)
    if r.is_infinite:
        raise ValueError("twist_slope needs a finite slope")
    return r - m * w * w


def linking_presentation(link: FramedLink) -> list[list[int]]:
    """Rows p_i x_i + sum_j q_i lk_ij x_j for coefficients p_i/q_i."""
    rows = []
    for i, c in enumerate(link.coefficients):
        if c.is_infinite:
            raise ValueError(
                f"component {link.labels[i]!r} is unfilled; delete it first"
            )
        p, q = c.numerator, c.denominator
        rows.append([p if j == i else q * lk for j, lk in enumerate(link.linking[i])])
    return rows


def h1_from_link(link: FramedLink) -> Order:
    return order_from_det(integer_det(linking_presentation(link)))


def rolfsen_twist(link: FramedLink, u: str, t: int) -> FramedLink:
    """Apply a t-fold Rolfsen twist along the (caller-asserted unknotted)
    component ``u``."""
    k = link.index(u)
    cu = link.coefficients[k]
    if t == 0:
        return link
    if cu.is_infinite:
        raise ValueError(f"cannot twist along unfilled component {u!r}")
    lk = link.linking
    coeffs = []
    for i, c in enumerate(link.coefficients):
        if i == k:
            coeffs.append(ExtendedRational(cu.numerator, cu.denominator + t * cu.numerator))
        else:
            coeffs.append(c + t * lk[i][k] ** 2)
    n = len(link.labels)
    linking = tuple(
        tuple(
            0 if i == j else lk[i][j] + (t * lk[i][k] * lk[j][k] if k not in (i, j) else 0)
            for j in range(n)
        )
        for i in range(n)
    )
    return FramedLink(link.labels, tuple(coeffs), linking)


def delete_unfilled(link: FramedLink) -> FramedLink:
    keep = [i for i, c in enumerate(link.coefficients) if not c.is_infinite]
    return link.reorder(keep)

"""Montesinos links M(beta_1/alpha_1, ..., beta_k/alpha_k; e) and their
double branched covers."""
from __future__ import annotations

from dataclasses import dataclass

from .exactarith import ExtendedRational
from .seifert import SeifertManifold

# Sign relating the Montesinos twist to the Seifert obstruction of the cover.
# Pinned by the lens-space degeneration of the surgery family (family.py).
COVER_ORIENTATION = 1


@dataclass(frozen=True)
class MontesinosLink:
    fractions: tuple[ExtendedRational, ...] = ()
    twist: int = 0

    def __post_init__(self):
        fractions = tuple(ExtendedRational.coerce(r) for r in self.fractions)
        if any(r.is_infinite for r in fractions):
            raise ValueError("Montesinos tangles must have finite fractions")
        object.__setattr__(self, "fractions", fractions)
        object.__setattr__(self, "twist", int(self.twist))

    def normalize(self) -> "MontesinosLink":
        """Move integer parts into the twist so every fraction lies in (0, 1)."""
        twist = self.twist
        kept = []
        for r in self.fractions:
            whole = r.floor()
            twist += whole
            rest = r - whole
            if rest.numerator != 0:
                kept.append(rest)
        return MontesinosLink(tuple(kept), twist)

    def mirror(self) -> "MontesinosLink":
        return MontesinosLink(tuple(-r for r in self.fractions), -self.twist)

    def double_branched_cover(self) -> SeifertManifold:
        s = SeifertManifold.from_fractions(self.twist, self.fractions)
        return s if COVER_ORIENTATION > 0 else s.mirror()

    def __str__(self):
        body = ",".join(str(r) for r in self.fractions)
        return f"M({body};{self.twist})" if self.twist else f"M({body})"


def make(fractions) -> MontesinosLink:
    return MontesinosLink(tuple(fractions), 0)


def _dihedral_images(seq):
    n = len(seq)
    for s in (seq, seq[::-1]):
        for i in range(max(n, 1)):
            yield s[i:] + s[:i]


def _same_oriented(a: MontesinosLink, b: MontesinosLink) -> bool:
    a, b = a.normalize(), b.normalize()
    if len(a.fractions) <= 2 or len(b.fractions) <= 2:
        # two-bridge links are classified by their double branched covers
        lens_a = a.double_branched_cover().as_lens()
        lens_b = b.double_branched_cover().as_lens()
        if lens_a is None or lens_b is None:
            return False
        return lens_a.is_homeomorphic(lens_b, oriented=True)
    if a.twist != b.twist or len(a.fractions) != len(b.fractions):
        return False
    return any(img == b.fractions for img in _dihedral_images(a.fractions))


def equivalent(a: MontesinosLink, b: MontesinosLink, oriented: bool = True) -> bool:
    """Equality of normal forms up to dihedral reordering of the tangles
    (and up to mirror image when ``oriented`` is false)."""
    if _same_oriented(a, b):
        return True
    return not oriented and _same_oriented(a, b.mirror())


def double_branched_cover(m: MontesinosLink) -> SeifertManifold:
    return m.double_branched_cover()

"""Rational tangles carried by their Conway fraction, and untangle surgery
on slotted link presentations."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .exactarith import ContinuedFraction, ExtendedRational, INF, cf_expand, cf_value

# word of the 1/0-untangle: F([0, 0]) = 0 + 1/0
_INFINITE_WORD = (0, 0)


@dataclass(frozen=True)
class RationalTangle:
    fraction: ExtendedRational
    word: ContinuedFraction

    def __post_init__(self):
        if cf_value(self.word) != self.fraction:
            raise ValueError(f"word {list(self.word)} does not evaluate to {self.fraction}")

    @property
    def is_untangle(self) -> bool:
        return self.fraction.is_infinite

    def __str__(self):
        return str(self.fraction)


def tangle_from_fraction(r) -> RationalTangle:
    r = ExtendedRational.coerce(r)
    word = _INFINITE_WORD if r.is_infinite else cf_expand(r)
    return RationalTangle(r, word)


def mirror(t: RationalTangle) -> RationalTangle:
    return RationalTangle(-t.fraction, tuple(-a for a in t.word))


UNTANGLE = tangle_from_fraction(INF)


class SurgeryError(ValueError):
    pass


@dataclass(frozen=True)
class SlottedPresentation:
    """Cyclically ordered tangle slots; ``marks`` are the slots still
    awaiting an untangle surgery."""

    slots: tuple[RationalTangle, ...]
    marks: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.slots:
            raise ValueError("a presentation needs at least one slot")
        object.__setattr__(self, "slots", tuple(self.slots))
        object.__setattr__(self, "marks", frozenset(self.marks))
        for i in self.marks:
            if not 0 <= i < len(self.slots):
                raise ValueError(f"mark {i} out of range")
            if not self.slots[i].is_untangle:
                raise ValueError(f"marked slot {i} must hold the 1/0-untangle")

    @classmethod
    def from_fractions(cls, fractions, marks=()):
        return cls(tuple(tangle_from_fraction(r) for r in fractions), frozenset(marks))

    @property
    def fractions(self) -> tuple[ExtendedRational, ...]:
        return tuple(t.fraction for t in self.slots)

    def __str__(self):
        return ",".join(
            f"{t}{'*' if i in self.marks else ''}" for i, t in enumerate(self.slots)
        )


def untangle_surgery(p: SlottedPresentation, slot: int, r) -> SlottedPresentation:
    """Replace the 1/0-untangle in a marked slot by the r-tangle."""
    if slot not in p.marks:
        raise SurgeryError(f"slot {slot} is not a pending surgery site")
    slots = list(p.slots)
    slots[slot] = tangle_from_fraction(r)
    return replace(p, slots=tuple(slots), marks=p.marks - {slot})


def nontrivial_slot_count(p: SlottedPresentation) -> int:
    return sum(1 for r in p.fractions if not (r.is_infinite or r.is_integer))

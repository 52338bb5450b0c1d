"""Known results about which slopes are lens, Seifert fibered, reducible or
toroidal slopes for hyperbolic knots, loaded from a versioned facts file."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from .exactarith import ExtendedRational
from .syntax import parse_fraction

SETS = ("L", "S", "R", "T")
DIRECTIONS = ("member", "non-member", "subset", "proper-subset", "superset")
STATUSES = ("theorem", "conjecture", "suggested")

# infinite slope classes, most specific first
_CLASS_RANK = {"empty": 0, "|n|>=18": 1, "Z": 2, "Z/2": 3}


class SlopeClass:
    def __init__(self, text: str):
        self.text = text
        if text in _CLASS_RANK:
            self.slopes = None
        else:
            self.slopes = frozenset(parse_fraction(s) for s in text.split(","))

    def __contains__(self, r: ExtendedRational) -> bool:
        if self.slopes is not None:
            return r in self.slopes
        if r.is_infinite or self.text == "empty":
            return False
        if self.text == "Z":
            return r.is_integer
        if self.text == "Z/2":
            return r.denominator in (1, 2)
        return r.is_integer and abs(r.numerator) >= 18

    @property
    def specificity(self) -> tuple[int, int]:
        if self.slopes is not None:
            return (0, len(self.slopes))
        return (1, _CLASS_RANK[self.text])

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class SlopeFact:
    set_name: str
    slope: SlopeClass
    direction: str
    status: str
    citation: str
    witness: Optional[str]
    line: str

    def verdict(self, r: ExtendedRational) -> Optional[str]:
        """'member' / 'non-member' if this fact decides r, else None."""
        inside = r in self.slope
        if self.direction in ("member", "superset") and inside:
            return "member"
        if self.direction == "non-member" and inside:
            return "non-member"
        if self.direction in ("subset", "proper-subset") and not inside:
            return "non-member"
        return None

    def to_dict(self) -> dict:
        return {
            "set": self.set_name,
            "slope": str(self.slope),
            "direction": self.direction,
            "status": self.status,
            "citation": self.citation,
            "witness": self.witness,
        }


def parse_fact(line: str) -> SlopeFact:
    fields = [f.strip() for f in line.split(" | ")]
    if len(fields) != 6:
        raise ValueError(f"expected 6 fields, got {len(fields)}: {line!r}")
    set_name, slope, direction, status, citation, witness = fields
    if set_name not in SETS:
        raise ValueError(f"unknown set {set_name!r}")
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    if status not in STATUSES:
        raise ValueError(f"unknown status {status!r}")
    if status == "theorem" and not citation:
        raise ValueError("a theorem needs a citation")
    return SlopeFact(
        set_name, SlopeClass(slope), direction, status, citation,
        None if witness == "-" else witness, line,
    )


def load_facts(text: str) -> tuple[SlopeFact, ...]:
    facts = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            facts.append(parse_fact(line))
    return tuple(facts)


def facts_text() -> str:
    return resources.files("seifert_slopes").joinpath("data/slope_facts.txt").read_text()


@lru_cache(maxsize=None)
def default_facts() -> tuple[SlopeFact, ...]:
    return load_facts(facts_text())


_STATUS_RANK = {s: i for i, s in enumerate(STATUSES)}


def query(set_name: str, slope, facts=None) -> list[SlopeFact]:
    """Facts deciding whether ``slope`` lies in ``set_name``, most specific first."""
    if set_name not in SETS:
        raise ValueError(f"unknown set {set_name!r}")
    slope = ExtendedRational.coerce(slope)
    facts = default_facts() if facts is None else facts
    hits = [f for f in facts if f.set_name == set_name and f.verdict(slope)]
    return sorted(hits, key=lambda f: (f.slope.specificity, _STATUS_RANK[f.status]))


def containments(facts=None) -> list[SlopeFact]:
    facts = default_facts() if facts is None else facts
    return [f for f in facts if f.direction in ("subset", "proper-subset", "superset")]


def verdict(set_name: str, slope, facts=None) -> Optional[str]:
    """Membership established at theorem status, if any."""
    for fact in query(set_name, slope, facts):
        if fact.status == "theorem":
            return fact.verdict(ExtendedRational.coerce(slope))
    return None

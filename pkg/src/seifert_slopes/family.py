"""The twisted knot family K_n and its integral Seifert fibered surgeries.

K_n is obtained from a fixed knot k by a (n-4)-twist along an unknot c
with lk(k, c) = 1.  Under the Montesinos trick (K_n; n) is the double
branched cover of M(2/5, -2/3, (n-4)/(4n-15)); the core of the twisting
circle is the exceptional fiber of index |4n-15|.  For n in {3, 4, 5} the
"primed" knot K'_n is the mirror image of K_{-n}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactarith import INFINITE, ExtendedRational, Order
from .montesinos import MontesinosLink, make
from .seifert import LensSpace, SeifertManifold
from .surgery import (
    FramedLink,
    delete_unfilled,
    h1_from_link,
    rolfsen_twist,
    twist_slope,
    two_component,
)
from .tangle import SlottedPresentation, untangle_surgery

STANDARD = "standard"
PRIMED = "primed"
PRIMED_RANGE = (3, 4, 5)

# indices of the fibers coming from the two auxiliary circles t_1, t_2
AUXILIARY_FIBER_INDICES = {"t1": 5, "t2": 3}

HYPERBOLICITY_NOTE = (
    "not computed: K_n is hyperbolic for n outside {3, 4, 5}; "
    "the primed knots are mirror images of K_-3, K_-4, K_-5"
)


class VariantError(ValueError):
    pass


def _check_variant(n: int, variant: str):
    if variant == STANDARD:
        return
    if variant != PRIMED:
        raise VariantError(f"unknown variant {variant!r}")
    if n not in PRIMED_RANGE:
        raise VariantError(f"the primed variant exists only for n in {PRIMED_RANGE}, not {n}")


def montesinos_of(n: int) -> MontesinosLink:
    return make(
        (ExtendedRational(2, 5), ExtendedRational(-2, 3), ExtendedRational(n - 4, 4 * n - 15))
    )


def branch_presentation(n: int) -> tuple[SlottedPresentation, SlottedPresentation]:
    """The branch knot with its four untangle-surgery sites (t_1, t_2, c, k),
    and the link obtained by performing the surgeries.

    Only the surgery coefficients are modelled; the arrangement of the
    slots carries no isotopy information.
    """
    coefficients = (
        ExtendedRational(-1, 2),
        ExtendedRational(-1),
        ExtendedRational(3 * n - 11, -n + 4),
        ExtendedRational(1),
    )
    before = SlottedPresentation.from_fractions([ExtendedRational(1, 0)] * 4, range(4))
    after = before
    for slot, r in enumerate(coefficients):
        after = untangle_surgery(after, slot, r)
    return before, after


def twist_count(n: int, variant: str = STANDARD) -> int:
    """Full twists m along the circle, so the circle carries -1/m."""
    _check_variant(n, variant)
    return n - 4 if variant == STANDARD else n + 4


def surgery_description(n: int, variant: str = STANDARD) -> FramedLink:
    """Two-component description {k: slope, c: -1/m} of (K_n; n)."""
    m = twist_count(n, variant)
    lk = 1
    k_slope = twist_slope(n, m, lk)
    return two_component("k", k_slope, "c", ExtendedRational(-1, m), lk)


def surgered_manifold(n: int, variant: str = STANDARD) -> SeifertManifold:
    _check_variant(n, variant)
    if variant == PRIMED:
        return surgered_manifold(-n, STANDARD).mirror()
    return montesinos_of(n).double_branched_cover()


def companion_fiber_index(n: int, variant: str = STANDARD) -> int:
    _check_variant(n, variant)
    return abs(4 * n - 15) if variant == STANDARD else abs(4 * n + 15)


def fiber_assignment(n: int, variant: str = STANDARD) -> dict[str, int]:
    return {**AUXILIARY_FIBER_INDICES, "c": companion_fiber_index(n, variant)}


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "n/a"
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _check(name, ok, detail=""):
    return Check(name, "pass" if ok else "fail", detail)


@dataclass
class FamilyReport:
    n: int
    variant: str
    montesinos: MontesinosLink
    manifold: SeifertManifold
    lens: Optional[LensSpace]
    type_triple: Optional[tuple[int, int, int]]
    h1: Order
    companion_fiber_index: int
    checks: list[Check] = field(default_factory=list)
    hyperbolicity: str = HYPERBOLICITY_NOTE

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "montesinos": str(self.montesinos),
            "manifold": str(self.manifold),
            "normal_form": str(self.manifold.normalize()),
            "euler_number": str(self.manifold.euler_number()),
            "lens": str(self.lens) if self.lens else None,
            "type_triple": list(self.type_triple) if self.type_triple else None,
            "h1": self.h1 if isinstance(self.h1, int) else str(self.h1),
            "companion_fiber_index": self.companion_fiber_index,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks
            ],
            "hyperbolicity": self.hyperbolicity,
            "ok": self.ok,
        }


def _expected_h1(n: int) -> Order:
    return INFINITE if n == 0 else abs(n)


def _homology_check(n, variant, manifold) -> Check:
    expected = _expected_h1(n)
    h1 = manifold.h1_order()
    link = surgery_description(n, variant)
    via_link = h1_from_link(delete_unfilled(link))
    twisted = delete_unfilled(rolfsen_twist(link, "c", twist_count(n, variant)))
    via_twist = h1_from_link(twisted)
    ok = (
        h1 == expected == via_link == via_twist
        and twisted.coefficients == (ExtendedRational(n),)
    )
    return _check(
        "homology",
        ok,
        f"h1={h1}, expected={expected}, linking matrix={via_link}, after twist={via_twist}",
    )


def _type_check(n, variant, manifold) -> Check:
    if variant == STANDARD and n == 4:
        return Check("seifert_type", "n/a", "lens space degeneration")
    expected = tuple(sorted((3, 5, companion_fiber_index(n, variant))))
    got = manifold.small_seifert_type()
    return _check("seifert_type", got == expected, f"type={got}, expected={expected}")


def _maximality_check(n, variant, manifold) -> Check:
    if variant == STANDARD and n in PRIMED_RANGE:
        return Check("companion_maximal", "n/a", "companion index not above 5")
    index = companion_fiber_index(n, variant)
    indices = manifold.exceptional_indices()
    ok = index > max(AUXILIARY_FIBER_INDICES.values()) and indices.count(index) == 1 \
        and index == max(indices)
    return _check("companion_maximal", ok, f"index={index}, indices={list(indices)}")


def _lens_check(n, variant, manifold) -> Check:
    if not (variant == STANDARD and n == 4):
        return Check("lens_degeneration", "n/a")
    lens = manifold.as_lens()
    ok = lens is not None and lens.is_homeomorphic(LensSpace(4, 1), oriented=False)
    return _check("lens_degeneration", ok, f"lens={lens}")


def _mirror_check(n, variant, manifold) -> Check:
    if variant == STANDARD:
        via_link = montesinos_of(n).mirror().double_branched_cover()
        ok = via_link.same_up_to_homeo(manifold.mirror(), oriented=True) \
            and manifold.mirror().mirror() == manifold
        detail = "cover of mirrored link = mirror of cover"
    else:
        via_link = montesinos_of(-n).mirror().double_branched_cover()
        ok = via_link.same_up_to_homeo(manifold, oriented=True) and \
            manifold.mirror().same_up_to_homeo(surgered_manifold(-n), oriented=True)
        detail = f"mirror of (K'_{n}; {n}) = (K_{-n}; {-n})"
    return _check("mirror_coherence", ok, detail)


def verify(n: int, variant: str = STANDARD) -> FamilyReport:
    _check_variant(n, variant)
    manifold = surgered_manifold(n, variant)
    link = montesinos_of(n) if variant == STANDARD else montesinos_of(-n).mirror()
    report = FamilyReport(
        n=n,
        variant=variant,
        montesinos=link,
        manifold=manifold,
        lens=manifold.as_lens(),
        type_triple=manifold.small_seifert_type(),
        h1=manifold.h1_order(),
        companion_fiber_index=companion_fiber_index(n, variant),
    )
    for step in (_homology_check, _type_check, _maximality_check, _lens_check, _mirror_check):
        report.checks.append(step(n, variant, manifold))
    return report


def sweep(start: int, stop: int, variant: str = STANDARD) -> list[FamilyReport]:
    """Reports for start <= n <= stop, in order of n."""
    return [verify(n, variant) for n in range(start, stop + 1)]

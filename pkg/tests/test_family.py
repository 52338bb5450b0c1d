import pytest

from seifert_slopes.exactarith import INF, INFINITE, reduce
from seifert_slopes.family import (
    PRIMED,
    STANDARD,
    VariantError,
    branch_presentation,
    companion_fiber_index,
    fiber_assignment,
    montesinos_of,
    surgered_manifold,
    surgery_description,
    sweep,
    verify,
)
from seifert_slopes.montesinos import make
from seifert_slopes.seifert import LensSpace
from seifert_slopes.surgery import delete_unfilled, h1_from_link
from seifert_slopes.tangle import nontrivial_slot_count

F = reduce
SWEEP = range(-100, 101)


def test_montesinos_of():
    assert montesinos_of(1) == make([F(2, 5), F(-2, 3), F(3, 11)])
    assert montesinos_of(4) == make([F(2, 5), F(-2, 3), F(0)])
    assert montesinos_of(0) == make([F(2, 5), F(-2, 3), F(4, 15)])
    assert montesinos_of(18).fractions[2] == F(14, 57)


def test_surgered_manifold_examples():
    m18 = surgered_manifold(18)
    assert m18.exceptional_indices() == (3, 5, 57) and m18.h1_order() == 18
    m4 = surgered_manifold(4)
    assert m4.h1_order() == 4
    assert m4.as_lens().is_homeomorphic(LensSpace(4, 1), oriented=False)
    p4 = surgered_manifold(4, PRIMED)
    assert p4.exceptional_indices() == (3, 5, 31) and p4.h1_order() == 4


def test_primed_only_for_3_4_5():
    for n in (2, 6, -3):
        with pytest.raises(VariantError):
            surgered_manifold(n, PRIMED)
        with pytest.raises(VariantError):
            companion_fiber_index(n, PRIMED)
    with pytest.raises(VariantError):
        verify(1, "other")


def test_companion_fiber_index():
    assert companion_fiber_index(1) == 11
    assert companion_fiber_index(4) == 1
    assert companion_fiber_index(5, PRIMED) == 35
    assert fiber_assignment(1) == {"t1": 5, "t2": 3, "c": 11}


def test_branch_presentation():
    before, after = branch_presentation(1)
    assert before.marks == {0, 1, 2, 3} and all(r == INF for r in before.fractions)
    assert after.marks == frozenset()
    assert after.fractions == (F(-1, 2), F(-1), F(-8, 3), F(1))
    assert nontrivial_slot_count(after) == 2
    # at n = 4 the twisting circle's coefficient is 1/0
    assert branch_presentation(4)[1].fractions[2] == INF


def test_verify_n1():
    report = verify(1)
    status = {c.name: c.status for c in report.checks}
    assert report.ok and status.pop("lens_degeneration") == "n/a"
    assert set(status.values()) == {"pass"}
    assert report.type_triple == (3, 5, 11) and report.h1 == 1


def test_verify_n0():
    report = verify(0)
    assert report.ok
    assert report.h1 is INFINITE and report.type_triple == (3, 5, 15)


def test_verify_n4_lens_branch():
    report = verify(4)
    status = {c.name: c.status for c in report.checks}
    assert status == {
        "homology": "pass",
        "seifert_type": "n/a",
        "companion_maximal": "n/a",
        "lens_degeneration": "pass",
        "mirror_coherence": "pass",
    }
    assert report.lens == LensSpace(4, 1)
    assert report.to_dict()["lens"] == "L(4,1)"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_verify_primed(n):
    report = verify(n, PRIMED)
    assert report.ok
    assert report.type_triple == tuple(sorted((3, 5, 4 * n + 15)))
    assert report.h1 == n


def test_indices_over_sweep():
    for n in SWEEP:
        if n == 4:
            continue
        assert surgered_manifold(n).exceptional_indices() == tuple(sorted((3, 5, abs(4 * n - 15))))


def test_h1_over_sweep_matches_linking_matrix():
    for n in SWEEP:
        expected = INFINITE if n == 0 else abs(n)
        assert surgered_manifold(n).h1_order() == expected
        assert h1_from_link(delete_unfilled(surgery_description(n))) == expected


def test_companion_strictly_maximal():
    for n in SWEEP:
        if n in (3, 4, 5):
            continue
        assert abs(4 * n - 15) > 5


def test_mirror_symmetry_1_to_50():
    for n in range(1, 51):
        primed_like = surgered_manifold(-n).mirror()
        assert primed_like.h1_order() == n
        assert primed_like.exceptional_indices() == tuple(sorted((3, 5, 4 * n + 15)))
        cover = montesinos_of(-n).mirror().double_branched_cover()
        assert primed_like.same_up_to_homeo(cover, oriented=True)
        assert primed_like.mirror().same_up_to_homeo(surgered_manifold(-n), oriented=True)
        # the two surgeries with slope n are different manifolds
        assert not primed_like.same_up_to_homeo(surgered_manifold(n), oriented=False) or n == 0


def test_sweep_all_ok():
    reports = sweep(-100, 100)
    assert [r.n for r in reports] == list(SWEEP)
    assert all(r.ok for r in reports)
    keys = {tuple(r.to_dict()) for r in reports}
    assert len(keys) == 1

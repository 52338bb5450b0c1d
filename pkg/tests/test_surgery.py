import random

import pytest
from hypothesis import given, settings, strategies as st

from seifert_slopes.exactarith import INF, INFINITE, reduce
from seifert_slopes.surgery import (
    FramedLink,
    delete_unfilled,
    h1_from_link,
    linking_presentation,
    rolfsen_twist,
    twist_slope,
    two_component,
)

from oracles import leibniz_det

F = reduce


def k_c(n):
    return two_component("k", F(4), "c", F(1, 4 - n), 1)


def test_framed_link_validation():
    with pytest.raises(ValueError):
        FramedLink(("a", "b"), (F(1), F(2)), ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        FramedLink(("a",), (F(1),), ((1,),))
    with pytest.raises(ValueError):
        FramedLink(("a", "b"), (F(1),), ((0, 1), (1, 0)))


@pytest.mark.parametrize("n", [-7, 0, 1, 18, 40])
def test_twist_slope_family(n):
    assert twist_slope(n, n - 4, 1) == F(4)


def test_twist_slope_examples():
    assert twist_slope(F(7, 3), 0, 5) == F(7, 3)
    assert twist_slope(5, 1, 2) == F(1)
    with pytest.raises(ValueError):
        twist_slope(INF, 1, 1)


def test_h1_examples():
    assert h1_from_link(FramedLink(("u",), (F(4),), ((0,),))) == 4
    for n in range(-20, 21):
        if n == 4:
            continue
        expected = INFINITE if n == 0 else abs(n)
        assert h1_from_link(k_c(n)) == expected
        assert abs(leibniz_det(linking_presentation(k_c(n)))) == abs(n)
    assert h1_from_link(two_component("a", F(2), "b", F(2), 1)) == 3
    # slope transport cross-check: {knot: 1, circle: -1/1, lk 2} describes 5-surgery
    assert h1_from_link(two_component("k", F(1), "c", F(-1), 2)) == 5


def test_h1_rejects_unfilled():
    with pytest.raises(ValueError):
        h1_from_link(k_c(4))
    assert h1_from_link(delete_unfilled(k_c(4))) == 4


def test_rolfsen_examples():
    for n in (-5, 0, 1, 7, 18):
        out = rolfsen_twist(k_c(n), "c", n - 4)
        assert out.coefficient("k") == F(n)
        assert out.coefficient("c") == INF
        assert delete_unfilled(out) == FramedLink(("k",), (F(n),), ((0,),))
    link = k_c(1)
    assert rolfsen_twist(link, "c", 0) == link
    out = rolfsen_twist(two_component("a", F(2), "c", F(1), 2), "c", 1)
    assert out.coefficient("a") == F(6) and out.coefficient("c") == F(1, 2)
    with pytest.raises(ValueError):
        rolfsen_twist(two_component("a", F(2), "c", INF, 1), "c", 1)


def test_delete_unfilled():
    link = two_component("K", F(7), "c", INF, 1)
    assert delete_unfilled(link).labels == ("K",)
    plain = k_c(1)
    assert delete_unfilled(plain) == plain
    empty = delete_unfilled(FramedLink(("c",), (INF,), ((0,),)))
    assert empty.labels == () and h1_from_link(empty) == 1  # S^3


def test_json_round_trip():
    link = FramedLink(("a", "b", "c"), (F(2), F(-1, 3), INF), ((0, 1, 2), (1, 0, -1), (2, -1, 0)))
    assert FramedLink.from_dict(link.to_dict()) == link


def random_link(rng, n):
    coeffs = []
    for _ in range(n):
        q = rng.randint(1, 6)
        p = rng.choice([x for x in range(-15, 16) if x or q == 1] or [1])
        coeffs.append(F(p, q))
    lk = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            lk[i][j] = lk[j][i] = rng.randint(-3, 3)
    return FramedLink(tuple(f"x{i}" for i in range(n)), tuple(coeffs), tuple(map(tuple, lk)))


def test_rolfsen_invariance_500_links():
    rng = random.Random(5)
    for _ in range(500):
        link = random_link(rng, rng.randint(2, 4))
        u = rng.choice(link.labels)
        t = rng.randint(-5, 5)
        twisted = delete_unfilled(rolfsen_twist(link, u, t))
        assert h1_from_link(twisted) == h1_from_link(link)


@settings(max_examples=500, deadline=None)
@given(st.integers(-30, 30), st.integers(-6, 6).filter(bool), st.integers(0, 4))
def test_twist_slope_consistency(p, m, w):
    link = two_component("k", twist_slope(p, m, w), "c", F(-1, m), w)
    untwisted = delete_unfilled(rolfsen_twist(link, "c", m))
    assert untwisted == FramedLink(("k",), (F(p),), ((0,),))
    assert h1_from_link(link) == h1_from_link(untwisted)


def test_h1_invariant_under_reordering():
    rng = random.Random(9)
    for _ in range(200):
        link = random_link(rng, rng.randint(1, 4))
        order = list(range(len(link.labels)))
        rng.shuffle(order)
        assert h1_from_link(link.reorder(order)) == h1_from_link(link)

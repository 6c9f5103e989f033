"""Degree-d places: counting formula vs enumeration, regularity, translation."""

import math

import pytest

from conftest import cached_curve, cached_instance
from ecseq.curves import Point, admissible_t
from ecseq.gf2 import ValidationError, make_ext
from ecseq.places import (count_places_formula, enumerate_places_deg_d,
                          find_place, frobenius_orbit, frobenius_power_sums,
                          moebius, point_frobenius, translate_place,
                          waring_power_sum)


def test_moebius_values():
    assert [moebius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_power_sums_match_extension_point_counts():
    # N over GF(q^r) = q^r + 1 - S_r, verified by actual counting
    curve, _ = cached_curve(3, 4)
    q = 8
    s = frobenius_power_sums(q, curve.t, 3)
    for r in (2, 3):
        ext = make_ext(curve.ctx, r)
        assert len(curve.points_over(ext)) == q**r + 1 - s[r - 1]
    assert s[0] == -curve.t


def test_waring_closed_form_small():
    # alpha+beta=-t, alpha*beta=q: check against exact conjugate powers
    import cmath
    q, t = 8, 3
    disc = cmath.sqrt(complex(t * t - 4 * q))
    a, b = (-t + disc) / 2, (-t - disc) / 2
    for r in range(1, 7):
        assert round((a**r + b**r).real) == waring_power_sum(q, t, r)


def test_power_sums_reject_bad_trace():
    with pytest.raises(ValidationError):
        frobenius_power_sums(8, 7, 3)


@pytest.mark.parametrize("n,t,d,expected", [(3, 4, 2, 26), (3, 4, 3, 156)])
def test_place_count_pinned(n, t, d, expected):
    curve, _ = cached_curve(n, t)
    assert count_places_formula(1 << n, t, d) == expected
    ext = make_ext(curve.ctx, d)
    assert len(enumerate_places_deg_d(curve, ext, d)) == expected


def test_place_count_formula_equals_enumeration_sweep():
    for n, d in [(3, 2), (4, 2), (4, 3)]:
        for t in admissible_t(n)[::3]:
            curve, _ = cached_curve(n, t)
            ext = make_ext(curve.ctx, d)
            assert (count_places_formula(1 << n, t, d)
                    == len(enumerate_places_deg_d(curve, ext, d))), (n, t, d)


def test_degree_one_count_is_point_count():
    assert count_places_formula(8, 4, 1) == 13
    assert count_places_formula(64, 8, 1) == 73


@pytest.mark.parametrize("n,t,d", [(3, 4, 2), (3, 4, 3), (4, 0, 2), (4, -1, 3)])
def test_find_place_is_regular(n, t, d):
    curve, P, ext, place, space = cached_instance(n, t, d)
    assert place.d == d and len(place.orbit) == d
    # orbit is the Frobenius orbit of the representative, points on the curve
    assert place.orbit == frobenius_orbit(ext, place.representative)
    for R in place.orbit:
        assert curve.on_curve(R, ext)
    # orbit and negated orbit are 2d distinct points
    negs = {curve.neg(R, ext) for R in place.orbit}
    assert len(negs | set(place.orbit)) == 2 * d
    # D(x) kills every orbit x-coordinate and has GF(q) coefficients
    assert len(place.dpoly) == d + 1 and place.dpoly[-1] == 1
    for R in place.orbit:
        acc = 0
        for c in reversed(place.dpoly):
            acc = ext.mul(acc, R.x) ^ ext.embed(c)
        assert acc == 0
    # D(x) has no rational root (regularity for the denominator)
    for x in curve.ctx.elements():
        acc = 0
        for c in reversed(place.dpoly):
            acc = curve.ctx.mul(acc, x) ^ c
        assert acc != 0


def test_find_place_gcd_gate():
    curve, _ = cached_curve(4, 1)  # N = 18, shares factors 2 and 3
    ext = make_ext(curve.ctx, 2)
    with pytest.raises(ValidationError):
        find_place(curve, ext, 2)


def test_translate_place_orbit_structure():
    curve, P, ext, place, space = cached_instance(3, 4, 2)
    seen = set()
    for j in range(curve.N):
        pl = translate_place(curve, place, j, P, ext)
        # translated orbits are still Frobenius orbits of curve points
        assert pl.orbit == frobenius_orbit(ext, pl.orbit[0])
        for R in pl.orbit:
            assert curve.on_curve(R, ext)
        seen.add(frozenset(pl.orbit))
    assert len(seen) == curve.N  # N pairwise distinct translates
    assert translate_place(curve, place, 0, P, ext).orbit == place.orbit
    assert translate_place(curve, place, curve.N, P, ext).orbit == place.orbit


def test_point_frobenius_fixes_rational_points():
    curve, P, ext, place, space = cached_instance(3, 4, 2)
    Pe = Point(ext.embed(P.x), ext.embed(P.y))
    assert point_frobenius(ext, Pe) == Pe

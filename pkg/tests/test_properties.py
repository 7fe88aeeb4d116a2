import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fri_lab import (
    RuleBase,
    Segment,
    TrapezoidSet,
    Verdict,
    alpha_cut,
    direct_normality,
    extract_segment_params,
    kh_alpha_profile,
    kh_characteristic_points,
    length_condition,
    membership_grade,
)

from genutil import random_flanked_config, random_uniform_config

coords = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)
levels = st.floats(min_value=0, max_value=1, allow_nan=False)


@st.composite
def trapezoids(draw):
    vals = sorted(draw(st.tuples(coords, coords, coords, coords)))
    return TrapezoidSet(*vals)


@given(trapezoids(), levels)
def test_membership_grades_stay_in_unit_interval(s, x_frac):
    x = s.a1 - 1 + x_frac * (s.width + 2)
    assert 0.0 <= membership_grade(s, x) <= 1.0


@given(trapezoids(), levels, levels)
def test_alpha_cuts_nest_exactly(s, alpha1, alpha2):
    low, high = min(alpha1, alpha2), max(alpha1, alpha2)
    assert alpha_cut(s, low).encloses(alpha_cut(s, high))


@given(trapezoids(), st.floats(min_value=1e-6, max_value=1.0), coords)
def test_membership_cut_duality(s, alpha, x):
    cut = alpha_cut(s, alpha)
    # stay clear of the cut boundary, where float rounding decides ties
    assume(abs(x - cut.lo) > 1e-6 and abs(x - cut.hi) > 1e-6)
    assert (membership_grade(s, x) >= alpha) == cut.contains(x)


def test_profile_endpoints_match_characteristic_points_on_random_configs():
    rng = random.Random(314)
    for _ in range(1000):
        lower, upper, obs = random_flanked_config(rng)
        points = kh_characteristic_points(lower, upper, obs)
        profile = kh_alpha_profile(lower, upper, obs, n_levels=5)
        assert abs(profile.infs[0] - points.y1) <= 1e-9
        assert abs(profile.infs[-1] - points.y2) <= 1e-9
        assert abs(profile.sups[-1] - points.y3) <= 1e-9
        assert abs(profile.sups[0] - points.y4) <= 1e-9


def test_length_condition_normal_implies_points_monotone():
    # the general length condition is conservative: a NORMAL verdict
    # guarantees monotone points, on arbitrary flanked configurations
    rng = random.Random(2718)
    for _ in range(2000):
        lower, upper, obs = random_flanked_config(rng)
        points = kh_characteristic_points(lower, upper, obs)
        direct = direct_normality(points)
        for seg in Segment:
            verdict = length_condition(
                extract_segment_params(lower, upper, obs, seg)
            ).verdict
            if verdict is Verdict.NORMAL:
                assert direct[seg] is Verdict.NORMAL


def test_uniform_length_condition_is_exact():
    # with uniform antecedent and consequent segment lengths the shortcut
    # conditions decide normality exactly, in both directions
    rng = random.Random(1618)
    for _ in range(2000):
        lower, upper, obs = random_uniform_config(rng)
        points = kh_characteristic_points(lower, upper, obs)
        direct = direct_normality(points)
        for seg in Segment:
            verdict = length_condition(
                extract_segment_params(lower, upper, obs, seg)
            ).verdict
            assert verdict is direct[seg]


def test_two_rule_stabilised_variant_collapses_to_plain_interpolation():
    from fri_lab import khstab_points

    rng = random.Random(999)
    for _ in range(500):
        lower, upper, obs = random_flanked_config(rng)
        plain = kh_characteristic_points(lower, upper, obs)
        stab = khstab_points(RuleBase((lower, upper)), obs, exponent=1.0)
        for a, b in zip(plain.as_tuple(), stab.as_tuple()):
            assert a == pytest.approx(b, abs=1e-9)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=10_000))
def test_interpolated_point_stays_between_consequent_points(seed):
    rng = random.Random(seed)
    lower, upper, obs = random_flanked_config(rng)
    points = kh_characteristic_points(lower, upper, obs)
    b1 = lower.consequent.points()
    b2 = upper.consequent.points()
    for y, lo, hi in zip(points.as_tuple(), b1, b2):
        assert min(lo, hi) - 1e-9 <= y <= max(lo, hi) + 1e-9

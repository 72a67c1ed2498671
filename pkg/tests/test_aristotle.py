import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import non_negative_rationals, positive_rationals
from motus.aristotle import (
    AristotleParams,
    Medium,
    celerity_ratio_across_media,
    density_to_exceed,
    haulers_motion,
    ross_celerity,
    ross_distance,
    vacuum_limit,
)
from motus.descartes import scan_function
from motus.errors import DomainError, SequenceError
from motus.magnitudes import Genus, completeness_bound, cross_ratio_oracle, same_ratio


@pytest.mark.parametrize("c, m, t, rho, d", [
    (1, 2, 3, 6, 1),
    (1, 1, 1, 1, 1),
    (2, 3, 5, 4, Fraction(15, 2)),
])
def test_ross_distance_examples(c, m, t, rho, d):
    out = ross_distance(AristotleParams(c, m, t), Medium(rho))
    assert out.value == d
    assert out.genus is Genus.LENGTH


@pytest.mark.parametrize("c, m, rho, v", [(1, 4, 2, 2), (1, 1, 1, 1)])
def test_ross_celerity_examples(c, m, rho, v):
    assert ross_celerity(AristotleParams(c, m, 1), Medium(rho)).value == v


def test_distance_is_celerity_times_time():
    rng = random.Random(3)
    for _ in range(100):
        p = AristotleParams(*(Fraction(rng.randint(1, 50), rng.randint(1, 20)) for _ in range(3)))
        medium = Medium(Fraction(rng.randint(1, 50), rng.randint(1, 20)))
        assert ross_distance(p, medium).value == ross_celerity(p, medium).value * p.time


@given(*[positive_rationals(20, 20)] * 4, positive_rationals(10, 10))
def test_distance_homogeneity(c, m, t, rho, k):
    d = ross_distance(AristotleParams(c, m, t), Medium(rho)).value
    assert ross_distance(AristotleParams(k * c, m, t), Medium(rho)).value == k * d
    assert ross_distance(AristotleParams(c, k * m, t), Medium(rho)).value == k * d
    assert ross_distance(AristotleParams(c, m, k * t), Medium(rho)).value == k * d
    assert ross_distance(AristotleParams(c, m, t), Medium(k * rho)).value == d / k


@pytest.mark.parametrize("bad", [0, -1])
def test_media_and_params_are_positive(bad):
    with pytest.raises(DomainError):
        Medium(bad)
    with pytest.raises(DomainError):
        AristotleParams(1, bad, 1)


def test_celerity_ratio_air_water():
    r = celerity_ratio_across_media(Medium(1, "air"), Medium(2, "water"))
    assert (r.antecedent.value, r.consequent.value) == (2, 1)


def test_celerity_ratio_same_medium_is_unity():
    air = Medium(Fraction(7, 3))
    assert celerity_ratio_across_media(air, air).value == 1


def test_celerity_ratio_agrees_with_celerities():
    air, water = Medium(1), Medium(8)
    r = celerity_ratio_across_media(air, water)
    assert r.value == 8
    p = AristotleParams(Fraction(2, 3), 5, 1)
    v_air, v_water = ross_celerity(p, air), ross_celerity(p, water)
    bound = completeness_bound(r.antecedent, r.consequent, v_air, v_water)
    assert same_ratio(r.antecedent, r.consequent, v_air, v_water, bound).same


@given(positive_rationals(), positive_rationals(), positive_rationals())
def test_celerity_ratios_compose(d1, d2, d3):
    m1, m2, m3 = Medium(d1), Medium(d2), Medium(d3)
    composed = celerity_ratio_across_media(m1, m2).compose(celerity_ratio_across_media(m2, m3))
    direct = celerity_ratio_across_media(m1, m3)
    assert cross_ratio_oracle(composed.antecedent, composed.consequent,
                              direct.antecedent, direct.consequent).same


def test_vacuum_limit_halving():
    report = vacuum_limit(AristotleParams(1, 1, 1), [1, Fraction(1, 2), Fraction(1, 4)])
    assert report.celerities == [1, 2, 4]
    assert report.verdict == "Diverges"


def test_vacuum_limit_bound_query():
    p = AristotleParams(1, 1, 1)
    assert density_to_exceed(p, 10**6) == Fraction(1, 10**6)
    report = vacuum_limit(p, [Fraction(1, 10**6), Fraction(1, 2 * 10**6)], bound=10**6)
    # at density exactly 1e-6 the celerity equals the bound; below it, it exceeds
    assert report.celerities[0] == 10**6
    assert report.first_exceeding == 1
    assert report.critical_density == Fraction(1, 10**6)


@pytest.mark.parametrize("seq", [[1], [1, 1], [1, 2], [1, 0], [Fraction(1, 2), Fraction(-1, 4)]])
def test_vacuum_limit_rejects_bad_sequences(seq):
    with pytest.raises(SequenceError):
        vacuum_limit(AristotleParams(1, 1, 1), seq)


def test_haulers_boundary_and_rest():
    assert haulers_motion(10, 10).moving
    assert haulers_motion(10, 10).celerity == 10
    assert not haulers_motion(0, 10).moving
    assert haulers_motion(Fraction(999, 100), 10).celerity == 0


def brute_jumps(threshold, lo, hi, step):
    xs = []
    x = lo
    while x <= hi:
        xs.append(x)
        x += step
    vals = [haulers_motion(x, threshold).celerity for x in xs]
    return [xs[i] for i in range(1, len(xs)) if abs(vals[i] - vals[i - 1]) > 10 * step]


def test_haulers_scan_single_jump_at_threshold():
    step = Fraction(1, 100)
    assert brute_jumps(10, Fraction(9), Fraction(11), step) == [10]
    report = scan_function(lambda f: (haulers_motion(f, 10).celerity,), 9, 11, step)
    assert [j.param for j in report.jumps] == [10]


@given(non_negative_rationals(), non_negative_rationals(), positive_rationals())
def test_haulers_constant_below_monotone_above(f1, f2, threshold):
    s1, s2 = haulers_motion(f1, threshold), haulers_motion(f2, threshold)
    if f1 < threshold and f2 < threshold:
        assert s1.celerity == s2.celerity == 0
    if f1 >= threshold and f2 >= threshold and f1 < f2:
        assert s1.celerity < s2.celerity

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import positive_rationals
from motus.aristotle import haulers_motion
from motus.descartes import (
    Body,
    Law,
    Rule,
    cartesian_collide,
    continuity_scan,
    elastic_collide,
    ledger,
    scan_function,
    size_family,
)
from motus.errors import ModelError, NoCollisionError, RangeError

velocity = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def bodies():
    return st.tuples(positive_rationals(8, 5), velocity, positive_rationals(8, 5), velocity).filter(
        lambda x: x[1] > x[3]
    ).map(lambda x: (Body(x[0], x[1]), Body(x[2], x[3])))


def com_reflection(b, c):
    """Elastic outcome as reflection through the centre-of-mass velocity."""
    vcm = (b.size * b.velocity + c.size * c.velocity) / (b.size + c.size)
    return 2 * vcm - b.velocity, 2 * vcm - c.velocity


# Cartesian rules -------------------------------------------------------------

@pytest.mark.parametrize("b, c, expected, rule", [
    (Body(2, 1), Body(1, 0), (Fraction(2, 3), Fraction(2, 3)), Rule.R5),
    (Body(3, 1), Body(1, 0), (Fraction(3, 4), Fraction(3, 4)), Rule.R5),
    (Body(1, 1), Body(1, 0), (Fraction(-3, 4), Fraction(1, 4)), Rule.R6),
    (Body(1, 1), Body(1, -1), (-1, 1), Rule.R1),
    (Body(1, 1), Body(2, 0), (-1, 0), Rule.R4),
    (Body(2, 1), Body(1, -1), (1, 1), Rule.R2),
    (Body(1, 3), Body(1, -1), (2, 2), Rule.R3),
])
def test_rule_examples(b, c, expected, rule):
    out = cartesian_collide(b, c)
    assert (out.v_b_after, out.v_c_after) == expected
    assert out.rule is rule and not out.mirrored


def test_r2_carries_note():
    assert cartesian_collide(Body(2, 1), Body(1, -1)).note


def test_mirrored_cases():
    # C larger and faster toward a resting B: Rule 5 read from the right
    out = cartesian_collide(Body(1, 0), Body(2, -1))
    assert out.rule is Rule.R5 and out.mirrored
    assert (out.v_b_after, out.v_c_after) == (Fraction(-2, 3), Fraction(-2, 3))
    out = cartesian_collide(Body(1, 1), Body(1, -3))
    assert out.rule is Rule.R3 and out.mirrored
    assert (out.v_b_after, out.v_c_after) == (-2, -2)


def test_not_covered():
    # same-direction chase and unequal sizes with unequal opposed speeds
    for b, c in [(Body(1, 2), Body(1, 1)), (Body(2, 3), Body(1, -1))]:
        out = cartesian_collide(b, c)
        assert out.rule is Rule.NOT_COVERED and not out.covered
        with pytest.raises(ModelError):
            ledger((b, c), out)


def test_no_collision():
    for law in Law:
        with pytest.raises(NoCollisionError):
            law.collide(Body(1, 0), Body(1, 1))
        with pytest.raises(NoCollisionError):
            law.collide(Body(1, 1), Body(1, 1))


@given(bodies())
def test_at_most_one_rule_and_parity(pair):
    b, c = pair
    out = cartesian_collide(b, c)
    direct = out.covered and not out.mirrored
    mirrored = cartesian_collide(Body(c.size, -c.velocity), Body(b.size, -b.velocity))
    assert mirrored.rule is out.rule
    if out.covered and out.rule is not Rule.R1:  # R1 is its own mirror image
        assert mirrored.mirrored is direct
    if out.covered:
        assert (mirrored.v_b_after, mirrored.v_c_after) == (-out.v_c_after, -out.v_b_after)


@st.composite
def covered(draw):
    """A configuration from one of the six listed cases, possibly mirrored."""
    B = draw(positive_rationals(8, 5))
    V = draw(positive_rationals(8, 5))
    kind = draw(st.sampled_from(["R1", "R2", "R3", "R4", "R5", "R6"]))
    if kind == "R1":
        pair = (Body(B, V), Body(B, -V))
    elif kind == "R2":
        pair = (Body(B, V), Body(B / draw(st.sampled_from([2, 3, Fraction(5, 4)])), -V))
    elif kind == "R3":
        pair = (Body(B, V), Body(B, -V / draw(st.sampled_from([2, 3, Fraction(5, 4)]))))
    elif kind == "R4":
        pair = (Body(B, V), Body(B + draw(positive_rationals(8, 5)), 0))
    elif kind == "R5":
        pair = (Body(B + draw(positive_rationals(8, 5)), V), Body(B, 0))
    else:
        pair = (Body(B, V), Body(B, 0))
    if draw(st.booleans()):
        b, c = pair
        pair = (Body(c.size, -c.velocity), Body(b.size, -b.velocity))
    return kind, pair


@given(covered())
def test_covered_cases_fire_their_rule_and_conserve_quantity(case):
    kind, pair = case
    out = cartesian_collide(*pair)
    assert out.rule.value == kind
    assert ledger(pair, out).quantity_of_motion.conserved


# elastic law -----------------------------------------------------------------

def test_elastic_examples():
    out = elastic_collide(Body(1, 1), Body(1, 0))
    assert (out.v_b_after, out.v_c_after) == (0, 1)
    out = elastic_collide(Body(2, 1), Body(1, 0))
    assert (out.v_b_after, out.v_c_after) == (Fraction(1, 3), Fraction(4, 3))
    book = ledger((Body(2, 1), Body(1, 0)), out)
    assert book.momentum.before == book.momentum.after == 2
    assert book.vis_viva.before == book.vis_viva.after == 2


@given(bodies())
def test_elastic_matches_reflection_and_conserves(pair):
    b, c = pair
    out = elastic_collide(b, c)
    assert (out.v_b_after, out.v_c_after) == com_reflection(b, c)
    book = ledger(pair, out)
    assert book.momentum.delta == 0 and book.vis_viva.delta == 0
    assert out.v_b_after - out.v_c_after == -(b.velocity - c.velocity)


@given(bodies(), velocity)
def test_elastic_commutes_with_frame_shift(pair, w):
    b, c = pair
    out = elastic_collide(b, c)
    shifted = elastic_collide(Body(b.size, b.velocity + w), Body(c.size, c.velocity + w))
    assert (shifted.v_b_after, shifted.v_c_after) == (out.v_b_after + w, out.v_c_after + w)


@given(bodies())
def test_elastic_parity(pair):
    b, c = pair
    out = elastic_collide(b, c)
    neg = elastic_collide(Body(c.size, -c.velocity), Body(b.size, -b.velocity))
    assert (neg.v_b_after, neg.v_c_after) == (-out.v_c_after, -out.v_b_after)


def test_cartesian_rule_depends_on_frame():
    b, c = Body(1, 1), Body(1, 0)
    w = Fraction(-1, 2)
    assert cartesian_collide(b, c).rule is Rule.R6
    assert cartesian_collide(Body(1, b.velocity + w), Body(1, c.velocity + w)).rule is Rule.R1


# ledger ----------------------------------------------------------------------

def test_rule6_ledger():
    pre = (Body(1, 1), Body(1, 0))
    book = ledger(pre, cartesian_collide(*pre))
    assert (book.quantity_of_motion.before, book.quantity_of_motion.after) == (1, 1)
    assert (book.momentum.before, book.momentum.after) == (1, Fraction(-1, 2))
    assert (book.vis_viva.before, book.vis_viva.after) == (1, Fraction(5, 8))


def test_rule1_ledger_all_conserved():
    pre = (Body(1, 1), Body(1, -1))
    book = ledger(pre, cartesian_collide(*pre))
    assert book.quantity_of_motion.conserved and book.momentum.conserved and book.vis_viva.conserved


# continuity scan -------------------------------------------------------------

def closed_form(m):
    """Rules 4/5/6 for B of size m hitting C=1 at rest with V=1."""
    if m < 1:
        return (Fraction(-1), Fraction(0))
    if m == 1:
        return (Fraction(-3, 4), Fraction(1, 4))
    kept = 1 - 1 / (m + 1)
    return (kept, kept)


@pytest.mark.parametrize("step", [Fraction(1, 200), Fraction(1, 400), Fraction(1, 1000)])
def test_cartesian_scan(step):
    lo, hi = Fraction(1, 2), Fraction(3, 2)
    rep = continuity_scan(size_family(), lo, hi, step, Law.CARTESIAN)
    assert rep.values == [closed_form(m) for m in rep.grid]
    assert [j.param for j in rep.jumps] == [1]
    assert rep.jumps[0].magnitude >= Fraction(1, 2)
    assert rep.jumps[0].before == (-1, 0)
    assert not rep.not_covered and not rep.errors


def test_cartesian_scan_coarse_step():
    # at step 1/20 the threshold 1/2 hides the 1/4 jump on the left of m = 1,
    # so the single flag lands one step to the right
    rep = continuity_scan(size_family(), Fraction(1, 2), Fraction(3, 2), Fraction(1, 20), Law.CARTESIAN)
    assert [j.param for j in rep.jumps] == [Fraction(21, 20)]


@pytest.mark.parametrize("step", [Fraction(1, 20), Fraction(1, 200), Fraction(1, 400)])
def test_elastic_scan(step):
    rep = continuity_scan(size_family(), Fraction(1, 2), Fraction(3, 2), step, "elastic")
    assert rep.jumps == []
    assert rep.values[rep.grid.index(1)] == (0, 1)
    assert all(v[0] == (m - 1) / (m + 1) for m, v in zip(rep.grid, rep.values))


def test_haulers_positive_control():
    rep = scan_function(lambda f: (haulers_motion(f, 10).celerity,), 9, 11, Fraction(1, 100))
    assert [j.param for j in rep.jumps] == [10]


def test_scan_reports_not_covered():
    family = lambda v: (Body(2, v), Body(1, -1))
    rep = continuity_scan(family, 0, 2, Fraction(1, 2), Law.CARTESIAN)
    # v = 1 is Rule 2; the others are outside the listed cases or do not collide
    assert 1 not in rep.not_covered
    assert rep.not_covered == [Fraction(1, 2), Fraction(3, 2), 2]
    assert [x for x, _ in rep.errors] == []


def test_scan_records_model_errors():
    family = lambda v: (Body(1, v), Body(1, 0))
    rep = continuity_scan(family, -1, 1, Fraction(1, 2), Law.ELASTIC)
    assert [x for x, _ in rep.errors] == [-1, Fraction(-1, 2), 0]


def test_scan_range_errors():
    with pytest.raises(RangeError):
        continuity_scan(size_family(), 1, 1, Fraction(1, 10), Law.CARTESIAN)
    with pytest.raises(RangeError):
        continuity_scan(size_family(), 0, 1, 0, Law.CARTESIAN)

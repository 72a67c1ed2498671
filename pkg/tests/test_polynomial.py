from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from motus import polynomial as P

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def simpson(p, a, b):
    """Simpson's rule: exact for polynomials of degree <= 3."""
    m = (a + b) / 2
    return (b - a) / 6 * (P.evaluate(p, a) + 4 * P.evaluate(p, m) + P.evaluate(p, b))


@given(st.lists(small, max_size=4), small, small)
def test_integrate_matches_simpson(coeffs, a, b):
    p = P.poly(coeffs)
    assert P.integrate(p, a, b) == simpson(p, a, b)


@given(st.lists(small, max_size=4), small, small)
def test_compose_affine(coeffs, scale, x):
    p = P.poly(coeffs)
    assert P.evaluate(P.compose_affine(p, scale, Fraction(1, 3)), x) == P.evaluate(p, scale * x + Fraction(1, 3))


def test_squarefree_factors():
    # (t - 1)^3 (t + 2)^2 (t - 3)
    p = P.mul(P.mul(P.mul(P.mul((-1, 1), (-1, 1)), (-1, 1)), P.mul((2, 1), (2, 1))), (-3, 1))
    factors = P.squarefree_factors(p)
    assert factors[0] == P.poly([-3, 1])
    assert factors[1] == P.poly([2, 1])
    assert factors[2] == P.poly([-1, 1])
    assert P.odd_part(p) == P.monic(P.mul((-3, 1), (-1, 1)))


@pytest.mark.parametrize("coeffs, a, b, expected", [
    ([1, -2, 1], 0, 2, True),          # (t - 1)^2 touches zero
    ([1, -1], 0, 2, False),
    ([4, 0, -4, 1], 0, 3, False),       # dips below zero inside
    ([-2, 0, 1], 2, 3, True),           # t^2 - 2 on [2, 3]
    ([-2, 0, 1], 1, 3, False),          # irrational root sqrt(2) inside
    ([4, -4, 1], 0, 3, True),           # (t - 2)^2
    ([0, 0, 0, 1], 0, 1, True),         # t^3, zero at the endpoint
    ([0, 1, -1], 0, 1, True),           # t (1 - t), zero at both ends
])
def test_nonnegative_on_cases(coeffs, a, b, expected):
    assert P.nonnegative_on(P.poly(coeffs), Fraction(a), Fraction(b)) is expected


t = sympy.Symbol("t")


@settings(max_examples=60)
@given(st.lists(small, min_size=1, max_size=4), small, st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
def test_nonnegative_on_matches_exact_minimum(coeffs, a, width):
    b = a + width
    p = P.poly(coeffs)
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)] or [0], t).as_expr()
    if expr.is_number:
        lo = expr
    else:
        lo = sympy.minimum(expr, t, sympy.Interval(sympy.Rational(a.numerator, a.denominator),
                                                   sympy.Rational(b.numerator, b.denominator)))
    assert P.nonnegative_on(p, a, b) == bool(lo >= 0)

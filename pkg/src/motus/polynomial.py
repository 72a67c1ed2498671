"""Dense univariate polynomials over Fraction.

A polynomial is a tuple of coefficients in ascending powers with trailing
zeros trimmed; the zero polynomial is ``()``.  Only what the profile code
needs is here: arithmetic, calculus, gcd, and an exact sign test on an
interval.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

Poly = Tuple[Fraction, ...]


def poly(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def evaluate(p: Poly, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def derivative(p: Poly) -> Poly:
    return poly(k * c for k, c in enumerate(p) if k > 0)


def antiderivative(p: Poly) -> Poly:
    return poly([0] + [c / (k + 1) for k, c in enumerate(p)])


def integrate(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    """Exact integral of p over [a, b] by the power rule."""
    big_p = antiderivative(p)
    return evaluate(big_p, b) - evaluate(big_p, a)


def compose_affine(p: Poly, scale: Fraction, shift: Fraction) -> Poly:
    """Coefficients of t -> p(scale * t + shift)."""
    out: Poly = ()
    linear = poly([shift, scale])
    power: Poly = (Fraction(1),)
    for c in p:
        out = add(out, mul((c,), power))
        power = mul(power, linear)
    return out


def divmod_poly(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        k = len(rem) - len(q)
        factor = rem[-1] / lead
        quot[k] = factor
        for i, c in enumerate(q):
            rem[k + i] -= factor * c
        rem = list(poly(rem))
    return poly(quot), poly(rem)


def monic(p: Poly) -> Poly:
    return tuple(c / p[-1] for c in p) if p else p


def gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def exact_div(p: Poly, q: Poly) -> Poly:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return quot


def squarefree_factors(p: Poly) -> List[Poly]:
    """Yun's decomposition: ``[a1, a2, ...]`` with p = lc * a1 * a2**2 * ..."""
    if degree(p) < 1:
        return []
    dp = derivative(p)
    c = gcd(p, dp)
    b = exact_div(p, c)
    d = sub(exact_div(dp, c), derivative(b))
    factors = []
    while degree(b) > 0:
        a = gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = sub(c, derivative(b))
        factors.append(a)
    return factors


def odd_part(p: Poly) -> Poly:
    """Square-free product of the factors of p with odd multiplicity."""
    out: Poly = (Fraction(1),)
    for i, a in enumerate(squarefree_factors(p), start=1):
        if i % 2 == 1:
            out = mul(out, a)
    return out


def _sturm_chain(p: Poly) -> List[Poly]:
    chain = [p, derivative(p)]
    while chain[-1]:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(neg(rem))
    return chain


def _sign_changes(chain: Sequence[Poly], t: Fraction) -> int:
    signs = [s for s in ((evaluate(q, t) > 0) - (evaluate(q, t) < 0) for q in chain) if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def count_roots_open(p: Poly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of a square-free p in the open interval (a, b)."""
    for end in (a, b):
        while degree(p) > 0 and evaluate(p, end) == 0:
            p = exact_div(p, poly([-end, 1]))
    if degree(p) < 1:
        return 0
    chain = _sturm_chain(p)
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def nonnegative_on(p: Poly, a: Fraction, b: Fraction) -> bool:
    """Exactly decide whether p(t) >= 0 for every t in [a, b]."""
    if not p:
        return True
    if evaluate(p, a) < 0 or evaluate(p, b) < 0:
        return False
    if degree(p) == 0:
        return True
    # p changes sign precisely at the roots of its odd-multiplicity part
    if count_roots_open(odd_part(p), a, b) > 0:
        return False
    # constant sign on (a, b) apart from isolated zeros; probe past them
    n = degree(p) + 2
    for k in range(1, n):
        value = evaluate(p, a + (b - a) * k / n)
        if value != 0:
            return value > 0
    return True  # unreachable for p != 0, kept for totality

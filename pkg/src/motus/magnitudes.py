"""Euclidean magnitudes and the equimultiple tests of ratio.

Magnitudes are strictly positive rationals tagged with a genus.  Two
predicates live here:

* :func:`has_ratio` -- the Archimedean condition, returned as its minimal
  witness multiplier rather than a bare boolean;
* :func:`same_ratio` -- the equimultiple comparison of two ratios, searched
  over all multipliers up to a caller-chosen bound.

:func:`cross_ratio_oracle` decides the same question exactly by
cross-multiplication and is the ground truth the bounded search is checked
against.  :func:`separating_rational` produces a rational lying strictly
between two unequal ratios; its numerator and denominator are a witness
pair for :func:`same_ratio` and tell the caller how large ``bound`` must be.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import BoundError, DomainError, GenusError, NoSeparatorError
from .rational import RationalLike, as_rational


class Genus(str, enum.Enum):
    LENGTH = "length"
    TIME = "time"
    CELERITY = "celerity"
    WEIGHT = "weight"
    DENSITY = "density"
    ABSTRACT = "abstract"


@dataclass(frozen=True)
class Magnitude:
    """A strictly positive quantity of one genus."""

    value: Fraction
    genus: Genus = Genus.ABSTRACT

    def __post_init__(self) -> None:
        value = as_rational(self.value)
        if value <= 0:
            raise DomainError(f"magnitudes are strictly positive, got {value}")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "genus", Genus(self.genus))

    def _check(self, other: "Magnitude") -> None:
        if not isinstance(other, Magnitude):
            raise TypeError(f"cannot compare Magnitude with {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusError(f"{self.genus.value} is not comparable with {other.genus.value}")

    def __lt__(self, other: "Magnitude") -> bool:
        self._check(other)
        return self.value < other.value

    def __le__(self, other: "Magnitude") -> bool:
        self._check(other)
        return self.value <= other.value

    def __gt__(self, other: "Magnitude") -> bool:
        self._check(other)
        return self.value > other.value

    def __ge__(self, other: "Magnitude") -> bool:
        self._check(other)
        return self.value >= other.value

    def multiple(self, m: int) -> "Magnitude":
        if m < 1:
            raise DomainError("multipliers are positive integers")
        return Magnitude(self.value * m, self.genus)

    def scaled(self, k: RationalLike) -> "Magnitude":
        return Magnitude(self.value * as_rational(k), self.genus)

    def __str__(self) -> str:
        return f"{self.value} {self.genus.value}"


def magnitude(value: RationalLike, genus: Genus | str = Genus.ABSTRACT) -> Magnitude:
    return Magnitude(as_rational(value), Genus(genus))


@dataclass(frozen=True)
class Ratio:
    """An ordered pair of magnitudes of a common genus.

    A ratio is deliberately not a Magnitude itself; compounding two ratios
    gives another Ratio.
    """

    antecedent: Magnitude
    consequent: Magnitude

    def __post_init__(self) -> None:
        if self.antecedent.genus != self.consequent.genus:
            raise GenusError(
                f"ratio terms differ in genus: {self.antecedent.genus.value} "
                f"vs {self.consequent.genus.value}"
            )

    @property
    def genus(self) -> Genus:
        return self.antecedent.genus

    @property
    def value(self) -> Fraction:
        return self.antecedent.value / self.consequent.value

    def compose(self, other: "Ratio") -> "Ratio":
        """Compound ratio (a:b)(c:d) = ac:bd, kept in this ratio's genus."""
        return Ratio(
            Magnitude(self.antecedent.value * other.antecedent.value, self.genus),
            Magnitude(self.consequent.value * other.consequent.value, self.genus),
        )

    def inverse(self) -> "Ratio":
        return Ratio(self.consequent, self.antecedent)

    def __str__(self) -> str:
        return f"{self.antecedent.value}:{self.consequent.value}"


@dataclass(frozen=True)
class ProportionVerdict:
    """Outcome of a proportion test.

    ``witness`` is an ``(m, n)`` pair for which ``m*e`` vs ``n*f`` and
    ``m*g`` vs ``n*h`` compare differently; it is None for Same, and may be
    None for a Different verdict that came from the exact oracle.
    """

    same: bool
    witness: Optional[Tuple[int, int]] = field(default=None)

    def __bool__(self) -> bool:
        return self.same

    def __str__(self) -> str:
        if self.same:
            return "Same"
        if self.witness is None:
            return "Different"
        return f"Different(m={self.witness[0]}, n={self.witness[1]})"


SAME = ProportionVerdict(True)


def _same_genus(a: Magnitude, b: Magnitude) -> None:
    if a.genus != b.genus:
        raise GenusError(f"{a.genus.value} and {b.genus.value} cannot stand in a ratio")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def has_ratio(a: Magnitude, b: Magnitude) -> int:
    """Smallest positive integer m with m*a > b.

    Always exists for positive rationals; the return value satisfies
    ``(m - 1) * a <= b < m * a``.
    """
    _same_genus(a, b)
    return math.floor(b.value / a.value) + 1


def is_witness(e: Magnitude, f: Magnitude, g: Magnitude, h: Magnitude, m: int, n: int) -> bool:
    """True when the equimultiples m, n compare e:f and g:h differently."""
    return _sign(m * e.value - n * f.value) != _sign(m * g.value - n * h.value)


def same_ratio(
    e: Magnitude, f: Magnitude, g: Magnitude, h: Magnitude, bound: int
) -> ProportionVerdict:
    """Equimultiple test: is e:f the same ratio as g:h?

    Every pair ``1 <= m, n <= bound`` is examined in order of m, then n; the
    first pair whose comparisons disagree is returned as the witness.  The
    search is sound but incomplete for small bounds.

    For a fixed m the disagreeing n are exactly the integers in the closed
    interval between ``m*e/f`` and ``m*g/h``, so the inner loop jumps
    straight to its first candidate instead of walking every n.
    """
    if bound < 1:
        raise BoundError("bound must be a positive integer")
    _same_genus(e, f)
    _same_genus(g, h)
    r1 = e.value / f.value
    r2 = g.value / h.value
    for m in range(1, bound + 1):
        lo = min(m * r1, m * r2)
        n = max(1, math.ceil(lo))
        if n <= bound and is_witness(e, f, g, h, m, n):
            return ProportionVerdict(False, (m, n))
    return SAME


def cross_ratio_oracle(
    e: Magnitude, f: Magnitude, g: Magnitude, h: Magnitude
) -> ProportionVerdict:
    """Exact decision: e:f equals g:h iff e*h == f*g."""
    _same_genus(e, f)
    _same_genus(g, h)
    return ProportionVerdict(e.value * h.value == f.value * g.value)


def separating_rational(
    e: Magnitude, f: Magnitude, g: Magnitude, h: Magnitude
) -> Fraction:
    """A rational n/m strictly between the values of e:f and g:h.

    Returns the mediant of the two ratios in lowest terms, so ``m`` is at
    most the sum of their denominators.  ``(m, n)`` is then a witness for
    :func:`same_ratio` whenever ``bound >= max(m, n)``.
    """
    if cross_ratio_oracle(e, f, g, h):
        raise NoSeparatorError("equal ratios admit no separating rational")
    r1 = e.value / f.value
    r2 = g.value / h.value
    return Fraction(r1.numerator + r2.numerator, r1.denominator + r2.denominator)


def witness_of(separator: Fraction) -> Tuple[int, int]:
    """The (m, n) equimultiple pair encoded by a separator n/m."""
    return separator.denominator, separator.numerator


def completeness_bound(e: Magnitude, f: Magnitude, g: Magnitude, h: Magnitude) -> int:
    """A bound at which :func:`same_ratio` is guaranteed to agree with the oracle."""
    if cross_ratio_oracle(e, f, g, h):
        return 1
    m, n = witness_of(separating_rational(e, f, g, h))
    return max(m, n)

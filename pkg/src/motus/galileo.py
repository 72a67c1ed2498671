"""Fall laws with every constant set to one.

The body falls ``H = t**2`` in time ``t`` and has degree of speed
``v = 2t``, so ``v**2 = 4H`` and ``2H = v*t`` hold exactly for rational
``t``.  Speeds recovered from a height need a square root; they come back
as an exact Fraction when the radicand is a rational square and as a
correctly rounded Decimal otherwise (see :func:`sqrt_rational`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError
from .magnitudes import Genus, Magnitude, cross_ratio_oracle
from .rational import RationalLike, as_rational

Scalar = Union[Fraction, Decimal]

DEFAULT_PRECISION = 12
# one pulse beat taken as the time unit, one beat per second
PULSE_BEATS_PER_YEAR = 365 * 24 * 60 * 60


def _non_negative(name: str, value: RationalLike) -> Fraction:
    q = as_rational(value)
    if q < 0:
        raise DomainError(f"{name} must be >= 0, got {q}")
    return q


def _exact_sqrt(q: Fraction) -> Optional[Fraction]:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def sqrt_digits(value: Fraction, tolerance_digits: int) -> int:
    """Fractional digits needed so that |s**2 - value| <= 10**-tolerance_digits.

    Rounding s to d digits moves it by at most 10**-d / 2, which moves s**2
    by at most (2s + 1) * 10**-d / 2; the estimate of s uses an integer
    upper bound on the root.
    """
    upper = math.isqrt(math.ceil(value)) + 1
    return tolerance_digits + len(str(2 * upper + 1))


def sqrt_rational(value: RationalLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """Square root of a non-negative rational.

    Exact when ``value`` is the square of a rational; otherwise the root
    correctly rounded to enough fractional digits that its square is within
    ``10**-precision`` of ``value``.
    """
    q = _non_negative("radicand", value)
    if precision < 1:
        raise DomainError("precision must be a positive number of digits")
    exact = _exact_sqrt(q)
    if exact is not None:
        return exact
    digits = sqrt_digits(q, precision)
    scaled = q * 10 ** (2 * digits)
    r = math.isqrt(math.floor(scaled))
    # nearest integer to sqrt(scaled): r + 1 iff scaled >= (r + 1/2)**2
    if 4 * scaled >= 4 * r * r + 4 * r + 1:
        r += 1
    return _scaled_decimal(r, digits)


def _scaled_decimal(n: int, digits: int) -> Decimal:
    # string construction is exact; scaleb would round to context precision
    return Decimal(f"{n}E-{digits}")


def to_fraction(x: Union[Scalar, int]) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True)
class FallState:
    t: Fraction
    H: Fraction
    v: Fraction

    def satisfies_laws(self) -> bool:
        return (
            self.H == self.t**2
            and self.v**2 == 4 * self.H
            and self.H == self.v**2 / 4
            and 2 * self.H == self.v * self.t
        )


def fall_state(t: RationalLike) -> FallState:
    t_q = _non_negative("t", t)
    return FallState(t_q, t_q * t_q, 2 * t_q)


def speed_from_height(H: RationalLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """v = 2*sqrt(H), i.e. sqrt(4H), with the square-domain guarantee."""
    return sqrt_rational(4 * _non_negative("H", H), precision)


def height_from_speed(v: Union[RationalLike, Decimal]) -> Fraction:
    v_q = _non_negative("v", v)
    return v_q * v_q / 4


class Trajectory(str, enum.Enum):
    FREE_FALL = "free_fall"
    INCLINE = "incline"
    PENDULUM = "pendulum"


def speed_at_drop(
    total_drop: RationalLike,
    precision: int = DEFAULT_PRECISION,
    trajectory: Trajectory | str = Trajectory.FREE_FALL,
) -> Scalar:
    """Speed acquired after a vertical drop, whatever the path taken.

    ``trajectory`` is validated and then deliberately ignored: the result
    depends on the height alone.
    """
    Trajectory(trajectory)
    return speed_from_height(_non_negative("drop", total_drop), precision)


@dataclass(frozen=True)
class MotionRecord:
    distance: Magnitude
    duration: Magnitude

    @classmethod
    def of(cls, distance: RationalLike, duration: RationalLike) -> "MotionRecord":
        return cls(Magnitude(as_rational(distance), Genus.LENGTH), Magnitude(as_rational(duration), Genus.TIME))

    def __post_init__(self) -> None:
        if self.distance.genus is not Genus.LENGTH or self.duration.genus is not Genus.TIME:
            raise DomainError("a motion record pairs a length with a time")


def equal_speed(m1: MotionRecord, m2: MotionRecord) -> bool:
    """Spaces in the same ratio as the times."""
    return cross_ratio_oracle(m1.distance, m2.distance, m1.duration, m2.duration).same


@dataclass(frozen=True)
class InclineGeometry:
    k_drop: Fraction
    cc_gap: Fraction
    run: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        k = as_rational(self.k_drop)
        if k <= 0:
            raise DomainError("k_drop must be > 0")
        c = as_rational(self.cc_gap)
        if c < 0:
            raise DomainError("cc_gap must be >= 0")
        r = as_rational(self.run)
        if r <= 0:
            raise DomainError("run must be > 0")
        object.__setattr__(self, "k_drop", k)
        object.__setattr__(self, "cc_gap", c)
        object.__setattr__(self, "run", r)


@dataclass(frozen=True)
class InertiaReport:
    v_at_Cprime: Scalar
    v_at_C: Scalar
    speed_gap: Scalar
    v_at_Cprime_squared: Fraction
    v_at_C_squared: Fraction

    @property
    def squared_gap(self) -> Fraction:
        return self.v_at_C_squared - self.v_at_Cprime_squared

    def gap_within_bound(self, geom: InclineGeometry) -> bool:
        """speed_gap <= cc_gap / sqrt(k_drop), decided without a square root."""
        gap = to_fraction(self.speed_gap)
        return gap <= 0 or gap * gap * geom.k_drop <= geom.cc_gap**2


def inertia_limit(geom: InclineGeometry, precision: int = DEFAULT_PRECISION) -> InertiaReport:
    """Speeds at C' (drop K'K) and at C (drop K'K + C'C) on the incline figure.

    The squared speeds differ by exactly 4*C'C, so the speed gap closes as
    C'C shrinks and motion along the horizontal stays uniform.
    """
    sq_cprime = 4 * geom.k_drop
    sq_c = 4 * (geom.k_drop + geom.cc_gap)
    v_cprime = speed_at_drop(geom.k_drop, precision)
    v_c = speed_at_drop(geom.k_drop + geom.cc_gap, precision)
    gap: Scalar
    if isinstance(v_c, Fraction) and isinstance(v_cprime, Fraction):
        gap = v_c - v_cprime
    else:
        digits = max(-x.as_tuple().exponent for x in (v_c, v_cprime) if isinstance(x, Decimal))
        with localcontext() as ctx:
            ctx.prec = 10 * (digits + 10)
            gap = _as_decimal(v_c, digits) - _as_decimal(v_cprime, digits)
    return InertiaReport(v_cprime, v_c, gap, sq_cprime, sq_c)


def _as_decimal(x: Scalar, digits: int) -> Decimal:
    """x rounded half-even to ``digits`` fractional digits."""
    return _scaled_decimal(round(Fraction(x) * 10**digits), digits)


@dataclass(frozen=True)
class DegreeScale:
    quantum: Fraction

    def __post_init__(self) -> None:
        q = as_rational(self.quantum)
        if q <= 0:
            raise DomainError("quantum must be > 0")
        object.__setattr__(self, "quantum", q)


def degrees(v: Union[RationalLike, Decimal], scale: DegreeScale) -> int:
    """Whole number of speed quanta contained in v."""
    return math.floor(_non_negative("v", v) / scale.quantum)


def slowness_degree(v: Union[RationalLike, Decimal], scale: DegreeScale) -> Union[int, float]:
    """floor(1 / (v * quantum)); ``math.inf`` at rest."""
    v_q = _non_negative("v", v)
    if v_q == 0:
        return math.inf
    return math.floor(1 / (v_q * scale.quantum))


def sagredo_threshold(distance_bound: RationalLike, duration: RationalLike) -> Fraction:
    """Largest speed that, kept constant, still fails to cover the distance in the time.

    Any constant speed strictly below the returned value covers less than
    ``distance_bound`` in ``duration``.
    """
    d = as_rational(distance_bound)
    T = as_rational(duration)
    if d <= 0 or T <= 0:
        raise DomainError("distance bound and duration must be > 0")
    return d / T


@dataclass(frozen=True)
class SagredoReport:
    epsilon: Fraction
    # the falling body is slower than epsilon for every t < time_below
    time_below: Fraction
    # distance fallen during that initial phase
    distance_below: Fraction


def sagredo_report(distance_bound: RationalLike, duration: RationalLike) -> SagredoReport:
    eps = sagredo_threshold(distance_bound, duration)
    t_below = eps / 2
    return SagredoReport(eps, t_below, fall_state(t_below).H)


@dataclass(frozen=True)
class EnergyTerms:
    kinetic: Fraction
    potential: Fraction

    @property
    def total(self) -> Fraction:
        return self.kinetic + self.potential


def energy_invariant(total_height: RationalLike, t: RationalLike) -> EnergyTerms:
    """Kinetic term v**2/4 and remaining height, unit mass."""
    h0 = _non_negative("total_height", total_height)
    state = fall_state(t)
    if state.H > h0:
        raise DomainError(f"at t={state.t} the body has already landed")
    return EnergyTerms(height_from_speed(state.v), h0 - state.H)

"""Motion through a resisting medium.

Distance and celerity follow the reconstructed proportionalities

    distance = C * mass * time / density
    celerity = C * mass / density

with resistance identified with the medium's density.  A vacuum is not a
constructible :class:`Medium`; approaching it is handled by
:func:`vacuum_limit`, which reports divergence instead of producing an
infinite value.  :func:`haulers_motion` is the threshold law (too small a
force moves nothing at all) and doubles as a known discontinuity for the
continuity scanner.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DomainError, SequenceError
from .magnitudes import Genus, Magnitude, Ratio
from .rational import RationalLike, as_rational


def _positive(name: str, value: RationalLike) -> Fraction:
    q = as_rational(value)
    if q <= 0:
        raise DomainError(f"{name} must be > 0, got {q}")
    return q


@dataclass(frozen=True)
class Medium:
    density: Fraction
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "density", _positive("density", self.density))


@dataclass(frozen=True)
class AristotleParams:
    constant_c: Fraction
    mass: Fraction
    time: Fraction

    def __post_init__(self) -> None:
        for name in ("constant_c", "mass", "time"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))


def ross_distance(p: AristotleParams, medium: Medium) -> Magnitude:
    return Magnitude(p.constant_c * p.mass * p.time / medium.density, Genus.LENGTH)


def ross_celerity(p: AristotleParams, medium: Medium) -> Magnitude:
    return Magnitude(p.constant_c * p.mass / medium.density, Genus.CELERITY)


def celerity_ratio_across_media(m1: Medium, m2: Medium) -> Ratio:
    """Celerity in ``m1`` to celerity in ``m2``: the inverse ratio of densities."""
    return Ratio(
        Magnitude(m2.density, Genus.CELERITY),
        Magnitude(m1.density, Genus.CELERITY),
    )


@dataclass(frozen=True)
class DivergenceReport:
    densities: List[Fraction]
    celerities: List[Fraction]
    verdict: str
    bound: Optional[Fraction] = None
    # density below which celerity exceeds ``bound``
    critical_density: Optional[Fraction] = None
    # index of the first sampled density whose celerity exceeds ``bound``
    first_exceeding: Optional[int] = None


def density_to_exceed(p: AristotleParams, bound: RationalLike) -> Fraction:
    """Celerity exceeds ``bound`` exactly when density < C*M/bound."""
    return p.constant_c * p.mass / _positive("bound", bound)


def vacuum_limit(
    p: AristotleParams,
    density_sequence: Sequence[RationalLike],
    bound: Optional[RationalLike] = None,
) -> DivergenceReport:
    """Celerities along a density sequence decreasing toward the vacuum.

    Celerity is C*M/density, so for every prescribed bound there is a
    density below which it is exceeded: the verdict is always ``Diverges``.
    With ``bound`` given, the report also names that critical density and
    the first sampled density beyond it.
    """
    densities = [as_rational(d) for d in density_sequence]
    if len(densities) < 2:
        raise SequenceError("need at least two densities to approach the vacuum")
    if any(d <= 0 for d in densities):
        raise SequenceError("densities must be positive; the vacuum itself is not a medium")
    if any(b >= a for a, b in zip(densities, densities[1:])):
        raise SequenceError("densities must be strictly decreasing")
    celerities = [ross_celerity(p, Medium(d)).value for d in densities]
    if bound is None:
        return DivergenceReport(densities, celerities, "Diverges")
    bound_q = _positive("bound", bound)
    critical = density_to_exceed(p, bound_q)
    first = next((i for i, c in enumerate(celerities) if c > bound_q), None)
    return DivergenceReport(densities, celerities, "Diverges", bound_q, critical, first)


@dataclass(frozen=True)
class HaulerState:
    moving: bool
    celerity: Fraction

    @property
    def label(self) -> str:
        return "Moving" if self.moving else "Rest"


def haulers_motion(
    force: RationalLike, threshold: RationalLike, factor: RationalLike = 1
) -> HaulerState:
    """Rest below ``threshold``; above it, celerity = factor * force.

    A force exactly at the threshold moves the load.
    """
    force_q = as_rational(force)
    if force_q < 0:
        raise DomainError("force must be >= 0")
    threshold_q = _positive("threshold", threshold)
    if force_q < threshold_q:
        return HaulerState(False, Fraction(0))
    return HaulerState(True, _positive("factor", factor) * force_q)

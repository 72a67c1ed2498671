"""Configurations of velocity: speed plotted over time as an exact figure.

A :class:`VelocityProfile` is a piecewise polynomial with rational
coefficients over ``[0, T]``.  Its area (:func:`total_celerity`) is the
distance covered and is computed exactly.  Motions are classified by how
many times one must take the variation before it becomes uniform:

    depth 0  uniform               constant speed
    depth 1  uniformly difform     constant, nonzero rate of change
    depth 2  uniformly difformly difform
    ...

Coefficients are in powers of absolute time ``t`` (not of the offset from a
piece's left breakpoint).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from . import polynomial as P
from .errors import BoundError, ClassError, DomainError
from .rational import RationalLike, as_rational, format_rational

DEFAULT_MAX_DEGREE = 3


class PiecewisePolynomial:
    """Polynomial pieces on consecutive intervals, no sign restriction.

    Pieces need not agree at shared breakpoints.  At an interior breakpoint
    ``__call__`` returns the right-hand piece; use :meth:`left_limit` and
    :meth:`right_limit` to read both sides.
    """

    def __init__(self, breakpoints: Sequence[RationalLike], pieces: Sequence[Iterable]):
        bps = tuple(as_rational(b) for b in breakpoints)
        if len(bps) < 2:
            raise DomainError("need at least two breakpoints")
        if any(b <= a for a, b in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        polys = tuple(P.poly(as_rational(c) for c in piece) for piece in pieces)
        if len(polys) != len(bps) - 1:
            raise DomainError(f"{len(bps) - 1} intervals but {len(polys)} pieces")
        self.breakpoints: Tuple[Fraction, ...] = bps
        self.pieces: Tuple[P.Poly, ...] = polys

    @property
    def start(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def end(self) -> Fraction:
        return self.breakpoints[-1]

    @property
    def intervals(self) -> List[Tuple[Fraction, Fraction]]:
        return list(zip(self.breakpoints, self.breakpoints[1:]))

    @property
    def degree(self) -> int:
        return max(P.degree(p) for p in self.pieces)

    def _piece_index(self, t: Fraction) -> int:
        if not self.start <= t <= self.end:
            raise DomainError(f"t={t} outside [{self.start}, {self.end}]")
        for i, right in enumerate(self.breakpoints[1:]):
            if t < right:
                return i
        return len(self.pieces) - 1

    def __call__(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        return P.evaluate(self.pieces[self._piece_index(t)], t)

    def left_limit(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        if t == self.start:
            return self(t)
        i = self._piece_index(t)
        if t == self.breakpoints[i] and i > 0:
            i -= 1
        return P.evaluate(self.pieces[i], t)

    def right_limit(self, t: RationalLike) -> Fraction:
        return self(t)

    def jumps(self) -> List[Tuple[Fraction, Fraction]]:
        """Interior breakpoints where the pieces disagree, with the jump size."""
        out = []
        for i, t in enumerate(self.breakpoints[1:-1]):
            d = P.evaluate(self.pieces[i + 1], t) - P.evaluate(self.pieces[i], t)
            if d != 0:
                out.append((t, d))
        return out

    def is_continuous(self) -> bool:
        return not self.jumps()

    def is_constant(self) -> bool:
        return self.is_continuous() and all(P.degree(p) <= 0 for p in self.pieces)

    def derivative(self) -> "PiecewisePolynomial":
        return PiecewisePolynomial(self.breakpoints, [P.derivative(p) for p in self.pieces])

    def integral(self) -> Fraction:
        return sum(
            (P.integrate(p, a, b) for p, (a, b) in zip(self.pieces, self.intervals)),
            Fraction(0),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash((self.breakpoints, self.pieces))

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(c) for c in p) or "0" for p in self.pieces)
        return f"{type(self).__name__}(breakpoints={[str(b) for b in self.breakpoints]}, pieces=[{rows}])"

    def to_text(self) -> str:
        """Breakpoint line followed by one coefficient row per piece."""
        lines = ["breakpoints: " + " ".join(format_rational(b) for b in self.breakpoints)]
        for p in self.pieces:
            lines.append("piece: " + (" ".join(format_rational(c) for c in p) or "0/1"))
        return "\n".join(lines) + "\n"


class VelocityProfile(PiecewisePolynomial):
    """Speed over time on ``[0, T]``: non-negative everywhere, bounded degree."""

    def __init__(
        self,
        breakpoints: Sequence[RationalLike],
        pieces: Sequence[Iterable],
        max_degree: int = DEFAULT_MAX_DEGREE,
    ):
        super().__init__(breakpoints, pieces)
        if self.start != 0:
            raise DomainError("a velocity profile starts at t = 0")
        if self.degree > max_degree:
            raise DomainError(f"piece degree {self.degree} exceeds cap {max_degree}")
        for p, (a, b) in zip(self.pieces, self.intervals):
            if not P.nonnegative_on(p, a, b):
                raise DomainError(f"speed goes negative on [{a}, {b}]")
        self.max_degree = max_degree

    @classmethod
    def uniform(cls, degree: RationalLike, duration: RationalLike) -> "VelocityProfile":
        return cls([0, duration], [[degree]])

    @classmethod
    def linear(cls, initial: RationalLike, rate: RationalLike, duration: RationalLike) -> "VelocityProfile":
        return cls([0, duration], [[initial, rate]])

    @classmethod
    def from_text(cls, text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> "VelocityProfile":
        breakpoints: Optional[List[str]] = None
        pieces: List[List[str]] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(":")
            key = key.strip().lower()
            if key == "breakpoints":
                breakpoints = rest.split()
            elif key == "piece":
                pieces.append(rest.split())
            else:
                raise DomainError(f"unexpected profile line: {raw!r}")
        if breakpoints is None:
            raise DomainError("profile text has no breakpoints line")
        return cls(breakpoints, pieces, max_degree)

    @classmethod
    def from_fields(cls, breakpoints: str, pieces: str, max_degree: int = DEFAULT_MAX_DEGREE) -> "VelocityProfile":
        """Compact one-line form: ``"0 1 2"`` and ``"3 2; 5"`` (rows split by ``;``)."""
        bps = breakpoints.replace(",", " ").split()
        rows = [row.replace(",", " ").split() for row in pieces.split(";")]
        return cls(bps, rows, max_degree)

    def concatenate(self, other: "VelocityProfile") -> "VelocityProfile":
        """This motion followed by ``other``, shifted to start at this one's end."""
        shift = self.end
        bps = list(self.breakpoints) + [b + shift for b in other.breakpoints[1:]]
        shifted = [P.compose_affine(p, Fraction(1), -shift) for p in other.pieces]
        return VelocityProfile(bps, list(self.pieces) + shifted, max(self.max_degree, other.max_degree))

    def time_scaled(self, k: RationalLike) -> "VelocityProfile":
        """Same sequence of speeds run over a duration k times as long."""
        k = as_rational(k)
        if k <= 0:
            raise DomainError("time scale must be > 0")
        return VelocityProfile(
            [b * k for b in self.breakpoints],
            [P.compose_affine(p, 1 / k, Fraction(0)) for p in self.pieces],
            self.max_degree,
        )


class Verdict(str, enum.Enum):
    UNIFORM = "uniform"
    DIFFORM = "difform"


@dataclass(frozen=True)
class UniformityClass:
    """Verdict at each depth; the first UNIFORM verdict ends the list."""

    verdicts: Tuple[Verdict, ...]

    @property
    def depth(self) -> Optional[int]:
        """Depth of the first uniform verdict, None if none was reached."""
        if self.verdicts and self.verdicts[-1] is Verdict.UNIFORM:
            return len(self.verdicts) - 1
        return None

    @property
    def name(self) -> str:
        d = self.depth
        if d == 0:
            return "uniform"
        if d is not None:
            return "uniformly " + "difformly " * (d - 1) + "difform"
        return "difformly " * (len(self.verdicts) - 1) + "difform"

    def __str__(self) -> str:
        return self.name


def classify(p: PiecewisePolynomial, max_depth: int) -> UniformityClass:
    """Take successive variations until one is uniform, at most ``max_depth`` times.

    A profile with a jump is difform and its variation is not examined.
    """
    if max_depth < 1:
        raise BoundError("max_depth must be >= 1")
    verdicts: List[Verdict] = []
    current = p
    for _ in range(max_depth + 1):
        if current.is_constant():
            verdicts.append(Verdict.UNIFORM)
            break
        verdicts.append(Verdict.DIFFORM)
        if not current.is_continuous():
            break
        current = current.derivative()
    return UniformityClass(tuple(verdicts))


def total_celerity(p: PiecewisePolynomial) -> Fraction:
    """Area under the speed curve over its whole domain, exactly."""
    return p.integral()


def mean_degree_equivalent(p: VelocityProfile) -> VelocityProfile:
    """Uniform motion at the mean of the initial and final degrees.

    Defined for uniform and uniformly difform profiles; covers the same
    distance in the same time.
    """
    depth = classify(p, 1).depth
    if depth not in (0, 1):
        raise ClassError(f"profile is {classify(p, 1).name}, not uniformly difform")
    mean = (p.right_limit(p.start) + p.left_limit(p.end)) / 2
    return VelocityProfile.uniform(mean, p.end)

"""Head-on collisions of two bodies on a line: Descartes' rules and the elastic law.

Bodies are ``B`` (on the left) and ``C`` (on the right); velocities are
signed rationals, positive pointing from B toward C.  A speed is the
absolute value and its sign is the body's *determination*.

The Cartesian rules cover six configurations; the elided ones come back
tagged ``NotCovered`` rather than guessed.  Each rule is stated with B as
the faster or larger body, and the mirror image of a covered configuration
(reflect the line, swap the labels) is handled by the same rule with
``mirrored=True`` on the outcome.

:func:`continuity_scan` sweeps a one-parameter family of initial
conditions and flags grid steps whose outcome jumps by more than
``kappa * step``.  A law that is Lipschitz in the parameter never triggers
it, while a true discontinuity does at every resolution.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import DomainError, ModelError, NoCollisionError, RangeError
from .rational import RationalLike, as_rational

DEFAULT_KAPPA = 10


@dataclass(frozen=True)
class Body:
    size: Fraction
    velocity: Fraction

    def __post_init__(self) -> None:
        size = as_rational(self.size)
        if size <= 0:
            raise DomainError("body size must be > 0")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "velocity", as_rational(self.velocity))

    @property
    def speed(self) -> Fraction:
        return abs(self.velocity)

    @property
    def determination(self) -> int:
        return (self.velocity > 0) - (self.velocity < 0)


class Rule(str, enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"
    ELASTIC = "Elastic"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class CollisionOutcome:
    v_b_after: Optional[Fraction]
    v_c_after: Optional[Fraction]
    rule: Rule
    mirrored: bool = False
    note: str = ""

    @property
    def covered(self) -> bool:
        return self.rule is not Rule.NOT_COVERED


def _check_approach(b: Body, c: Body) -> None:
    if b.velocity - c.velocity <= 0:
        raise NoCollisionError(
            f"bodies do not approach (v_b={b.velocity}, v_c={c.velocity})"
        )


_R2_NOTE = "interpretation: both keep the common pre-collision speed"


def _canonical(b: Body, c: Body) -> Optional[Tuple[Rule, Fraction, Fraction, str]]:
    """Rule for a configuration already oriented with B as the leading body."""
    B, C, v, w = b.size, c.size, b.velocity, c.velocity
    if v > 0 and w < 0:
        V, W = v, -w
        if B == C and V == W:
            return Rule.R1, -v, -w, ""
        if B > C and V == W:
            return Rule.R2, V, V, _R2_NOTE
        if B == C and V > W:
            half = (V + W) / 2
            return Rule.R3, half, half, ""
        return None
    if v > 0 and w == 0:
        if B < C:
            return Rule.R4, -v, Fraction(0), ""
        if B > C:
            kept = v - C / (B + C) * v
            return Rule.R5, kept, kept, ""
        return Rule.R6, -Fraction(3, 4) * v, v / 4, ""
    return None


def _mirror(b: Body, c: Body) -> Tuple[Body, Body]:
    return Body(c.size, -c.velocity), Body(b.size, -b.velocity)


def cartesian_collide(b: Body, c: Body) -> CollisionOutcome:
    """Outcome under Descartes' six rules, or a NotCovered outcome."""
    _check_approach(b, c)
    hit = _canonical(b, c)
    if hit is not None:
        rule, vb, vc, note = hit
        return CollisionOutcome(vb, vc, rule, False, note)
    mb, mc = _mirror(b, c)
    hit = _canonical(mb, mc)
    if hit is not None:
        rule, u_left, u_right, note = hit
        return CollisionOutcome(-u_right, -u_left, rule, True, note)
    return CollisionOutcome(None, None, Rule.NOT_COVERED)


def elastic_collide(b: Body, c: Body) -> CollisionOutcome:
    """Velocities conserving both momentum and vis viva, with exchange."""
    _check_approach(b, c)
    mb, mc, vb, vc = b.size, c.size, b.velocity, c.velocity
    total = mb + mc
    vb_after = ((mb - mc) * vb + 2 * mc * vc) / total
    vc_after = ((mc - mb) * vc + 2 * mb * vb) / total
    return CollisionOutcome(vb_after, vc_after, Rule.ELASTIC)


@dataclass(frozen=True)
class Balance:
    before: Fraction
    after: Fraction

    @property
    def delta(self) -> Fraction:
        return self.after - self.before

    @property
    def conserved(self) -> bool:
        return self.delta == 0


@dataclass(frozen=True)
class ConservationLedger:
    quantity_of_motion: Balance
    momentum: Balance
    vis_viva: Balance


def ledger(pre: Tuple[Body, Body], post: CollisionOutcome) -> ConservationLedger:
    """Before/after totals of sum m|v|, sum m*v and sum m*v**2."""
    if not post.covered:
        raise ModelError("no post-collision velocities to account for")
    b, c = pre
    after = ((b.size, post.v_b_after), (c.size, post.v_c_after))
    before = ((b.size, b.velocity), (c.size, c.velocity))

    def total(pairs, f) -> Fraction:
        return sum((m * f(v) for m, v in pairs), Fraction(0))

    return ConservationLedger(
        Balance(total(before, abs), total(after, abs)),
        Balance(total(before, lambda v: v), total(after, lambda v: v)),
        Balance(total(before, lambda v: v * v), total(after, lambda v: v * v)),
    )


class Law(str, enum.Enum):
    CARTESIAN = "cartesian"
    ELASTIC = "elastic"

    def collide(self, b: Body, c: Body) -> CollisionOutcome:
        return cartesian_collide(b, c) if self is Law.CARTESIAN else elastic_collide(b, c)


@dataclass(frozen=True)
class Jump:
    param: Fraction
    magnitude: Fraction
    before: Tuple[Fraction, ...]
    after: Tuple[Fraction, ...]


@dataclass
class ScanReport:
    grid: List[Fraction]
    values: List[Optional[Tuple[Fraction, ...]]]
    jumps: List[Jump] = field(default_factory=list)
    not_covered: List[Fraction] = field(default_factory=list)
    errors: List[Tuple[Fraction, str]] = field(default_factory=list)
    threshold: Fraction = Fraction(0)


def scan_grid(lo: RationalLike, hi: RationalLike, step: RationalLike) -> List[Fraction]:
    lo_q, hi_q, step_q = as_rational(lo), as_rational(hi), as_rational(step)
    if step_q <= 0:
        raise RangeError("step must be > 0")
    if hi_q <= lo_q:
        raise RangeError(f"empty range [{lo_q}, {hi_q}]")
    count = int((hi_q - lo_q) // step_q)
    return [lo_q + i * step_q for i in range(count + 1)]


def _max_norm(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return max(abs(a - b) for a, b in zip(x, y))


def scan_function(
    func: Callable[[Fraction], Optional[Tuple[Fraction, ...]]],
    lo: RationalLike,
    hi: RationalLike,
    step: RationalLike,
    kappa: RationalLike = DEFAULT_KAPPA,
) -> ScanReport:
    """Locate jumps of a vector-valued function sampled on a rational grid.

    ``func`` returns None for parameters it does not cover; those points are
    listed in ``not_covered`` and the comparison bridges the gap with the
    threshold scaled to the wider spacing.  A grid point flagged on both
    sides is an isolated point of discontinuity and is reported once, at
    that point; any other flagged step is reported at its right end.
    """
    grid = scan_grid(lo, hi, step)
    kappa_q = as_rational(kappa)
    report = ScanReport(grid, [], threshold=kappa_q * as_rational(step))
    for x in grid:
        try:
            value = func(x)
        except ModelError as exc:
            report.errors.append((x, str(exc)))
            value = None
        else:
            if value is None:
                report.not_covered.append(x)
        report.values.append(value)

    sampled = [(x, v) for x, v in zip(grid, report.values) if v is not None]
    flagged: List[Tuple[int, Fraction]] = []  # (index into sampled of the right end, size)
    for i in range(1, len(sampled)):
        (x0, v0), (x1, v1) = sampled[i - 1], sampled[i]
        size = _max_norm(v0, v1)
        if size > kappa_q * (x1 - x0):
            flagged.append((i, size))

    k = 0
    while k < len(flagged):
        i, size = flagged[k]
        if k + 1 < len(flagged) and flagged[k + 1][0] == i + 1:
            j, size2 = flagged[k + 1]
            report.jumps.append(Jump(sampled[i][0], max(size, size2), sampled[i - 1][1], sampled[j][1]))
            k += 2
        else:
            report.jumps.append(Jump(sampled[i][0], size, sampled[i - 1][1], sampled[i][1]))
            k += 1
    return report


Family = Callable[[Fraction], Tuple[Body, Body]]


def size_family(
    c_size: RationalLike = 1, v_b: RationalLike = 1, v_c: RationalLike = 0
) -> Family:
    """B's size is the parameter; C and both velocities are held fixed."""
    return lambda m: (Body(m, v_b), Body(c_size, v_c))


def continuity_scan(
    family: Family,
    lo: RationalLike,
    hi: RationalLike,
    step: RationalLike,
    law: Law | str,
    kappa: RationalLike = DEFAULT_KAPPA,
) -> ScanReport:
    """Jumps in (v_b', v_c') across a family of collisions under one law."""
    law = Law(law)

    def outcome(x: Fraction) -> Optional[Tuple[Fraction, ...]]:
        out = law.collide(*family(x))
        if not out.covered:
            return None
        return (out.v_b_after, out.v_c_after)

    return scan_function(outcome, lo, hi, step, kappa)

"""Operation registry and execution of scenarios into result tables."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from . import aristotle, descartes, galileo, magnitudes, oresme
from .errors import ConfigError, ModelError
from .rational import as_rational, format_rational
from .scenario import Scenario

Row = Dict[str, object]
REQUIRED = object()


@dataclass
class ResultTable:
    columns: List[str]
    rows: List[List[str]]
    plot_kind: str = "curve"
    plot_x: str = ""
    plot_y: Tuple[str, ...] = ()
    title: str = ""

    def column(self, name: str) -> List[str]:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buf.getvalue()


@dataclass(frozen=True)
class Operation:
    module: str
    name: str
    func: Callable[[Dict[str, str], int], List[Row]]
    columns: Tuple[str, ...]
    params: Dict[str, object]
    source: str
    plot_kind: str = "curve"
    plot_x: str = ""
    plot_y: Tuple[str, ...] = ()
    sweepable: bool = True


def format_decimal(value, precision: int) -> str:
    """Fixed-point text with exactly ``precision`` fractional digits (half-even)."""
    q = Fraction(value)
    n = round(q * 10**precision)
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(precision + 1, "0")
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


@dataclass(frozen=True)
class Fixed:
    """An exact value to be written as a fixed-point decimal rather than p/q."""

    value: Fraction


def format_cell(value: object, precision: int) -> str:
    if isinstance(value, Fixed):
        return format_decimal(value.value, precision)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Decimal):
        return format_decimal(value, precision)
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


class _Params:
    """Typed access to the string parameters of one invocation."""

    def __init__(self, raw: Dict[str, str]):
        self.raw = raw

    def text(self, key: str) -> str:
        return self.raw[key]

    def q(self, key: str) -> Fraction:
        try:
            return as_rational(self.raw[key])
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"parameter {key}: {exc}") from exc

    def integer(self, key: str) -> int:
        value = self.q(key)
        if value.denominator != 1:
            raise ConfigError(f"parameter {key} must be an integer")
        return int(value)

    def rationals(self, key: str) -> List[Fraction]:
        try:
            return [as_rational(x) for x in self.raw[key].replace(",", " ").split()]
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"parameter {key}: {exc}") from exc


# magnitudes ---------------------------------------------------------------

def _quad(p: _Params):
    return tuple(magnitudes.magnitude(p.q(k)) for k in "efgh")


def _has_ratio(p: _Params, precision: int) -> List[Row]:
    a, b = magnitudes.magnitude(p.q("a")), magnitudes.magnitude(p.q("b"))
    return [{"a": a.value, "b": b.value, "m": magnitudes.has_ratio(a, b)}]


def _same_ratio(p: _Params, precision: int) -> List[Row]:
    e, f, g, h = _quad(p)
    verdict = magnitudes.same_ratio(e, f, g, h, p.integer("bound"))
    m, n = verdict.witness or (None, None)
    oracle = magnitudes.cross_ratio_oracle(e, f, g, h)
    return [{"verdict": "Same" if verdict.same else "Different", "m": m, "n": n,
             "oracle": "Same" if oracle.same else "Different"}]


def _oracle(p: _Params, precision: int) -> List[Row]:
    e, f, g, h = _quad(p)
    verdict = magnitudes.cross_ratio_oracle(e, f, g, h)
    return [{"verdict": "Same" if verdict.same else "Different",
             "eh": e.value * h.value, "fg": f.value * g.value}]


def _separator(p: _Params, precision: int) -> List[Row]:
    e, f, g, h = _quad(p)
    sep = magnitudes.separating_rational(e, f, g, h)
    m, n = magnitudes.witness_of(sep)
    check = magnitudes.same_ratio(e, f, g, h, max(m, n))
    return [{"separator": sep, "m": m, "n": n,
             "same_ratio": "Same" if check.same else "Different"}]


# aristotle ----------------------------------------------------------------

def _params(p: _Params, time: bool = True) -> aristotle.AristotleParams:
    return aristotle.AristotleParams(p.q("c"), p.q("mass"), p.q("time") if time else Fraction(1))


def _distance(p: _Params, precision: int) -> List[Row]:
    d = aristotle.ross_distance(_params(p), aristotle.Medium(p.q("density")))
    return [{"distance_num": d.value.numerator, "distance_den": d.value.denominator}]


def _celerity(p: _Params, precision: int) -> List[Row]:
    v = aristotle.ross_celerity(_params(p, time=False), aristotle.Medium(p.q("density")))
    return [{"celerity_num": v.value.numerator, "celerity_den": v.value.denominator, "state": "Moving"}]


def _media_ratio(p: _Params, precision: int) -> List[Row]:
    m1, m2 = aristotle.Medium(p.q("density1")), aristotle.Medium(p.q("density2"))
    ratio = aristotle.celerity_ratio_across_media(m1, m2)
    params = _params(p, time=False)
    v1, v2 = aristotle.ross_celerity(params, m1), aristotle.ross_celerity(params, m2)
    check = magnitudes.same_ratio(ratio.antecedent, ratio.consequent, v1, v2,
                                  magnitudes.completeness_bound(ratio.antecedent, ratio.consequent, v1, v2))
    return [{"ratio": str(ratio), "celerity1": v1.value, "celerity2": v2.value,
             "same_ratio": "Same" if check.same else "Different"}]


def _vacuum(p: _Params, precision: int) -> List[Row]:
    bound = p.q("bound") if p.raw.get("bound") else None
    report = aristotle.vacuum_limit(_params(p, time=False), p.rationals("densities"), bound)
    rows = []
    for i, (d, v) in enumerate(zip(report.densities, report.celerities)):
        exceeds = None if bound is None else v > bound
        rows.append({"param": d, "celerity_num": v.numerator, "celerity_den": v.denominator,
                     "state": report.verdict, "exceeds_bound": exceeds})
    return rows


def _haulers(p: _Params, precision: int) -> List[Row]:
    s = aristotle.haulers_motion(p.q("force"), p.q("threshold"), p.q("factor"))
    return [{"force": p.q("force"), "celerity_num": s.celerity.numerator,
             "celerity_den": s.celerity.denominator, "state": s.label}]


def _haulers_scan(p: _Params, precision: int) -> List[Row]:
    threshold, factor = p.q("threshold"), p.q("factor")
    report = descartes.scan_function(
        lambda f: (aristotle.haulers_motion(f, threshold, factor).celerity,),
        p.q("lo"), p.q("hi"), p.q("step"), p.q("kappa"),
    )
    jumps = {j.param: j.magnitude for j in report.jumps}
    rows = []
    for x in report.grid:
        s = aristotle.haulers_motion(x, threshold, factor)
        rows.append({"param": x, "celerity_num": s.celerity.numerator,
                     "celerity_den": s.celerity.denominator, "state": s.label, "jump": jumps.get(x)})
    return rows


# oresme -------------------------------------------------------------------

def _profile(p: _Params) -> oresme.VelocityProfile:
    try:
        return oresme.VelocityProfile.from_fields(p.text("breakpoints"), p.text("pieces"), p.integer("max_degree"))
    except ValueError as exc:
        raise ModelError(f"invalid profile: {exc}") from exc


def _classify(p: _Params, precision: int) -> List[Row]:
    cls = oresme.classify(_profile(p), p.integer("max_depth"))
    return [{"class": cls.name, "verdicts": " ".join(v.value for v in cls.verdicts), "depth": cls.depth}]


def _total(p: _Params, precision: int) -> List[Row]:
    prof = _profile(p)
    return [{"duration": prof.end, "total_celerity": oresme.total_celerity(prof)}]


def _mean_degree(p: _Params, precision: int) -> List[Row]:
    prof = _profile(p)
    eq = oresme.mean_degree_equivalent(prof)
    a, b = oresme.total_celerity(prof), oresme.total_celerity(eq)
    return [{"mean_degree": eq(0), "total_input": a, "total_equivalent": b, "equal": a == b}]


def _diagram(p: _Params, precision: int) -> List[Row]:
    prof = _profile(p)
    per_piece = p.integer("samples")
    rows = []
    for i, (a, b) in enumerate(prof.intervals):
        for k in range(per_piece + 1):
            t = a + (b - a) * Fraction(k, per_piece)
            v = prof.left_limit(t) if k == per_piece else prof(t)
            if k == 0 and i > 0 and rows and rows[-1]["t"] == t and rows[-1]["v"] == v:
                continue
            rows.append({"t": t, "v": v})
    return rows


# galileo ------------------------------------------------------------------

def _fall(p: _Params, precision: int) -> List[Row]:
    s = galileo.fall_state(p.q("t"))
    return [{"t": s.t, "H": s.H, "v": s.v, "laws": s.satisfies_laws()}]


def _drop(p: _Params, precision: int) -> List[Row]:
    drop = p.q("drop")
    v = galileo.speed_at_drop(drop, precision, p.text("trajectory"))
    return [{"drop": drop, "trajectory": p.text("trajectory"), "v": v, "v_squared": 4 * drop,
             "exact": isinstance(v, Fraction)}]


def _inertia(p: _Params, precision: int) -> List[Row]:
    geom = galileo.InclineGeometry(p.q("k_drop"), p.q("cc_gap"), p.q("run"))
    r = galileo.inertia_limit(geom, precision)
    return [{"k_drop": geom.k_drop, "cc_gap": geom.cc_gap, "v_at_Cprime": r.v_at_Cprime,
             "v_at_C": r.v_at_C, "speed_gap": r.speed_gap, "squared_gap": r.squared_gap,
             "gap_within_bound": r.gap_within_bound(geom)}]


def _sagredo(p: _Params, precision: int) -> List[Row]:
    r = galileo.sagredo_report(p.q("distance_bound"), p.q("duration"))
    return [{"epsilon": r.epsilon, "epsilon_decimal": Fixed(r.epsilon),
             "time_below": r.time_below, "distance_below": r.distance_below}]


def _energy(p: _Params, precision: int) -> List[Row]:
    t = p.q("t")
    e = galileo.energy_invariant(p.q("total_height"), t)
    return [{"t": t, "kinetic": e.kinetic, "potential": e.potential, "sum": e.total}]


def _degrees(p: _Params, precision: int) -> List[Row]:
    v, scale = p.q("v"), galileo.DegreeScale(p.q("quantum"))
    return [{"v": v, "degree": galileo.degrees(v, scale), "slowness": galileo.slowness_degree(v, scale)}]


# descartes ----------------------------------------------------------------

def _bodies(p: _Params) -> Tuple[descartes.Body, descartes.Body]:
    return (descartes.Body(p.q("b_size"), p.q("b_velocity")),
            descartes.Body(p.q("c_size"), p.q("c_velocity")))


def _collision_row(pre, out: descartes.CollisionOutcome) -> Row:
    row: Row = {"v_b_after": out.v_b_after, "v_c_after": out.v_c_after, "rule": out.rule.value,
                "qom_delta": None, "momentum_delta": None, "visviva_delta": None,
                "covered": out.covered}
    if out.covered:
        led = descartes.ledger(pre, out)
        row.update(qom_delta=led.quantity_of_motion.delta, momentum_delta=led.momentum.delta,
                   visviva_delta=led.vis_viva.delta)
    return row


def _collide(law: descartes.Law):
    def run(p: _Params, precision: int) -> List[Row]:
        pre = _bodies(p)
        return [_collision_row(pre, law.collide(*pre))]
    return run


def _scan(p: _Params, precision: int) -> List[Row]:
    law = descartes.Law(p.text("law"))
    family = descartes.size_family(p.q("c_size"), p.q("b_velocity"), p.q("c_velocity"))
    report = descartes.continuity_scan(family, p.q("lo"), p.q("hi"), p.q("step"), law, p.q("kappa"))
    jumps = {j.param: j.magnitude for j in report.jumps}
    rows = []
    for x in report.grid:
        pre = family(x)
        try:
            row = _collision_row(pre, law.collide(*pre))
        except ModelError as exc:
            row = {"error": str(exc)}
        row = {"param": x, **row, "jump": jumps.get(x)}
        rows.append(row)
    return rows


_COLLISION_COLUMNS = ("v_b_after", "v_c_after", "rule", "qom_delta", "momentum_delta", "visviva_delta", "covered")
_BODIES = {"b_size": REQUIRED, "b_velocity": REQUIRED, "c_size": REQUIRED, "c_velocity": "0"}
_QUAD = {"e": REQUIRED, "f": REQUIRED, "g": REQUIRED, "h": REQUIRED}
_PROFILE = {"breakpoints": REQUIRED, "pieces": REQUIRED, "max_degree": "3"}
_CELERITY = ("celerity_num", "celerity_den", "state")

OPERATIONS: Dict[Tuple[str, str], Operation] = {
    (op.module, op.name): op
    for op in [
        Operation("magnitudes", "has_ratio", _has_ratio, ("a", "b", "m"), {"a": REQUIRED, "b": REQUIRED},
                  "archimedean multiplier", plot_x="b", plot_y=("m",)),
        Operation("magnitudes", "same_ratio", _same_ratio, ("verdict", "m", "n", "oracle"),
                  {**_QUAD, "bound": "100"}, "equimultiple test"),
        Operation("magnitudes", "oracle", _oracle, ("verdict", "eh", "fg"), _QUAD, "cross multiplication"),
        Operation("magnitudes", "separator", _separator, ("separator", "m", "n", "same_ratio"), _QUAD,
                  "mediant separator"),
        Operation("aristotle", "distance", _distance, ("distance_num", "distance_den"),
                  {"c": "1", "mass": REQUIRED, "time": REQUIRED, "density": REQUIRED}, "distance = C*M*T/density"),
        Operation("aristotle", "celerity", _celerity, _CELERITY,
                  {"c": "1", "mass": REQUIRED, "density": REQUIRED}, "celerity = C*M/density"),
        Operation("aristotle", "media_ratio", _media_ratio, ("ratio", "celerity1", "celerity2", "same_ratio"),
                  {"c": "1", "mass": "1", "density1": REQUIRED, "density2": REQUIRED},
                  "celerities inverse to resistances"),
        Operation("aristotle", "vacuum", _vacuum, ("param",) + _CELERITY + ("exceeds_bound",),
                  {"c": "1", "mass": "1", "densities": REQUIRED, "bound": ""}, "celerity as density -> 0",
                  plot_x="param", plot_y=("celerity_num",), sweepable=False),
        Operation("aristotle", "haulers", _haulers, ("force",) + _CELERITY,
                  {"force": REQUIRED, "threshold": REQUIRED, "factor": "1"}, "haulers threshold",
                  plot_kind="scan", plot_x="force", plot_y=("celerity_num",)),
        Operation("aristotle", "haulers_scan", _haulers_scan, ("param",) + _CELERITY + ("jump",),
                  {"threshold": REQUIRED, "factor": "1", "lo": REQUIRED, "hi": REQUIRED, "step": REQUIRED,
                   "kappa": str(descartes.DEFAULT_KAPPA)}, "haulers threshold",
                  plot_kind="scan", plot_x="param", plot_y=("celerity_num",), sweepable=False),
        Operation("oresme", "classify", _classify, ("class", "verdicts", "depth"),
                  {**_PROFILE, "max_depth": "3"}, "uniform/difform classification"),
        Operation("oresme", "total", _total, ("duration", "total_celerity"), _PROFILE, "area of the configuration"),
        Operation("oresme", "mean_degree", _mean_degree, ("mean_degree", "total_input", "total_equivalent", "equal"),
                  _PROFILE, "mean degree"),
        Operation("oresme", "diagram", _diagram, ("t", "v"), {**_PROFILE, "samples": "8"},
                  "configuration of velocities", plot_kind="diagram", plot_x="t", plot_y=("v",), sweepable=False),
        Operation("galileo", "fall", _fall, ("t", "H", "v", "laws"), {"t": REQUIRED},
                  "H = t^2, v = 2t", plot_x="t", plot_y=("H", "v")),
        Operation("galileo", "drop", _drop, ("drop", "trajectory", "v", "v_squared", "exact"),
                  {"drop": REQUIRED, "trajectory": "free_fall"}, "speed depends on height only",
                  plot_x="drop", plot_y=("v",)),
        Operation("galileo", "inertia", _inertia,
                  ("k_drop", "cc_gap", "v_at_Cprime", "v_at_C", "speed_gap", "squared_gap", "gap_within_bound"),
                  {"k_drop": REQUIRED, "cc_gap": REQUIRED, "run": "1"}, "inclined-plane limit",
                  plot_x="cc_gap", plot_y=("speed_gap",)),
        Operation("galileo", "sagredo", _sagredo, ("epsilon", "epsilon_decimal", "time_below", "distance_below"),
                  {"distance_bound": REQUIRED, "duration": REQUIRED}, "smallest degree of speed",
                  plot_x="duration", plot_y=("epsilon",)),
        Operation("galileo", "energy", _energy, ("t", "kinetic", "potential", "sum"),
                  {"total_height": REQUIRED, "t": REQUIRED}, "kinetic + potential",
                  plot_x="t", plot_y=("kinetic", "potential", "sum")),
        Operation("galileo", "degrees", _degrees, ("v", "degree", "slowness"),
                  {"v": REQUIRED, "quantum": "1"}, "degrees of speed and slowness", plot_x="v", plot_y=("degree",)),
        Operation("descartes", "cartesian", _collide(descartes.Law.CARTESIAN), _COLLISION_COLUMNS, _BODIES,
                  "Cartesian rules of impact", plot_kind="scan", plot_x="param", plot_y=("v_b_after", "v_c_after")),
        Operation("descartes", "elastic", _collide(descartes.Law.ELASTIC), _COLLISION_COLUMNS, _BODIES,
                  "elastic impact", plot_kind="scan", plot_x="param", plot_y=("v_b_after", "v_c_after")),
        Operation("descartes", "scan", _scan, ("param",) + _COLLISION_COLUMNS + ("jump",),
                  {"law": "cartesian", "c_size": "1", "b_velocity": "1", "c_velocity": "0",
                   "lo": REQUIRED, "hi": REQUIRED, "step": REQUIRED, "kappa": str(descartes.DEFAULT_KAPPA)},
                  "continuity of impact laws", plot_kind="scan", plot_x="param",
                  plot_y=("v_b_after", "v_c_after"), sweepable=False),
    ]
}


def get_operation(module: str, name: str) -> Operation:
    try:
        return OPERATIONS[(module, name)]
    except KeyError:
        known = sorted(n for m, n in OPERATIONS if m == module)
        raise ConfigError(f"unknown operation {module}/{name}; known: {', '.join(known)}") from None


def validate(scenario: Scenario) -> Operation:
    op = get_operation(scenario.module, scenario.operation)
    unknown = sorted(set(scenario.parameters) - set(op.params))
    if unknown:
        raise ConfigError(f"{op.module}/{op.name} does not take: {', '.join(unknown)}")
    if scenario.sweep is not None:
        if not op.sweepable:
            raise ConfigError(f"{op.module}/{op.name} cannot be swept")
        if scenario.sweep.key not in op.params:
            raise ConfigError(f"sweep key {scenario.sweep.key!r} is not a parameter of {op.module}/{op.name}")
    swept = scenario.sweep.key if scenario.sweep else None
    missing = [k for k, v in op.params.items()
               if v is REQUIRED and k not in scenario.parameters and k != swept]
    if missing:
        raise ConfigError(f"{op.module}/{op.name} needs: {', '.join(missing)}")
    return op


def run(scenario: Scenario) -> ResultTable:
    """Execute once, or at every sweep point; rows follow the sweep order.

    Model errors abort a single run but are recorded in an ``error`` column
    for sweeps.
    """
    op = validate(scenario)
    base = {k: v for k, v in op.params.items() if v is not REQUIRED}
    base.update(scenario.parameters)
    rows: List[Row] = []
    if scenario.sweep is None:
        rows = op.func(_Params(base), scenario.precision)
        columns = list(op.columns)
    else:
        key = scenario.sweep.key
        columns = list(op.columns) if key in op.columns else ["param"] + list(op.columns)
        for x in scenario.sweep.grid():
            params = dict(base, **{key: format_rational(x)})
            try:
                produced = op.func(_Params(params), scenario.precision)
            except ModelError as exc:
                produced = [{"error": str(exc)}]
            for row in produced:
                rows.append({"param": x, **row} if key not in op.columns else {key: x, **row})
    if any("error" in row for row in rows):
        columns.append("error")
    columns.append("source")
    cells = [[format_cell(row.get(c), scenario.precision) for c in columns[:-1]] + [op.source] for row in rows]
    plot_x = op.plot_x
    if scenario.sweep is not None and plot_x not in columns:
        plot_x = "param" if "param" in columns else scenario.sweep.key
    return ResultTable(columns, cells, op.plot_kind, plot_x, op.plot_y,
                       title=scenario.name or f"{op.module}/{op.name}")

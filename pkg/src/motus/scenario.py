"""Flat ``key = value`` scenario files.

Example::

    # comments run to end of line
    module = galileo
    operation = fall
    sweep = t 0 10 1
    precision = 12

Reserved keys describe the run; every other key is a parameter handed to
the operation.  Rational literals are written ``p/q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .errors import ConfigError
from .rational import as_rational

MODULES = ("magnitudes", "aristotle", "oresme", "galileo", "descartes")
MODULE_ALIASES = {"collide": "descartes"}
RESERVED = {"module", "operation", "sweep", "output", "plot", "precision", "name", "description", "tag"}
DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class Sweep:
    key: str
    lo: Fraction
    hi: Fraction
    step: Fraction

    def grid(self) -> List[Fraction]:
        count = int((self.hi - self.lo) // self.step)
        return [self.lo + i * self.step for i in range(count + 1)]

    def __str__(self) -> str:
        return f"{self.key} {self.lo} {self.hi} {self.step}"


@dataclass
class Scenario:
    module: str
    operation: str
    parameters: Dict[str, str] = field(default_factory=dict)
    sweep: Optional[Sweep] = None
    output: Optional[str] = None
    plot: Optional[str] = None
    precision: int = DEFAULT_PRECISION
    name: str = ""
    description: str = ""
    tag: str = ""

    def __post_init__(self) -> None:
        self.module = MODULE_ALIASES.get(self.module, self.module)
        if self.module not in MODULES:
            raise ConfigError(f"unknown module {self.module!r}; expected one of {', '.join(MODULES)}")
        if self.precision < 1:
            raise ConfigError("precision must be a positive integer")


def _rational(text: str, what: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{what}: {exc}") from exc


def parse_sweep(text: str) -> Sweep:
    parts = text.split()
    if len(parts) != 4:
        raise ConfigError(f"sweep needs 'key lo hi step', got {text!r}")
    key, lo, hi, step = parts
    sweep = Sweep(key, _rational(lo, "sweep lo"), _rational(hi, "sweep hi"), _rational(step, "sweep step"))
    if sweep.step <= 0:
        raise ConfigError("sweep step must be > 0")
    if sweep.hi < sweep.lo:
        raise ConfigError("sweep hi must be >= lo")
    return sweep


def parse_scenario(text: str) -> Scenario:
    entries: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value.strip()

    for required in ("module", "operation"):
        if required not in entries:
            raise ConfigError(f"scenario lacks '{required}'")
    precision = entries.get("precision", str(DEFAULT_PRECISION))
    if not precision.isdigit():
        raise ConfigError(f"precision must be a positive integer, got {precision!r}")
    return Scenario(
        module=entries["module"],
        operation=entries["operation"],
        parameters={k: v for k, v in entries.items() if k not in RESERVED},
        sweep=parse_sweep(entries["sweep"]) if "sweep" in entries else None,
        output=entries.get("output") or None,
        plot=entries.get("plot") or None,
        precision=int(precision),
        name=entries.get("name", ""),
        description=entries.get("description", ""),
        tag=entries.get("tag", ""),
    )


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_scenario(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read scenario {path}: {exc}") from exc

"""Exact, executable models of pre-modern theories of motion.

Modules: :mod:`magnitudes` (ratios and equimultiples), :mod:`aristotle`
(motion through a medium), :mod:`oresme` (velocity configurations),
:mod:`galileo` (fall laws) and :mod:`descartes` (impact rules), plus a
scenario runner exposed as the ``motus`` command.
"""

from .errors import (
    BoundError,
    ClassError,
    ConfigError,
    DomainError,
    GenusError,
    ModelError,
    MotusError,
    NoCollisionError,
    NoSeparatorError,
    PlotError,
    RangeError,
    SequenceError,
)

__all__ = [
    "BoundError",
    "ClassError",
    "ConfigError",
    "DomainError",
    "GenusError",
    "ModelError",
    "MotusError",
    "NoCollisionError",
    "NoSeparatorError",
    "PlotError",
    "RangeError",
    "SequenceError",
]

__version__ = "0.1.0"

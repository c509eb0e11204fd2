"""Coulomb engine: exact symbolic computations in quantized Coulomb branches of quiver gauge theories."""

from .config import EngineConfig, default_config, load_config, parse_config
from .errors import CoulombError, InputError
from .quiver import GaugeData, Quiver, validate
from .report import Check, Report
from .theory import Theory

__all__ = [
    "Check",
    "CoulombError",
    "EngineConfig",
    "GaugeData",
    "InputError",
    "Quiver",
    "Report",
    "Theory",
    "default_config",
    "load_config",
    "parse_config",
    "validate",
]

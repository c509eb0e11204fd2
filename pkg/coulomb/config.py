"""Engine configuration: INI sections read with configparser.

    [quiver]
    vertices = 1 2
    arrows = 1->2
    [gauge]
    v = 1 1
    w = 0 1
    flavours = 2
    [engine]
    h_mode = symbolic
    flavour_values = symbolic
    degree_bound = 6
    dressing_bound = 6
    format = 1
"""

from __future__ import annotations

import configparser
import logging
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from coulomb.errors import ConfigError
from coulomb.quiver import GaugeData, Quiver, validate
from coulomb.theory import Theory

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

_KEYS: Dict[str, Tuple[str, ...]] = {
    "quiver": ("vertices", "arrows"),
    "gauge": ("v", "w", "flavours"),
    "engine": ("h_mode", "flavour_values", "degree_bound", "dressing_bound", "format"),
}
_REQUIRED = {"quiver": ("vertices",), "gauge": ("v", "w")}
_ARROW_RE = re.compile(r"^(-?\d+)->(-?\d+)$")


@dataclass(frozen=True)
class EngineConfig:
    gauge: GaugeData
    h_mode: str = "symbolic"
    flavour_values: Optional[Tuple[Fraction, ...]] = None
    degree_bound: int = 6
    dressing_bound: int = 6
    format: int = FORMAT_VERSION

    def theory(self) -> Theory:
        return Theory.build(self.gauge, self.h_mode, self.flavour_values)

    def describe(self) -> str:
        values = "symbolic" if self.flavour_values is None else " ".join(str(x) for x in self.flavour_values)
        return f"{self.gauge.describe()} h_mode={self.h_mode} flavour_values={values}"


def _line_of(text: str, section: str, key: Optional[str] = None) -> Optional[int]:
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if key is None and current == section:
                return lineno
            continue
        if key is not None and current == section and re.match(rf"{re.escape(key)}\s*[=:]", line):
            return lineno
    return None


def _ints(text: str, what: str, lineno: Optional[int]) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"{what} must be a list of integers, got {text!r}", lineno) from None


def _arrows(text: str, lineno: Optional[int]) -> Tuple[Tuple[int, int], ...]:
    arrows: List[Tuple[int, int]] = []
    for token in text.replace(",", " ").split():
        match = _ARROW_RE.match(token)
        if match is None:
            raise ConfigError(f"arrows are written a->b, got {token!r}", lineno)
        arrows.append((int(match.group(1)), int(match.group(2))))
    return tuple(arrows)


def _positive(text: str, lineno: Optional[int], key: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {text!r}", lineno) from None
    if value <= 0:
        raise ConfigError(f"{key} must be positive", lineno)
    return value


def parse_config(text: str) -> EngineConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    try:
        parser.read_string(text)
    except configparser.DuplicateOptionError as exc:
        raise ConfigError(f"duplicate key {exc.option!r} in [{exc.section}]", exc.lineno) from None
    except configparser.DuplicateSectionError as exc:
        raise ConfigError(f"duplicate section [{exc.section}]", exc.lineno) from None
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError("expected a [section] header", exc.lineno) from None
    except configparser.ParsingError as exc:
        lineno = exc.errors[0][0] if exc.errors else None
        raise ConfigError("cannot parse line", lineno) from None

    for section in parser.sections():
        if section not in _KEYS:
            raise ConfigError(f"unknown section [{section}]", _line_of(text, section))
        for key in parser[section]:
            if key not in _KEYS[section]:
                raise ConfigError(f"unknown key {key!r} in [{section}]", _line_of(text, section, key))
    for section, keys in _REQUIRED.items():
        for key in keys:
            if not parser.has_option(section, key):
                raise ConfigError(f"missing {section}.{key}")

    def get(section: str, key: str, default: str = "") -> Tuple[str, Optional[int]]:
        if parser.has_option(section, key):
            return parser.get(section, key), _line_of(text, section, key)
        return default, None

    vertices_text, vertices_line = get("quiver", "vertices")
    vertices = _ints(vertices_text, "vertices", vertices_line)
    arrows = _arrows(*get("quiver", "arrows"))
    v_text, v_line = get("gauge", "v")
    w_text, w_line = get("gauge", "w")
    v = _ints(v_text, "v", v_line)
    w = _ints(w_text, "w", w_line)
    flavour_text, flavour_line = get("gauge", "flavours")
    flavour_seq = _ints(flavour_text, "flavours", flavour_line) if flavour_text.strip() else None

    # semantic checks (GaugeError) come from validate
    gauge = validate(Quiver(vertices, arrows), v, w, flavour_seq)

    h_mode, h_line = get("engine", "h_mode", "symbolic")
    h_mode = h_mode.strip()
    if h_mode not in ("symbolic", "one"):
        raise ConfigError(f"h_mode must be symbolic or one, got {h_mode!r}", h_line)

    values_text, values_line = get("engine", "flavour_values", "symbolic")
    flavour_values: Optional[Tuple[Fraction, ...]] = None
    if values_text.strip() != "symbolic":
        try:
            flavour_values = tuple(Fraction(x) for x in values_text.replace(",", " ").split())
        except ValueError:
            raise ConfigError(f"flavour_values must be 'symbolic' or rationals, got {values_text!r}", values_line) from None
        if len(flavour_values) != gauge.flavour_count:
            raise ConfigError(
                f"flavour_values needs {gauge.flavour_count} entries, got {len(flavour_values)}", values_line
            )

    degree_bound = _positive(*get("engine", "degree_bound", "6"), key="degree_bound")
    dressing_bound = _positive(*get("engine", "dressing_bound", "6"), key="dressing_bound")
    format_text, format_line = get("engine", "format", str(FORMAT_VERSION))
    version = _positive(format_text, format_line, "format")
    if version != FORMAT_VERSION:
        raise ConfigError(f"unsupported format {version} (this engine writes format {FORMAT_VERSION})", format_line)

    config = EngineConfig(gauge, h_mode, flavour_values, degree_bound, dressing_bound, version)
    log.debug("config: %s", config.describe())
    return config


def load_config(path: str) -> EngineConfig:
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def default_config() -> EngineConfig:
    """A1 with v = 1, w = 1."""
    return EngineConfig(validate(Quiver((1,)), (1,), (1,)))


def try_load_or_default(path: Optional[str]) -> EngineConfig:
    if path and os.path.exists(path):
        return load_config(path)
    if path:
        log.warning("config %s not found, using the A1 default", path)
    return default_config()


__all__ = [
    "EngineConfig",
    "FORMAT_VERSION",
    "default_config",
    "load_config",
    "parse_config",
    "try_load_or_default",
]

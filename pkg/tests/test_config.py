from fractions import Fraction
from pathlib import Path

import pytest

from coulomb.config import FORMAT_VERSION, default_config, load_config, parse_config, try_load_or_default
from coulomb.errors import ConfigError, GaugeError

CONFIGS = Path(__file__).resolve().parent.parent / "assets" / "configs"

_A2 = """\
[quiver]
vertices = 1 2
arrows = 1->2
[gauge]
v = 1 1
w = 1 0
"""


def test_minimal_config() -> None:
    config = parse_config(_A2)
    assert config.gauge.quiver.arrows == ((1, 2),)
    assert config.gauge.flavour_seq == (1,)
    assert config.h_mode == "symbolic"
    assert config.flavour_values is None
    assert config.format == FORMAT_VERSION
    assert "arrows=1->2" in config.describe()


def test_engine_section() -> None:
    config = parse_config(_A2 + "[engine]\nh_mode = one  ; fast\nflavour_values = 1/2\ndegree_bound = 3\n")
    assert config.h_mode == "one"
    assert config.flavour_values == (Fraction(1, 2),)
    assert config.degree_bound == 3
    theory = config.theory()
    assert theory.hbar_one
    assert theory.z(1) == theory.const(Fraction(1, 2))


@pytest.mark.parametrize(
    "text, lineno",
    [
        (_A2 + "colour = red\n", 7),
        (_A2 + "[extras]\nx = 1\n", 7),
        (_A2 + "v = 2 2\n", 7),
        (_A2 + "[engine]\nh_mode = half\n", 8),
        (_A2 + "[engine]\nflavour_values = 1 2\n", 8),
        (_A2 + "[engine]\ndegree_bound = -1\n", 8),
        (_A2 + "[engine]\nformat = 2\n", 8),
        (_A2.replace("1->2", "1=>2"), 3),
        ("vertices = 1\n", 1),
    ],
)
def test_errors_carry_line_numbers(text: str, lineno: int) -> None:
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}: ")


def test_missing_keys_and_bad_gauge() -> None:
    with pytest.raises(ConfigError, match="missing gauge.w"):
        parse_config("[quiver]\nvertices = 1\n[gauge]\nv = 1\n")
    with pytest.raises(GaugeError) as info:
        parse_config("[quiver]\nvertices = 1\narrows = 1->1\n[gauge]\nv = 1\nw = 0\n")
    assert info.value.violations == ["loop at vertex 1"]


def test_shipped_configs_load() -> None:
    for path in sorted(CONFIGS.glob("*.ini")):
        config = load_config(str(path))
        assert config.theory().gauge == config.gauge


def test_fallbacks(tmp_path: Path) -> None:
    assert try_load_or_default(None) == default_config()
    assert try_load_or_default(str(tmp_path / "absent.ini")) == default_config()
    with pytest.raises(ConfigError, match="not found"):
        load_config(str(tmp_path / "absent.ini"))
    broken = tmp_path / "broken.ini"
    broken.write_text("[quiver]\nvertices = 1\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        try_load_or_default(str(broken))

from pathlib import Path

import pytest

from coulomb.cli import SUITES, main

ROOT_DIR = Path(__file__).resolve().parent.parent
CONFIGS = ROOT_DIR / "assets" / "configs"


def _run(capsys, *argv: str):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_commutator(capsys) -> None:
    code, out, _ = _run(capsys, "commutator", "E(1,1)", "F(1,1)")
    assert code == 0
    assert out == ["(h)"]


def test_generators(capsys) -> None:
    code, out, _ = _run(capsys, "generators")
    assert code == 0
    assert out[0] == "A(1,1) = (-w_1_1)"
    assert out[2] == "F(1,1) = (1) * u[1]"


def test_h_series(capsys) -> None:
    code, out, _ = _run(capsys, "h-series", "1", "--order", "1")
    assert code == 0
    assert out[0] == "H[1] degree -1"
    assert out[1] == "u^-1: 1"


def test_decompose_switches_to_hbar_one(capsys) -> None:
    code, out, _ = _run(capsys, "decompose-r", "2")
    assert code == 0
    assert out[0] == "r[+,1,1] * r[+,1,1]"
    assert out[-1] == "decompose-r: PASS (1/1 checks)"


def test_klr_eval(capsys) -> None:
    code, out, _ = _run(capsys, "klr", "eval", str(ROOT_DIR / "assets" / "diagrams" / "a1_wrap_right.klr"))
    assert code == 0
    assert out[0] == "objects: 1 -> 1"
    assert out[1].strip() == "flavour w[1,1] = 1 up"
    assert out[-1] == "(1) * u[1]"


def test_ogz_emit(capsys) -> None:
    code, out, _ = _run(capsys, "--config", str(CONFIGS / "gz3.ini"), "ogz", "emit", "--opposite")
    assert code == 0
    assert len(out) == 8


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "relations"),
        ("verify", "idempotent"),
        ("verify", "dual-bases", "--seed-basis", "schubert"),
        ("verify", "crosscheck"),
        ("verify", "klr", "--pairs", "4"),
        ("verify", "shift"),
        ("verify", "decompose"),
        ("verify", "abelian"),
        ("--jobs", "2", "verify", "product-formula", "--samples", "2"),
        ("--jobs", "2", "chambers", "--bound", "2"),
        ("--config", str(CONFIGS / "gz3.ini"), "verify", "ogz"),
        ("--config", str(CONFIGS / "a2.ini"), "verify", "relations"),
    ],
)
def test_suites_pass(capsys, argv) -> None:
    code, out, _ = _run(capsys, *argv)
    assert code == 0, out
    assert " PASS (" in out[-1]


def test_every_suite_is_listed() -> None:
    assert set(SUITES) == {
        "product-formula",
        "relations",
        "dual-bases",
        "idempotent",
        "crosscheck",
        "klr",
        "ogz",
        "shift",
        "decompose",
        "abelian",
    }


def test_report_flag_prints_every_check(capsys) -> None:
    rel = str(ROOT_DIR / "assets" / "relations" / "a1.rel")
    code, out, _ = _run(capsys, "--report", "--config", str(CONFIGS / "a1.ini"), "verify", "relations", rel)
    assert code == 0
    assert len(out) == 4
    assert all(line.startswith("relations-file: PASS line ") for line in out)


def test_failed_check_exits_one(capsys, tmp_path: Path) -> None:
    rel = tmp_path / "wrong.rel"
    rel.write_text("commutator E(1,1) F(1,1) equals 2 * h\n", encoding="utf-8")
    code, out, _ = _run(capsys, "verify", "relations", str(rel))
    assert code == 1
    assert out[0].startswith("relations-file: FAIL line 1 ")
    assert out[-1] == "relations-file: FAIL (0/1 checks)"


def test_rejected_input_exits_two(capsys, tmp_path: Path) -> None:
    code, _, err = _run(capsys, "monopole", "2")
    assert code == 2
    assert "not minuscule" in err

    code, _, err = _run(capsys, "--config", str(tmp_path / "absent.ini"), "generators")
    assert code == 2
    assert "not found" in err

    looped = tmp_path / "loop.ini"
    looped.write_text("[quiver]\nvertices = 1\narrows = 1->1\n[gauge]\nv = 1\nw = 0\n", encoding="utf-8")
    code, _, err = _run(capsys, "--config", str(looped), "generators")
    assert code == 2
    assert "  - loop at vertex 1" in err


def test_non_chain_ogz_is_rejected(capsys) -> None:
    code, _, err = _run(capsys, "--config", str(CONFIGS / "a2.ini"), "verify", "ogz")
    assert code == 2
    assert "non-chain" in err


def test_klr_slice_limit_reaches_the_suite(capsys) -> None:
    code, out, _ = _run(capsys, "--report", "verify", "klr", "--pairs", "3", "--max-slices", "2")
    assert code == 0
    assert "klr: PASS functoriality pairs=3 functorial=3" in out


def test_dressing_bound_from_config(capsys, tmp_path: Path) -> None:
    config = tmp_path / "a1_v3.ini"
    config.write_text("[quiver]\nvertices = 1\n[gauge]\nv = 3\nw = 1\n[engine]\ndressing_bound = 1\n", encoding="utf-8")
    code, _, err = _run(capsys, "--config", str(config), "verify", "abelian")
    assert code == 1
    assert "increase dressing degree" in err

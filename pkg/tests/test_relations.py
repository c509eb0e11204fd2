from pathlib import Path

import pytest

from coulomb.errors import InputError
from coulomb.quiver import Quiver, validate
from coulomb.relations import check_relations, evaluate_expression, load_relations, parse_relations, tokenize
from coulomb.theory import Theory

ROOT_DIR = Path(__file__).resolve().parent.parent


def _a1() -> Theory:
    return Theory.build(validate(Quiver((1,)), (1,), (1,)))


def test_tokenize() -> None:
    assert tokenize("commutator A(1, 1) F(1,1)") == ["commutator", "A(1,1)", "F(1,1)"]
    assert tokenize("-1/2 * (w_1_1 + h)") == ["-", "1/2", "*", "(", "w_1_1", "+", "h", ")"]
    with pytest.raises(InputError, match="line 3"):
        tokenize("E(1,1) $ F(1,1)", 3)


def test_parse_relations_skips_comments() -> None:
    text = "# header\n\ncommutator E(1,1) F(1,1) equals h  # trailing\n"
    (relation,) = parse_relations(text)
    assert relation.lineno == 3
    assert relation.rhs == ("h",)
    with pytest.raises(InputError, match="exactly one 'equals'"):
        parse_relations("E(1,1) F(1,1)")
    with pytest.raises(InputError, match="empty side"):
        parse_relations("equals h")


def test_expression_evaluation() -> None:
    theory = _a1()
    assert evaluate_expression(theory, "commutator E(1,1) F(1,1)") == theory.scalar(theory.hbar)
    assert evaluate_expression(theory, "poisson A(1,1) F(1,1)") == theory.u(1, 1)
    assert evaluate_expression(theory, "2 * h - (h + h)").is_zero()
    with pytest.raises(InputError):
        evaluate_expression(theory, "E(1,1) *")


def test_a1_relation_file() -> None:
    theory = _a1()
    relations = load_relations(str(ROOT_DIR / "assets" / "relations" / "a1.rel"))
    report = check_relations(theory, relations)
    assert len(report.checks) == 4
    assert report.passed, report.lines()


def test_failing_relation_is_reported() -> None:
    theory = _a1()
    report = check_relations(theory, parse_relations("commutator E(1,1) F(1,1) equals 2 * h\n"))
    assert not report.passed
    (failure,) = report.failures()
    assert failure.name == "line 1"
    assert failure.get("rhs")
    with pytest.raises(InputError, match="not found"):
        load_relations(str(ROOT_DIR / "assets" / "relations" / "missing.rel"))

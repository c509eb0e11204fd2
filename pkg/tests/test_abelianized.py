from itertools import product

import pytest

from coulomb.abelianized import (
    abelian_suite,
    bezout,
    closed_form,
    decompose_r,
    epsilon_sign,
    evaluate,
    parse_tree,
    phi_zero,
    plus_factor,
    r_general,
    r_unit,
    verify_decomposition,
    verify_path_independence,
    verify_product_formula,
    verify_twist,
)
from coulomb.errors import InputError, NotApplicableError, SolveError
from coulomb.quiver import Quiver, validate
from coulomb.theory import Theory


def _a1() -> Theory:
    return Theory.build(validate(Quiver((1,)), (1,), (1,)))


def _a2(hbar_mode: str = "symbolic") -> Theory:
    return Theory.build(validate(Quiver((1, 2), ((1, 2),)), (1, 1), (0, 1)), hbar_mode)


def test_unit_steps_a1() -> None:
    theory = _a1()
    assert r_unit(theory, 1, 1, 1).element == theory.u(1, 1)
    minus = r_unit(theory, -1, 1, 1)
    assert minus.coweight == (-1,)
    assert minus.phi == theory.w(1, 1) - theory.z(1) - theory.half
    with pytest.raises(InputError):
        r_unit(theory, 0, 1, 1)


def test_r_lambda_a2() -> None:
    theory = _a2()
    w2, z = theory.w(2, 1), theory.z(1)
    assert r_general(theory, (1, 1)).element == -theory.shift((1, 1))
    assert r_general(theory, (-1, -1)).element == theory.scalar(w2 - z - theory.half) * theory.shift((-1, -1))
    assert epsilon_sign(theory, (1, 0)) == -1
    assert epsilon_sign(theory, (0, 1)) == 1
    assert phi_zero(theory, (0, 0)) == theory.ring.one


def test_closed_form_matches_steps() -> None:
    theory = _a2()
    for lam in [(2, 0), (1, -1), (-2, 1), (0, -2)]:
        assert closed_form(theory, lam).element == r_general(theory, lam).element


def test_product_formula_window() -> None:
    report = abelian_suite(_a2(), bound=1)
    assert report.passed, [c.line() for c in report.failures()]
    assert verify_product_formula(_a2(), 1, 1, (0, 2), sign=1).passed


def test_step_order_does_not_matter() -> None:
    report = verify_path_independence(_a2(), (2, -1), samples=6, seed=3)
    assert report.passed
    assert len(report.checks) == 6


def test_formula_preconditions() -> None:
    theory = _a2()
    with pytest.raises(NotApplicableError, match="not applicable"):
        plus_factor(theory, 0, (-1, 0))
    with pytest.raises(InputError):
        r_general(theory, (1, 0), steps=[(1, 1)])


def test_twist() -> None:
    theory = _a2()
    x = theory.w(1, 1) * theory.w(2, 1) + theory.z(1)
    assert verify_twist(theory, (1, -1), x).passed


def test_expression_trees() -> None:
    theory = _a1()
    tree = parse_tree(theory, "r[+,1,1] * {w_1_1} + r[-,1,1]")
    expected = theory.u(1, 1) * theory.scalar(theory.w(1, 1)) + r_unit(theory, -1, 1, 1).element
    assert evaluate(theory, tree) == expected
    assert evaluate(theory, parse_tree(theory, tree.text())) == expected
    with pytest.raises(InputError):
        parse_tree(theory, "r[+,1,1] *")


def test_bezout() -> None:
    theory = _a1().at_hbar_one()
    w = theory.w(1, 1)
    factors = [w, w - 1]
    coefficients = bezout(theory, factors, 2)
    assert sum((c * f for c, f in zip(coefficients, factors)), theory.ring.zero) == theory.ring.one
    with pytest.raises(SolveError, match="increase degree bound"):
        bezout(theory, [w, w * (w - 1)], 2)


def test_decompose_needs_hbar_one() -> None:
    with pytest.raises(InputError):
        decompose_r(_a2(), (1, 1))


def test_decompose_reevaluates_exactly() -> None:
    theory = _a2("one")
    for lam in [(-1, -1), (1, 1), (2, -1)]:
        report = verify_decomposition(theory, lam)
        assert report.passed, report.lines()


def _chain() -> Theory:
    return Theory.build(validate(Quiver((1, 2, 3), ((1, 2), (2, 3))), (1, 2, 1), (1, 0, 2)))


def test_product_formula_on_a_chain() -> None:
    theory = _chain()
    window = [lam for lam in product(range(-3, 4), repeat=theory.gauge.size) if sum(map(abs, lam)) <= 3]
    for lam in window:
        for a, (i, r) in enumerate(theory.gauge.pairs):
            for sign in (1, -1):
                if sign * lam[a] >= 0:
                    report = verify_product_formula(theory, i, r, lam, sign)
                    assert report.passed, report.lines()


@pytest.mark.parametrize("lam", [(1, 2, -1, 1), (-2, 1, 0, 3), (3, -3, 2, -1)])
def test_ten_step_orders_on_a_chain(lam: tuple) -> None:
    report = verify_path_independence(_chain(), lam, seed=7)
    assert len(report.checks) == 10
    assert report.passed


@pytest.mark.parametrize("lam", [(3, 0), (0, -3), (-3, 1), (1, 3)])
def test_decompose_three_steps(lam: tuple) -> None:
    report = verify_decomposition(_a2("one"), lam)
    assert report.passed, report.lines()

import pytest

from coulomb.errors import InputError
from coulomb.nilhecke import (
    demazure,
    divided_difference,
    dual_bases,
    full_idempotent_certificate,
    geometric_symmetrizer,
    pairing,
    schubert,
    staircase_basis,
    symmetrizer,
    verify_dual_bases,
    verify_idempotent,
    weyl_order,
)
from coulomb.quiver import Quiver, validate
from coulomb.theory import Theory


def _a1(v: int = 2, w: int = 0) -> Theory:
    return Theory.build(validate(Quiver((1,)), (v,), (w,)))


def test_symmetrizer_is_idempotent() -> None:
    theory = _a1()
    e = symmetrizer(theory)
    assert weyl_order(theory) == 2
    assert e * e == e
    d = divided_difference(theory, 1, 1)
    assert (d * e).is_zero()
    assert not (e * d).is_zero()


def test_geometric_symmetrizer_sign() -> None:
    theory = _a1()
    element, sign = geometric_symmetrizer(theory)
    assert sign == 1
    assert element == symmetrizer(theory)


def test_nil_square_and_braid() -> None:
    theory = _a1(v=3)
    d1 = divided_difference(theory, 1, 1)
    d2 = divided_difference(theory, 1, 2)
    assert (d1 * d1).is_zero()
    assert d1 * d2 * d1 == d2 * d1 * d2
    assert demazure(theory, [(1, 1), (1, 2), (1, 1)]) == d1 * d2 * d1


def test_non_reduced_word_is_rejected() -> None:
    theory = _a1()
    with pytest.raises(InputError, match="non-reduced"):
        demazure(theory, [(1, 1), (1, 1)])
    with pytest.raises(InputError):
        divided_difference(theory, 1, 2)


def test_pairing_and_schubert() -> None:
    theory = _a1()
    w1, w2 = theory.w(1, 1), theory.w(1, 2)
    assert staircase_basis(theory) == [theory.ring.one, w1]
    assert pairing(theory, theory.ring.one, w1) == theory.ring.one
    assert pairing(theory, w1, w1) == w1 + w2
    assert schubert(theory, (1, 0), 1) == w1
    assert schubert(theory, (0, 1), 1) == theory.ring.one


def test_dual_bases_expand_the_unit() -> None:
    theory = _a1(w=1)
    for seed in ("staircase", "schubert"):
        bases = dual_bases(theory, seed)
        assert bases.expansion(theory) == theory.unit
        assert verify_dual_bases(theory, seed).passed
    with pytest.raises(InputError):
        dual_bases(theory, "monomial")


def test_idempotent_suite() -> None:
    theory = _a1()
    report = verify_idempotent(theory)
    assert report.passed, report.lines()
    names = {check.name for check in report.checks}
    assert {"e^2=e", "geometric-form", "nil-square[1,1]", "matrix-units", "unit-in-ideal"} <= names
    certificate = full_idempotent_certificate(theory, "schubert")
    assert certificate.passed


@pytest.mark.parametrize(
    "quiver, v, order",
    [
        (Quiver((1,)), (3,), 6),
        (Quiver((1, 2)), (2, 2), 4),
    ],
    ids=["S3", "S2xS2"],
)
def test_larger_weyl_groups(quiver: Quiver, v: tuple, order: int) -> None:
    theory = Theory.build(validate(quiver, v, (0,) * len(v)))
    for seed in ("staircase", "schubert"):
        report = verify_dual_bases(theory, seed)
        assert report.passed, report.lines()
    report = verify_idempotent(theory)
    assert report.passed, report.lines()
    assert weyl_order(theory) == order

import pytest

from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.smash import sign_between
from coulomb.algebra.weyl import ExtAffineWeyl, perm_from_word, perm_length, reduced_word
from coulomb.errors import AdmissibilityError, InputError
from coulomb.quiver import Quiver, validate
from coulomb.theory import Theory


def _a1(v: int = 1, w: int = 1) -> Theory:
    return Theory.build(validate(Quiver((1,)), (v,), (w,)))


def _a2() -> Theory:
    return Theory.build(validate(Quiver((1, 2), ((1, 2),)), (1, 1), (0, 1)))


def test_group_inverse() -> None:
    g = ExtAffineWeyl((1, 0), (2, -1))
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()
    assert (g ** 3) * (g ** -3) == ExtAffineWeyl.identity(2)


def test_reflection_negates_its_root() -> None:
    theory = _a1(v=2)
    ring = theory.ring
    r = ExtAffineWeyl.reflection(2, 0, 1, 1)
    root = theory.w(1, 1) - theory.w(1, 2) - theory.hbar
    assert r.act_poly(ring, root) == -root
    assert (r * r).is_identity()


def test_shift_acts_by_h() -> None:
    theory = _a1()
    u = ExtAffineWeyl.from_shift((1,))
    assert u.act_poly(theory.ring, theory.w(1, 1)) == theory.w(1, 1) + theory.hbar


def test_reduced_words() -> None:
    perm = (2, 0, 1)
    word = reduced_word(perm)
    assert len(word) == perm_length(perm) == 2
    assert perm_from_word(3, word) == perm


def test_linform_canonical_sign() -> None:
    assert LinForm.make(1, 2, 1, 3) == (-1, LinForm(1, 1, 2, -3))
    with pytest.raises(AdmissibilityError):
        LinForm(1, 2, 1, 0)
    with pytest.raises(AdmissibilityError):
        LinForm.between(_a2().ring, 0, 1, 0)


def test_locrat_cancels_admissible_factors() -> None:
    theory = _a1(v=2)
    ring = theory.ring
    form = LinForm(1, 1, 2, 0)
    value = LocRat.reduce(ring, form.poly(ring) * theory.w(1, 1), {form: 1})
    assert value == theory.frac(theory.w(1, 1))
    assert value.is_polynomial()

    kept = LocRat.reduce(ring, theory.w(1, 1), {form: 2})
    assert kept.den_dict() == {form: 2}
    with pytest.raises(InputError):
        LocRat.reduce(ring, ring.one, {form: -1})


def test_shift_commutes_past_coefficients() -> None:
    theory = _a1()
    w = theory.w(1, 1)
    u = theory.u(1, 1)
    assert u * theory.scalar(w) == theory.scalar(w + theory.hbar) * u
    assert theory.u(1, 1, -1) * u == theory.unit


def test_divided_difference_acts_on_functions() -> None:
    from coulomb.nilhecke import divided_difference

    theory = _a1(v=2)
    d = divided_difference(theory, 1, 1)
    assert d.act_on_function(theory.w(1, 1)) == LocRat.one(theory.ring)
    assert d.act_on_function(theory.w(1, 1) + theory.w(1, 2)).is_zero()
    assert (d * d).is_zero()


def test_serialize_and_parse() -> None:
    theory = _a1()
    x = theory.scalar(theory.w(1, 1) - theory.z(1) - theory.half) * theory.u(1, 1, -1)
    assert theory.parse(x.serialize()) == x
    assert theory.u(1, 1).serialize() == "(1) * u[1]"
    assert theory.zero.serialize() == "0"
    assert theory.parse("0").is_zero()
    with pytest.raises(InputError):
        theory.parse("u[1]")


def test_sign_between() -> None:
    theory = _a1()
    x = theory.u(1, 1)
    assert sign_between(x, x) == 1
    assert sign_between(x, -x) == -1
    assert sign_between(x, x + theory.unit) is None


def test_gradings_and_h_zero() -> None:
    theory = _a1()
    grading = theory.u(1, 1).gradings()
    assert grading.weight == (1,)
    assert grading.degree == 0
    assert grading.homogeneous
    assert not (theory.u(1, 1) + theory.unit).gradings().homogeneous
    assert (theory.scalar(theory.hbar) * theory.u(1, 1)).specialize_h_zero().is_zero()


def test_hbar_one_mode() -> None:
    theory = _a1().at_hbar_one()
    assert theory.hbar_one
    assert theory.poly("w_1_1 + h") == theory.w(1, 1) + 1

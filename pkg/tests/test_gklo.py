import pytest

from coulomb.abelianized import r_general
from coulomb.errors import InputError, InvarianceError, SolveError
from coulomb.gklo import (
    YangianGenerator,
    crosscheck_spherical,
    dressed_monopole,
    enlarged_theory,
    generators,
    h_series,
    image,
    invariant_test_polys,
    iwahori_monopole,
    monopole_spec,
    poisson_bracket,
    shift_check,
    verify_abelian_from_monopoles,
    verify_relations,
)
from coulomb.nilhecke import symmetrizer
from coulomb.quiver import Quiver, validate, varpi, varpi_star
from coulomb.theory import Theory


def _a1(v: int = 1, w: int = 1) -> Theory:
    return Theory.build(validate(Quiver((1,)), (v,), (w,)))


def _a2() -> Theory:
    return Theory.build(validate(Quiver((1, 2), ((1, 2),)), (1, 1), (0, 1)))


def _gen(text: str) -> YangianGenerator:
    return YangianGenerator.parse(text)


def test_generator_tokens() -> None:
    assert _gen("F(1, 2)") == YangianGenerator("F", 1, 2)
    assert str(_gen("E(2,1)")) == "E(2,1)"
    with pytest.raises(InputError):
        _gen("G(1,1)")
    with pytest.raises(InputError):
        image(_a1(), _gen("A(1,2)"))
    assert [str(g) for g in generators(_a1())] == ["A(1,1)", "E(1,1)", "F(1,1)"]


def test_images_a1() -> None:
    theory = _a1()
    w, z = theory.w(1, 1), theory.z(1)
    assert image(theory, _gen("A(1,1)")) == theory.scalar(-w)
    assert image(theory, _gen("F(1,1)")) == theory.u(1, 1)
    assert image(theory, _gen("E(1,1)")) == -(theory.scalar(w - z - theory.half) * theory.u(1, 1, -1))
    assert image(theory, _gen("F(1,2)")) == theory.scalar(w) * theory.u(1, 1)


def test_commutators_a1() -> None:
    theory = _a1()
    a, e, f = (image(theory, _gen(t)) for t in ("A(1,1)", "E(1,1)", "F(1,1)"))
    h = theory.scalar(theory.hbar)
    assert e.commutator(f) == h
    assert a.commutator(f) == h * f
    assert a.commutator(e) == -(h * e)


def test_poisson_bracket() -> None:
    theory = _a1()
    a, f = image(theory, _gen("A(1,1)")), image(theory, _gen("F(1,1)"))
    assert poisson_bracket(theory, a, f) == f
    assert poisson_bracket(theory, f, a) == -f
    with pytest.raises(InputError):
        poisson_bracket(theory.at_hbar_one(), a, f)


def test_relation_suite() -> None:
    for theory in (_a1(), _a1(v=2), _a2()):
        report = verify_relations(theory)
        assert report.passed, [c.line() for c in report.failures()]


def test_images_at_hbar_one() -> None:
    theory = _a1().at_hbar_one()
    e, f = image(theory, _gen("E(1,1)")), image(theory, _gen("F(1,1)"))
    assert e.commutator(f) == theory.unit


def test_monopole_preconditions() -> None:
    theory = _a1(v=2, w=0)
    with pytest.raises(InputError, match="not minuscule"):
        monopole_spec(theory, (2, 0))
    with pytest.raises(InvarianceError):
        monopole_spec(theory, (0, 0), theory.w(1, 1))
    with pytest.raises(InputError, match="dominant"):
        iwahori_monopole(theory, monopole_spec(theory, (0, 1)))


def test_dressed_monopole_weyl_sum() -> None:
    theory = _a1(v=2, w=0)
    w1, w2 = theory.w(1, 1), theory.w(1, 2)
    element = dressed_monopole(theory, monopole_spec(theory, (1, 0)))
    assert theory.scalar(w1 - w2) * element == theory.shift((1, 0)) - theory.shift((0, 1))


def test_zero_coweight_monopole() -> None:
    theory = _a1(v=2, w=1)
    spec = monopole_spec(theory, (0, 0))
    assert dressed_monopole(theory, spec) == theory.unit
    assert iwahori_monopole(theory, spec) == symmetrizer(theory)


def test_iwahori_against_weyl_sum() -> None:
    theory = _a1(v=2, w=1)
    for lam in [(1, 0), (0, -1)]:
        report = crosscheck_spherical(theory, monopole_spec(theory, lam))
        assert report.passed, report.lines()
        assert report.checks[-1].get("recorded") == "+1"


def test_abelian_classes_from_monopoles() -> None:
    theory = _a1(v=2, w=1)
    for mu in [(1, 0), (0, -1)]:
        assert verify_abelian_from_monopoles(theory, mu).passed
    assert r_general(theory, (1, 0)).element == theory.shift((1, 0))


def test_h_series_a1() -> None:
    theory = _a1()
    w, z, h = theory.w(1, 1), theory.z(1), theory.hbar
    series = h_series(theory, 1, order=2)
    assert series.degree == -1
    assert series.coefficient(-1) == theory.ring.one
    assert series.coefficient(-2) == 2 * w + h - z
    assert series.coefficient(0) is None
    assert len(series.lines()) == 2
    with pytest.raises(InputError):
        h_series(theory, 1, order=-1)


def test_shift_homomorphism() -> None:
    theory = _a1()
    assert enlarged_theory(theory, (1,)).gauge.w == (2,)
    report = shift_check(theory, (1,), max_p=1)
    assert report.passed, report.lines()
    status = {check.name: check.get("status") for check in report.checks}
    assert status["E(1,1)"] == "twisted"
    assert status["F(1,1)"] == "preserved"
    assert status["A(1,1)"] == "preserved"


def test_crosscheck_with_cubic_test_polynomials() -> None:
    theory = Theory.build(validate(Quiver((1, 2), ((1, 2),)), (2, 1), (1, 0)))
    polys = invariant_test_polys(theory, 3)
    assert max(p.degree(theory.w(1, 1)) for p in polys) == 3
    gauge = theory.gauge
    for i in gauge.vertices:
        vi = gauge.v_at(i)
        for lam, x in ((varpi(gauge, i, 1), theory.w(i, 1)), (varpi_star(gauge, i, 1), theory.w(i, vi))):
            for k in range(3):
                report = crosscheck_spherical(theory, monopole_spec(theory, lam, x ** k), polys)
                assert report.passed, report.lines()


def test_dressing_bound_is_honoured() -> None:
    theory = _a1(v=2, w=1)
    with pytest.raises(SolveError, match="increase dressing degree"):
        verify_abelian_from_monopoles(theory, (1, 0), dressing_bound=0)
    assert verify_abelian_from_monopoles(theory, (1, 0), dressing_bound=1).passed

import pytest

from coulomb.errors import InputError
from coulomb.ogz import (
    OgzData,
    antiinvolution,
    compare_with_yangian,
    emit,
    flavour_invariant,
    gz_variable,
    ogz_generators,
    verify_ogz,
)
from coulomb.quiver import Quiver, validate


def test_data_checks() -> None:
    with pytest.raises(InputError):
        OgzData(1, (1,))
    with pytest.raises(InputError):
        OgzData(3, (1, 2))
    with pytest.raises(InputError):
        OgzData(2, (1, -1))


def test_chain_gauge_round_trip() -> None:
    data = OgzData(3, (1, 2, 2))
    gauge = data.gauge()
    assert gauge.quiver.arrows == ((2, 1),)
    assert gauge.v == (1, 2)
    assert gauge.w == (0, 2)
    assert OgzData.from_gauge(gauge) == data
    with pytest.raises(InputError, match="non-chain"):
        OgzData.from_gauge(validate(Quiver((1, 2), ((1, 2),)), (1, 2), (0, 2)))


def test_gz_variables() -> None:
    data = OgzData(2, (1, 1))
    theory = data.theory()
    assert gz_variable(theory, 2, 1, 1) == -theory.w(1, 1) - theory.half
    assert gz_variable(theory, 2, 2, 1) == -theory.z(1) - theory.hbar


def test_generators_n2() -> None:
    data = OgzData(2, (1, 1))
    theory = data.theory()
    gens = ogz_generators(data, theory)
    assert gens[("-", 1)] == theory.u(1, 1)
    expected = -(theory.scalar(theory.w(1, 1) - theory.z(1) - theory.half) * theory.u(1, 1, -1))
    assert gens[("+", 1)] == expected


def test_yangian_signs() -> None:
    for data in (OgzData(2, (1, 1)), OgzData(3, (1, 2, 2))):
        report = compare_with_yangian(data, data.theory())
        assert report.passed, report.lines()
        assert {check.get("sign") for check in report.checks} == {"+1"}


def test_opposite_presentation() -> None:
    data = OgzData(3, (1, 2, 2))
    theory = data.theory()
    gens = ogz_generators(data, theory)
    opposite = ogz_generators(data.flip(), theory)
    assert data.flip().opposite
    assert opposite[("+", 2)] == antiinvolution(gens[("-", 2)])
    assert antiinvolution(antiinvolution(gens[("+", 2)])) == gens[("+", 2)]
    assert antiinvolution(theory.u(1, 1)) == theory.u(1, 1, -1)


def test_verify_suite() -> None:
    data = OgzData(3, (1, 2, 2))
    theory = data.theory()
    report = verify_ogz(data, theory)
    assert report.passed, report.lines()
    assert flavour_invariant(data, theory, ogz_generators(data, theory)[("+", 2)])
    assert not flavour_invariant(data, theory, theory.scalar(theory.z(1)))


def test_emit_lines() -> None:
    data = OgzData(2, (1, 1))
    lines = emit(data, data.theory())
    assert len(lines) == 4
    assert lines[0].startswith("X[1]+ right: ")
    assert lines[3] == "X[1]- left: u[1] * (1)"

import pytest

from coulomb.errors import GaugeError, InputError
from coulomb.quiver import (
    Quiver,
    canonical_sequence,
    chamber_decomposition,
    chamber_generators,
    chambers,
    check_sequence,
    covering_chamber,
    dominant,
    is_dominant,
    is_minuscule,
    minuscule_data,
    orbit,
    sequence_pairs,
    validate,
    varpi,
    varpi_star,
    verify_chamber,
)


def _a2(v=(1, 1), w=(0, 1)):
    return validate(Quiver((1, 2), ((1, 2),)), v, w)


def test_validate_lists_every_violation() -> None:
    with pytest.raises(GaugeError) as info:
        validate(Quiver((1, 2), ((1, 1), (1, 2), (2, 1))), (1, 1), (0, 0))
    assert str(info.value) == "non-simple quiver"
    assert "loop at vertex 1" in info.value.violations
    assert "multiple edges between 2 and 1" in info.value.violations


def test_validate_checks_framing() -> None:
    with pytest.raises(GaugeError) as info:
        validate(Quiver((1,)), (1,), (2,), (1,))
    assert str(info.value) == "bad framing"
    assert info.value.violations == ["vertex 1 has w=2 but 1 flavours"]
    gauge = validate(Quiver((1, 2), ((1, 2),)), (1, 1), (1, 1), (2, 1))
    assert gauge.flavours_at(1) == (2,)
    assert gauge.flavours_at(2) == (1,)


def test_pairs_and_indices() -> None:
    gauge = _a2(v=(2, 1))
    assert gauge.pairs == ((1, 1), (1, 2), (2, 1))
    assert gauge.index(2, 1) == 2
    assert gauge.block(1) == (0, 1)
    assert gauge.out_dimension(1) == 1
    with pytest.raises(InputError):
        gauge.index(2, 2)


def test_fundamental_coweights() -> None:
    gauge = _a2(v=(2, 1))
    assert varpi(gauge, 1, 1) == (1, 0, 0)
    assert varpi_star(gauge, 1, 1) == (0, -1, 0)
    assert is_dominant(gauge, varpi_star(gauge, 1, 1))
    assert dominant(gauge, (0, 1, 0)) == (1, 0, 0)
    assert orbit(gauge, (1, 0, 0)) == [(1, 0, 0), (0, 1, 0)]
    with pytest.raises(InputError):
        varpi(gauge, 1, 3)


def test_minuscule() -> None:
    gauge = _a2(v=(2, 1))
    assert is_minuscule(gauge, (1, 0, -1))
    assert not is_minuscule(gauge, (1, -1, 0))
    assert not is_minuscule(gauge, (2, 0, 0))

    data = minuscule_data(gauge, (0, 0, 0))
    assert data.w_lambda == (1, 0, 2)
    assert data.w0_w_lambda == (0, 1, 2)
    assert data.w0_w_lambda_word == ()

    data = minuscule_data(gauge, (1, 0, 0))
    assert data.stabilizer_generators == ()
    assert len(data.w0_w_lambda_word) == 1


def test_chambers_cover_their_points() -> None:
    gauge = _a2()
    reports = [verify_chamber(gauge, order, split, bound=2) for order, split in chambers(gauge)]
    assert len(reports) == 2 * 3
    assert all(r.passed for r in reports)
    assert all(r.points_checked > 0 for r in reports)


def test_chamber_decomposition() -> None:
    gauge = _a2()
    order, split = covering_chamber(gauge, (2, -1))
    assert split == 1
    generators = chamber_generators(gauge, order, split)
    assert generators == [(1, 0), (0, -1)]
    assert chamber_decomposition(gauge, (2, -1), order, split) == [2, 1]
    assert chamber_decomposition(gauge, (-1, 2), order, split) is None


def test_canonical_sequence() -> None:
    assert canonical_sequence(_a2(v=(1, 2))) == (1, 2, 2)
    reversed_a2 = validate(Quiver((1, 2), ((2, 1),)), (1, 2), (0, 0))
    assert canonical_sequence(reversed_a2) == (2, 2, 1)
    assert sequence_pairs((2, 1, 2)) == ((2, 1), (1, 1), (2, 2))


def test_cyclic_quiver_needs_reorientation() -> None:
    gauge = validate(Quiver((1, 2, 3), ((1, 2), (2, 3), (3, 1))), (1, 1, 1), (1, 0, 0))
    with pytest.raises(GaugeError, match="cyclic"):
        canonical_sequence(gauge)
    acyclic = gauge.quiver.reoriented((3, 1))
    assert acyclic.is_acyclic()


def test_check_sequence() -> None:
    gauge = _a2(v=(1, 2))
    assert check_sequence(gauge, (2, 1, 2)) == (2, 1, 2)
    with pytest.raises(InputError):
        check_sequence(gauge, (1, 2))

from pathlib import Path

import pytest

from coulomb.errors import DegenerateDiagramError, DiagramError
from coulomb.klr import (
    CrossingEvent,
    CylDiagram,
    basis_diagrams,
    dot,
    evaluate,
    isotopy_check,
    leading_element,
    load_diagram,
    parse_diagram,
    psi,
    sigma,
    slide_variants,
    stack,
    unroll,
    verify_klr,
    wrap_diagram,
    wrap_target,
)
from coulomb.nilhecke import divided_difference, symmetrizer
from coulomb.quiver import Quiver, validate
from coulomb.theory import Theory

DIAGRAMS = Path(__file__).resolve().parent.parent / "assets" / "diagrams"


def _a1(v: int = 1, w: int = 1) -> Theory:
    return Theory.build(validate(Quiver((1,)), (v,), (w,)))


def _a2() -> Theory:
    return Theory.build(validate(Quiver((1, 2), ((1, 2),)), (1, 1), (0, 1)))


def test_wrapping_a1() -> None:
    theory = _a1()
    right = load_diagram(theory.gauge, str(DIAGRAMS / "a1_wrap_right.klr"))
    left = load_diagram(theory.gauge, str(DIAGRAMS / "a1_wrap_left.klr"))
    assert evaluate(theory, right) == theory.u(1, 1)
    expected = theory.scalar(theory.w(1, 1) - theory.z(1) - theory.half) * theory.u(1, 1, -1)
    assert evaluate(theory, left) == expected
    (event,) = unroll(theory.gauge, right).events
    assert event == CrossingEvent("flavour", 0, None, 1, 1)


def test_dots() -> None:
    theory = _a1()
    w = theory.w(1, 1)
    assert evaluate(theory, CylDiagram((1,), (dot(1),))) == theory.scalar(w)
    dotted_wrap = wrap_diagram(theory.gauge, 1, 2, "F")
    assert evaluate(theory, dotted_wrap) == theory.scalar(w) * theory.u(1, 1)


def test_same_vertex_crossing() -> None:
    theory = _a1(v=2, w=0)
    single = CylDiagram((1, 1), (psi(1),))
    assert evaluate(theory, single) == -divided_difference(theory, 1, 1)
    twice = load_diagram(theory.gauge, str(DIAGRAMS / "a1v2_crossing.klr"))
    assert evaluate(theory, twice).is_zero()


def test_arrow_crossings() -> None:
    theory = _a2()
    once = CylDiagram((1, 2), (psi(1),))
    (event,) = unroll(theory.gauge, once).events
    assert event.describe(theory.gauge) == "arrow w[2,1] - w[1,1] = 0 down"
    q = theory.scalar(theory.w(2, 1) - theory.w(1, 1) + theory.half)
    assert evaluate(theory, once) == q
    assert evaluate(theory, once.then(psi(1))) == q


def test_stacking_is_functorial() -> None:
    theory = _a2()
    lower = CylDiagram((1, 2), (psi(1), sigma(1)))
    upper = CylDiagram(lower.top, (dot(2), sigma(-1), psi(1)))
    assert evaluate(theory, stack(upper, lower)) == evaluate(theory, upper) * evaluate(theory, lower)
    with pytest.raises(DiagramError, match="label mismatch"):
        stack(CylDiagram((1, 2)), CylDiagram((1, 2), (psi(1),)))


def test_parse_diagram() -> None:
    gauge = _a2().gauge
    diagram = load_diagram(gauge, str(DIAGRAMS / "a2_slices.klr"))
    assert diagram.bottom == (1, 2)
    assert diagram.objects() == [(1, 2), (2, 1), (1, 2), (1, 2)]
    assert parse_diagram(gauge, diagram.text()) == diagram


@pytest.mark.parametrize(
    "text, error",
    [
        ("psi 1\n", DiagramError),
        ("objects: 1 2\npsi 2\n", DiagramError),
        ("objects: 1 2\ntwist 1\n", DiagramError),
        ("objects: 1 1 2\n", DiagramError),
        ("objects: 1 2\npsi 1\ntop: 1 2\n", DiagramError),
        ("objects: 1 2\nsigma +; dot 1\n", DegenerateDiagramError),
    ],
)
def test_parse_errors(text: str, error: type) -> None:
    with pytest.raises(error):
        parse_diagram(_a2().gauge, text)


def test_overlapping_pieces_are_degenerate() -> None:
    gauge = _a1(v=3, w=0).gauge
    with pytest.raises(DegenerateDiagramError, match="degenerate diagram"):
        parse_diagram(gauge, "objects: 1 1 1\npsi 1; psi 2\n")


def test_isotopies_preserve_evaluation() -> None:
    theory = _a1(v=3, w=1)
    diagram = CylDiagram((1, 1, 1), (psi(1), dot(3), psi(2)))
    variants = list(slide_variants(diagram))
    assert len(variants) == 2 + 4
    for variant in variants:
        assert isotopy_check(theory, diagram, variant).passed


def test_wrap_targets() -> None:
    theory = _a1(v=2, w=1)
    e = symmetrizer(theory)
    for kind in ("F", "E"):
        value = evaluate(theory, wrap_diagram(theory.gauge, 1, 1, kind)) * e
        assert value == -wrap_target(theory, 1, 1, kind)
    with pytest.raises(DiagramError):
        wrap_diagram(theory.gauge, 1, 1, "G")


def test_basis_diagrams_a1() -> None:
    theory = _a1()
    diagrams = basis_diagrams(theory.gauge, (1,), (1,), bound=1)
    assert len(diagrams) == 3
    assert diagrams[0].slices == ()
    leaders = [leading_element(theory, d)[0] for d in diagrams]
    assert None not in leaders
    assert len(set(leaders)) == 3


@pytest.mark.parametrize("theory", [_a1(), _a1(v=2, w=1), _a2()])
def test_verify_suite(theory: Theory) -> None:
    report = verify_klr(theory, seed=1, pairs=8)
    assert report.passed, [c.line() for c in report.failures()]


def test_default_suite_scale() -> None:
    report = verify_klr(_a1(v=2, w=1), seed=5)
    assert report.passed, [c.line() for c in report.failures()]
    (functoriality,) = [c for c in report.checks if c.name == "functoriality"]
    assert functoriality.get("pairs") == "100"
    assert functoriality.get("functorial") == "100"

"""Command-line front end.

    python -m coulomb --config assets/configs/a1.ini verify relations
    python -m coulomb commutator "E(1,1)" "F(1,1)"
    python -m coulomb klr eval assets/diagrams/a1_wrap_right.klr

Exit codes: 0 every check passed, 1 a check failed, 2 rejected input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

from coulomb import abelianized, gklo, klr, nilhecke, ogz, quiver, relations
from coulomb.config import EngineConfig, default_config, load_config
from coulomb.errors import CoulombError, GaugeError, InputError
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

T = TypeVar("T")


def _coweight(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"coweights are integer lists such as '1,0', got {text!r}") from None


def _fan_out(jobs: int, fn: Callable[[T], Report], items: Iterable[T]) -> List[Report]:
    """Run independent checks on worker threads; results keep the input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _merge(suite: str, reports: Iterable[Report]) -> Report:
    merged = Report(suite)
    for report in reports:
        merged.extend(report.checks)
    return merged


def _emit(report: Report, args: argparse.Namespace) -> int:
    if args.report:
        for line in report.lines():
            print(line)
    else:
        for line in report.lines():
            if line.split(": ", 1)[1].startswith("FAIL"):
                print(line)
        failed = len(report.failures())
        total = len(report.checks)
        status = "PASS" if not failed else "FAIL"
        print(f"{report.suite}: {status} ({total - failed}/{total} checks)")
    return 0 if report.passed else 1


# -- commands -------------------------------------------------------------------------


def cmd_generators(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    for gen in gklo.generators(theory, args.max_p):
        element = gklo.image(theory, gen)
        text = element.format_left() if args.left else element.serialize()
        print(f"{gen} = {text}")
    return 0


def _binary(op: str) -> Callable[[argparse.Namespace, EngineConfig, Theory], int]:
    def run(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
        x = relations.evaluate_expression(theory, args.x)
        y = relations.evaluate_expression(theory, args.y)
        if op == "mul":
            result = x * y
        elif op == "commutator":
            result = x.commutator(y)
        else:
            result = gklo.poisson_bracket(theory, x, y)
        print(result.format_left() if args.left else result.serialize())
        return 0

    return run


def cmd_h_series(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    series = gklo.h_series(theory, args.vertex, args.order)
    print(f"H[{series.vertex}] degree {series.degree}")
    for line in series.lines():
        print(line)
    return 0


def cmd_monopole(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    dressing = theory.poly(args.dressing) if args.dressing else None
    spec = gklo.monopole_spec(theory, _coweight(args.coweight), dressing)
    element = gklo.iwahori_monopole(theory, spec) if args.iwahori else gklo.dressed_monopole(theory, spec)
    print(element.serialize())
    return 0


def _h_one(theory: Theory) -> Theory:
    if theory.hbar_one:
        return theory
    log.info("switching to h = 1 for the Bézout decomposition")
    return theory.at_hbar_one()


def cmd_decompose(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    theory = _h_one(theory)
    lam = _coweight(args.coweight)
    tree = abelianized.decompose_r(theory, lam, config.degree_bound)
    print(tree.text())
    return _emit(abelianized.verify_decomposition(theory, lam, config.degree_bound), args)


def cmd_chambers(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    gauge = config.gauge

    def check(chamber) -> Report:
        order, split = chamber
        result = quiver.verify_chamber(gauge, order, split, args.bound)
        report = Report("chambers")
        name = "order=" + ",".join(f"{i}.{r}" for i, r in order) + f" split={split}"
        detail = {"generators": " ".join(",".join(map(str, g)) for g in result.generators)}
        detail["points"] = result.points_checked
        if result.failures:
            detail["first_failure"] = ",".join(map(str, result.failures[0]))
        report.add(name, result.passed, **detail)
        return report

    return _emit(_merge("chambers", _fan_out(args.jobs, check, quiver.chambers(gauge))), args)


def cmd_klr_eval(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    diagram = klr.load_diagram(config.gauge, args.file)
    path = klr.unroll(config.gauge, diagram)
    print(f"objects: {' '.join(map(str, diagram.bottom))} -> {' '.join(map(str, diagram.top))}")
    for step in path.steps:
        print(f"  {step.describe(config.gauge)}")
    print(f"terminal: perm={path.terminal.perm} shift={path.terminal.shift}")
    print(klr.evaluate_path(theory, path).serialize())
    return 0


def cmd_klr_basis(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    seq = quiver.canonical_sequence(config.gauge)
    for diagram in klr.basis_diagrams(config.gauge, seq, seq, args.bound):
        leader, _ = klr.leading_element(theory, diagram)
        pieces = " | ".join("; ".join(p.text() for p in s) for s in diagram.slices) or "e"
        lead = "shared" if leader is None else f"perm={leader.perm} shift={leader.shift}"
        print(f"{pieces}  leading {lead}")
    return 0


def cmd_ogz_emit(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    data = ogz.OgzData.from_gauge(config.gauge)
    if args.opposite:
        data = data.flip()
    for line in ogz.emit(data, theory):
        print(line)
    return 0


# -- verification suites -------------------------------------------------------------------


def _window(theory: Theory, bound: int) -> List[tuple]:
    return list(product(range(-bound, bound + 1), repeat=theory.gauge.size))


def verify_product_formula(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    def check(lam) -> Report:
        report = Report("product-formula")
        for a, (i, r) in enumerate(theory.gauge.pairs):
            for sign in (1, -1):
                if sign * lam[a] >= 0:
                    report.extend(abelianized.verify_product_formula(theory, i, r, lam, sign).checks)
        report.extend(abelianized.verify_path_independence(theory, lam, args.samples, args.seed).checks)
        return report

    return _merge("product-formula", _fan_out(args.jobs, check, _window(theory, args.bound)))


def verify_relations(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    if args.file:
        return relations.check_relations(theory, relations.load_relations(args.file))
    return gklo.verify_relations(theory)


def verify_dual_bases(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    return nilhecke.verify_dual_bases(theory, args.seed_basis)


def verify_idempotent(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    return nilhecke.verify_idempotent(theory)


def _minuscule_specs(theory: Theory) -> List[gklo.MonopoleSpec]:
    gauge = theory.gauge
    specs = []
    for i in gauge.vertices:
        vi = gauge.v_at(i)
        if not vi:
            continue
        for lam, x in ((quiver.varpi(gauge, i, 1), theory.w(i, 1)), (quiver.varpi_star(gauge, i, 1), theory.w(i, vi))):
            for k in range(3):
                specs.append(gklo.monopole_spec(theory, lam, x ** k))
    return specs


def verify_crosscheck(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    polys = gklo.invariant_test_polys(theory, args.degree)
    return _merge(
        "crosscheck",
        _fan_out(args.jobs, lambda spec: gklo.crosscheck_spherical(theory, spec, polys), _minuscule_specs(theory)),
    )


def verify_klr(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    return klr.verify_klr(theory, seed=args.seed, pairs=args.pairs, max_slices=args.max_slices, bound=args.bound)


def verify_ogz(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    data = ogz.OgzData.from_gauge(config.gauge)
    return ogz.verify_ogz(data, theory)


def verify_shift(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    eta = _coweight(args.eta) if args.eta else [1] * len(config.gauge.vertices)
    return gklo.shift_check(theory, eta, args.max_p)


def verify_decompose(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    theory = _h_one(theory)
    return _merge(
        "decompose-r",
        _fan_out(
            args.jobs,
            lambda lam: abelianized.verify_decomposition(theory, lam, config.degree_bound),
            _window(theory, args.bound),
        ),
    )


def verify_abelian(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> Report:
    gauge = theory.gauge
    points = []
    for i in gauge.vertices:
        if gauge.v_at(i):
            points += quiver.orbit(gauge, quiver.varpi(gauge, i, 1))
            points += quiver.orbit(gauge, quiver.varpi_star(gauge, i, 1))
    return _merge(
        "abelian-from-monopoles",
        _fan_out(args.jobs, lambda mu: gklo.verify_abelian_from_monopoles(theory, mu, config.dressing_bound), points),
    )


SUITES: Dict[str, Callable[[argparse.Namespace, EngineConfig, Theory], Report]] = {
    "product-formula": verify_product_formula,
    "relations": verify_relations,
    "dual-bases": verify_dual_bases,
    "idempotent": verify_idempotent,
    "crosscheck": verify_crosscheck,
    "klr": verify_klr,
    "ogz": verify_ogz,
    "shift": verify_shift,
    "decompose": verify_decompose,
    "abelian": verify_abelian,
}


def cmd_verify(args: argparse.Namespace, config: EngineConfig, theory: Theory) -> int:
    return _emit(SUITES[args.suite](args, config, theory), args)


# -- argument parsing -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coulomb", description="Exact computations in quantized Coulomb branches.")
    parser.add_argument("--config", help="INI config file (default: A1 with v=1, w=1)")
    parser.add_argument("--report", action="store_true", help="print every check as a PASS/FAIL line")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for verification suites")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generators", help="images of A, E, F generators")
    p.add_argument("--max-p", type=int, default=1)
    p.add_argument("--left", action="store_true", help="left normal form")
    p.set_defaults(handler=cmd_generators)

    for name, help_text in (
        ("mul", "product X·Y"),
        ("commutator", "commutator [X, Y]"),
        ("poisson", "Poisson bracket (1/h)[X, Y] at h = 0"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("x")
        p.add_argument("y")
        p.add_argument("--left", action="store_true", help="left normal form")
        p.set_defaults(handler=_binary(name))

    p = sub.add_parser("h-series", help="expansion of H_i(u)")
    p.add_argument("vertex", type=int)
    p.add_argument("--order", type=int, default=2)
    p.set_defaults(handler=cmd_h_series)

    p = sub.add_parser("monopole", help="dressed minuscule monopole")
    p.add_argument("coweight")
    p.add_argument("--dressing")
    p.add_argument("--iwahori", action="store_true", help="Iwahori form ∂·f·r·e instead of the Weyl sum")
    p.set_defaults(handler=cmd_monopole)

    p = sub.add_parser("decompose-r", help="unit-step expression for r_λ at h = 1")
    p.add_argument("coweight")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("chambers", help="chamber generators with the coverage check")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(handler=cmd_chambers)

    p = sub.add_parser("klr", help="cylindrical KLR diagrams")
    klr_sub = p.add_subparsers(dest="klr_command", required=True)
    q = klr_sub.add_parser("eval", help="unroll and evaluate a diagram file")
    q.add_argument("file")
    q.set_defaults(handler=cmd_klr_eval)
    q = klr_sub.add_parser("basis", help="basis diagrams of End(𝐢_v)")
    q.add_argument("--bound", type=int, default=1)
    q.set_defaults(handler=cmd_klr_basis)

    p = sub.add_parser("ogz", help="Gelfand–Zetlin presentation of a type A chain")
    ogz_sub = p.add_subparsers(dest="ogz_command", required=True)
    q = ogz_sub.add_parser("emit", help="print X_i^± in right and left normal form")
    q.add_argument("--opposite", action="store_true")
    q.set_defaults(handler=cmd_ogz_emit)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("file", nargs="?", help="relation file for the relations suite")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10, help="random step orders per coweight")
    p.add_argument("--pairs", type=int, default=100, help="random diagram pairs for klr")
    p.add_argument("--max-slices", type=int, default=6, help="slices per random klr diagram")
    p.add_argument("--degree", type=int, default=3, help="test polynomial degree for crosscheck")
    p.add_argument("--seed-basis", choices=("staircase", "schubert"), default="staircase")
    p.add_argument("--eta", help="extra framing per vertex for shift")
    p.add_argument("--max-p", type=int, default=2)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        config = load_config(args.config) if args.config else default_config()
        theory = config.theory()
        log.info("engine: %s", config.describe())
        return args.handler(args, config, theory)
    except GaugeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  - {violation}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoulombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


__all__ = ["SUITES", "build_parser", "main"]

"""Difference-operator images of shifted Yangian generators and dressed monopoles."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import PolyElement, PolyRing

from coulomb.abelianized import epsilon_sign, phi_zero, r_general, twist
from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.smash import SmashElement
from coulomb.algebra.weyl import ExtAffineWeyl
from coulomb.errors import InputError, InvarianceError, NotDivisibleError, SolveError
from coulomb.nilhecke import demazure, dual_bases, flat_to_word, longest_demazure, symmetrizer
from coulomb.quiver import (
    Coweight,
    check_coweight,
    dominant,
    is_dominant,
    is_minuscule,
    minuscule_data,
    validate,
    varpi,
    varpi_star,
)
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

GENERATOR_KINDS = ("A", "E", "F")
_GENERATOR_RE = re.compile(r"^([AEF])\((\d+),(\d+)\)$")


@dataclass(frozen=True)
class YangianGenerator:
    kind: str
    i: int
    p: int

    @classmethod
    def parse(cls, text: str) -> "YangianGenerator":
        match = _GENERATOR_RE.match(text.replace(" ", ""))
        if match is None:
            raise InputError(f"bad generator token {text!r}; expected A(i,p), E(i,p) or F(i,p)")
        return cls(match.group(1), int(match.group(2)), int(match.group(3)))

    def check(self, theory: Theory) -> "YangianGenerator":
        if self.kind not in GENERATOR_KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}")
        vi = theory.gauge.v_at(self.i)
        if self.p < 1:
            raise InputError(f"{self} needs p ≥ 1")
        if self.kind == "A" and self.p > vi:
            raise InputError(f"{self} needs p ≤ v_{self.i} = {vi}")
        return self

    def __str__(self) -> str:
        return f"{self.kind}({self.i},{self.p})"


@dataclass(frozen=True)
class MonopoleSpec:
    coweight: Coweight
    dressing: PolyElement


# -- dressed monopoles ---------------------------------------------------------


def _euler_factor(theory: Theory, mu: Sequence[int]) -> PolyElement:
    """Π over same-vertex pairs with μ_a > μ_b of (w_a − w_b)."""
    gauge = theory.gauge
    result = theory.ring.one
    for i in gauge.vertices:
        block = gauge.block(i)
        for a in block:
            for b in block:
                if mu[a] > mu[b]:
                    result *= theory.ring.w_at(a) - theory.ring.w_at(b)
    return result


def _euler_denominator(theory: Theory, mu: Sequence[int]) -> LocRat:
    """1 / eu_μ as a LocRat with admissible forms."""
    gauge = theory.gauge
    den: Dict[LinForm, int] = {}
    sign = 1
    for i in gauge.vertices:
        block = gauge.block(i)
        for a in block:
            for b in block:
                if mu[a] > mu[b]:
                    s, form = LinForm.between(theory.ring, a, b, 0)
                    sign *= s
                    den[form] = den.get(form, 0) + 1
    return LocRat.reduce(theory.ring, theory.ring.one * sign, den)


def monopole_spec(theory: Theory, lam: Sequence[int], dressing: Optional[PolyElement] = None) -> MonopoleSpec:
    lam = check_coweight(theory.gauge, lam)
    if not is_minuscule(theory.gauge, lam):
        raise InputError(f"coweight {lam} is not minuscule")
    f = theory.ring.one if dressing is None else dressing
    for g in theory.weyl_group():
        if g.act_coweight(lam) == lam and g.act_poly(theory.ring, f) != f:
            raise InvarianceError(f"dressing {f} is not invariant under the stabilizer of {lam}")
    return MonopoleSpec(lam, f)


def _orbit_representatives(theory: Theory, lam: Coweight) -> List[Tuple[Coweight, ExtAffineWeyl]]:
    reps: Dict[Coweight, ExtAffineWeyl] = {}
    for g in theory.weyl_group():
        reps.setdefault(g.act_coweight(lam), g)
    return sorted(reps.items(), key=lambda kv: kv[0], reverse=True)


def dressed_monopole(theory: Theory, spec: MonopoleSpec) -> SmashElement:
    """Σ_{μ ∈ Σλ} τ_μ(f)·Φ⁰_μ / eu_μ · u^μ."""
    terms = []
    for mu, g in _orbit_representatives(theory, spec.coweight):
        coeff = LocRat.from_poly(theory.ring, g.act_poly(theory.ring, spec.dressing) * phi_zero(theory, mu))
        coeff = coeff * _euler_denominator(theory, mu)
        terms.append((ExtAffineWeyl.from_shift(mu), coeff))
    return SmashElement.from_terms(theory.ring, terms)


def iwahori_monopole(theory: Theory, spec: MonopoleSpec) -> SmashElement:
    """∂_{w₀w_λ} · f · r_λ · e for dominant minuscule λ."""
    if not is_dominant(theory.gauge, spec.coweight):
        raise InputError(f"coweight {spec.coweight} must be dominant")
    data = minuscule_data(theory.gauge, spec.coweight)
    d = demazure(theory, flat_to_word(theory, data.w0_w_lambda_word))
    r_lam = r_general(theory, spec.coweight).element
    return d * theory.scalar(spec.dressing) * r_lam * symmetrizer(theory)


# -- generator images ------------------------------------------------------------


def _first_variable(theory: Theory, i: int) -> PolyElement:
    return theory.w(i, 1)


def _last_variable(theory: Theory, i: int) -> PolyElement:
    return theory.w(i, theory.gauge.v_at(i))


def image(theory: Theory, gen: YangianGenerator) -> SmashElement:
    gen.check(theory)
    gauge = theory.gauge
    vi = gauge.v_at(gen.i)
    if gen.kind == "A":
        variables = [theory.w(gen.i, r) for r in range(1, vi + 1)]
        e_p = theory.ring.elementary_symmetric(variables, gen.p)
        return theory.scalar(-e_p if gen.p % 2 else e_p)
    if vi == 0:
        return theory.zero
    if gen.kind == "F":
        f = _first_variable(theory, gen.i) ** (gen.p - 1)
        element = dressed_monopole(theory, MonopoleSpec(varpi(gauge, gen.i, 1), f))
        return -element if gauge.out_dimension(gen.i) % 2 else element
    f = _last_variable(theory, gen.i) ** (gen.p - 1)
    element = dressed_monopole(theory, MonopoleSpec(varpi_star(gauge, gen.i, 1), f))
    return -element if vi % 2 else element


def generators(theory: Theory, max_p: int = 1) -> List[YangianGenerator]:
    gens = []
    for i in theory.gauge.vertices:
        for p in range(1, theory.gauge.v_at(i) + 1):
            gens.append(YangianGenerator("A", i, p))
        if theory.gauge.v_at(i):
            for kind in ("E", "F"):
                for p in range(1, max_p + 1):
                    gens.append(YangianGenerator(kind, i, p))
    return gens


# -- spherical versus Iwahori ------------------------------------------------------


def invariant_test_polys(theory: Theory, degree: int = 2) -> List[PolyElement]:
    """Monomials in the elementary symmetric polynomials of each vertex, up to a total degree."""
    gauge = theory.gauge
    elementary = []
    for i in gauge.vertices:
        variables = [theory.w(i, r) for r in range(1, gauge.v_at(i) + 1)]
        for p in range(1, len(variables) + 1):
            elementary.append((p, theory.ring.elementary_symmetric(variables, p)))
    polys = {}
    for exponents in product(range(degree + 1), repeat=len(elementary)):
        total = sum(k * p for k, (p, _) in zip(exponents, elementary))
        if total > degree:
            continue
        term = theory.ring.one
        for k, (_, e) in zip(exponents, elementary):
            term *= e ** k
        polys[str(term)] = term
    return [polys[k] for k in sorted(polys)]


def _is_invariant(theory: Theory, p: PolyElement) -> bool:
    return all(g.act_poly(theory.ring, p) == p for g in theory.weyl_group())


def crosscheck_spherical(
    theory: Theory, spec: MonopoleSpec, test_polys: Optional[Sequence[PolyElement]] = None
) -> Report:
    """Compare e·(Iwahori form)·e with the Weyl-sum form on invariant polynomials, up to one sign."""
    if test_polys is None:
        test_polys = invariant_test_polys(theory)
    e = symmetrizer(theory)
    sandwiched = e * iwahori_monopole(theory, spec) * e
    spherical = dressed_monopole(theory, spec)
    expected = epsilon_sign(theory, spec.coweight)
    report = Report("crosscheck")
    sign: Optional[int] = None
    for p in test_polys:
        if not _is_invariant(theory, p):
            raise InvarianceError(f"test polynomial {p} is not Σ-invariant")
        lhs = sandwiched.act_on_function(p)
        rhs = spherical.act_on_function(p)
        if lhs.is_zero() and rhs.is_zero():
            report.add(f"p={p}", True)
            continue
        this = 1 if lhs == rhs else -1 if lhs == -rhs else None
        if this is not None and sign is None:
            sign = this
        report.add(f"p={p}", this is not None and this == sign, lhs=lhs, rhs=rhs)
    recorded = sign if sign is not None else expected
    report.add(f"sign{spec.coweight}", recorded == expected, recorded=f"{recorded:+d}", expected=f"{expected:+d}")
    log.info("crosscheck %s: recorded sign %+d", spec.coweight, recorded)
    return report


# -- abelian classes from monopoles ------------------------------------------------


@dataclass(frozen=True)
class AbelianExpression:
    mu: Coweight
    lam: Coweight
    dressings: Tuple[PolyElement, ...]
    coefficients: Tuple[PolyElement, ...]
    x: Tuple[PolyElement, ...]
    y: Tuple[PolyElement, ...]

    def isolated(self, theory: Theory) -> SmashElement:
        """Σ_t g_t · (Iwahori form of M_{λ,f_t}); equals r_μ·e."""
        return theory.sum(
            theory.scalar(g) * iwahori_monopole(theory, MonopoleSpec(self.lam, f))
            for g, f in zip(self.coefficients, self.dressings)
            if g
        )

    def evaluate(self, theory: Theory) -> SmashElement:
        """Σ_{w,t} u_μ(x_w) · g_t · (Iwahori form of M_{λ,f_t}) · ∂_{w₀} · y_w."""
        middle = self.isolated(theory) * longest_demazure(theory)
        return theory.sum(
            theory.scalar(twist(theory, self.mu, xw)) * middle * yw for xw, yw in zip(self.x, self.y)
        )


def abelian_from_monopoles(theory: Theory, mu: Sequence[int], dressing_bound: int = 6) -> AbelianExpression:
    gauge = theory.gauge
    mu = check_coweight(gauge, mu)
    support = [a for a, x in enumerate(mu) if x]
    if len(support) != 1 or abs(mu[support[0]]) != 1:
        raise InputError(f"{mu} is not in the orbit of ±ϖ[i,1]")
    (a,) = support
    i, r = gauge.pairs[a]
    sign = mu[a]
    lam = dominant(gauge, mu)
    vi = gauge.v_at(i)
    if vi - 1 > dressing_bound:
        raise SolveError(f"increase dressing degree (need {vi - 1}, bound {dressing_bound})")
    x_var = _first_variable(theory, i) if sign > 0 else _last_variable(theory, i)
    dressings = tuple(x_var ** t for t in range(vi))
    # orbit point r' carries the dressing variable w[i,r']
    domain, base = theory.ring.fraction_field()
    rows = []
    rhs = []
    eu = _euler_factor(theory, mu)
    for s in range(1, vi + 1):
        w_is = theory.w(i, s)
        rows.append([domain.convert_from(w_is ** t, base) for t in range(vi)])
        rhs.append([domain.convert_from(eu if s == r else theory.ring.zero, base)])
    system = DomainMatrix(rows, (vi, vi), domain)
    solution = system.lu_solve(DomainMatrix(rhs, (vi, 1), domain)).to_list()
    coefficients = []
    for (entry,) in solution:
        g = theory.ring.poly_from_fraction(entry)
        if g is None:
            raise SolveError("increase dressing degree (isolating coefficients are not polynomial)")
        coefficients.append(g)
    bases = dual_bases(theory)
    log.info("abelian class %s isolated with %d dressings", mu, vi)
    return AbelianExpression(mu, lam, dressings, tuple(coefficients), bases.x, bases.y)


def verify_abelian_from_monopoles(theory: Theory, mu: Sequence[int], dressing_bound: int = 6) -> Report:
    expression = abelian_from_monopoles(theory, mu, dressing_bound)
    r_mu = r_general(theory, mu).element
    report = Report("abelian-from-monopoles")
    report.add(f"isolate{expression.mu}", expression.isolated(theory) == r_mu * symmetrizer(theory))
    value = expression.evaluate(theory)
    report.add(f"r{expression.mu}", value == r_mu, lhs=value.serialize(), rhs=r_mu.serialize())
    return report


# -- relations, gradings, h-series ------------------------------------------------------


def _h_divisible(theory: Theory, element: SmashElement) -> bool:
    h = theory.ring.h_symbol
    for _, coeff in element.terms:
        try:
            coeff.num.exquo(h)
        except ExactQuotientFailed:
            return False
    return True


def _coefficients_invariant(theory: Theory, element: SmashElement) -> bool:
    return all(coeff.act(g) == coeff for _, coeff in element.terms for g in theory.weyl_group())


def verify_relations(theory: Theory) -> Report:
    gauge = theory.gauge
    report = Report("relations")
    images = {gen: image(theory, gen) for gen in generators(theory)}
    a_gens = [g for g in images if g.kind == "A"]
    for x in a_gens:
        for y in a_gens:
            if (x.i, x.p) < (y.i, y.p):
                report.add(f"[{x},{y}]=0", images[x].commutator(images[y]).is_zero())
    active = [i for i in gauge.vertices if gauge.v_at(i)]
    for i in active:
        for j in active:
            e, f = images[YangianGenerator("E", i, 1)], images[YangianGenerator("F", j, 1)]
            bracket = e.commutator(f)
            if i != j:
                report.add(f"[E({i},1),F({j},1)]=0", bracket.is_zero())
                continue
            report.add(f"[E({i},1),F({i},1)]:trivial-group", bracket.has_trivial_group_part(), value=bracket)
            report.add(f"[E({i},1),F({i},1)]:invariant", _coefficients_invariant(theory, bracket))
            if theory.ring.symbolic_h:
                report.add(f"[E({i},1),F({i},1)]:h-divisible", _h_divisible(theory, bracket))
    unit_vector = {i: tuple(1 if j == i else 0 for j in gauge.vertices) for i in gauge.vertices}
    for gen, element in images.items():
        grading = element.gradings()
        if gen.kind == "A":
            expected = tuple(0 for _ in gauge.vertices)
        elif gen.kind == "E":
            expected = tuple(-x for x in unit_vector[gen.i])
        else:
            expected = unit_vector[gen.i]
        report.add(f"weight {gen}", grading.weight == expected, weight=grading.weight)
        if theory.ring.symbolic_h and not theory.ring.flavour_values:
            report.add(f"homogeneous {gen}", grading.degree != "inhomogeneous", degree=grading.degree)
    for i in active:
        for j in active:
            e, f = images[YangianGenerator("E", i, 1)], images[YangianGenerator("F", j, 1)]
            combined = (e * f).gradings().weight
            additive = tuple(x + y for x, y in zip(e.gradings().weight, f.gradings().weight))
            if combined != "mixed":
                report.add(f"weight E({i},1)F({j},1)", combined == additive, weight=combined)
    return report


@dataclass(frozen=True)
class HSeries:
    vertex: int
    order: int
    degree: int
    coefficients: Tuple[Tuple[int, PolyElement], ...]

    def coefficient(self, exponent: int) -> Optional[PolyElement]:
        for k, c in self.coefficients:
            if k == exponent:
                return c
        return None

    def lines(self) -> List[str]:
        return [f"u^{k}: {c}" for k, c in self.coefficients]


def h_series(theory: Theory, i: int, order: int) -> HSeries:
    """H_i(u) = p_i(u)·Π_{j∼i} Ã_j(u − h/2) / (Ã_i(u)·Ã_i(u − h)) expanded down to u^{−order}."""
    if order < 0:
        raise InputError("order must be non-negative")
    gauge = theory.gauge
    ring = theory.ring
    names = [str(s) for s in ring.poly_ring.symbols] + ["t"]
    ext = PolyRing(names, QQ, ring.poly_ring.order)
    t = ext.gens[-1]

    def lift(p: PolyElement) -> PolyElement:
        return ext.from_dict({m + (0,): c for m, c in p.iterterms()})

    numerator = ext.one
    denominator = ext.one
    degree = 0
    for k in gauge.flavours_at(i):
        numerator *= ext.one - lift(theory.z(k)) * t
        degree += 1
    neighbours = set(gauge.quiver.heads_from(i)) | set(gauge.quiver.tails_into(i))
    for j in sorted(neighbours):
        for s in range(1, gauge.v_at(j) + 1):
            numerator *= ext.one - lift(theory.w(j, s) + theory.half) * t
            degree += 1
    for r in range(1, gauge.v_at(i) + 1):
        denominator *= ext.one - lift(theory.w(i, r)) * t
        denominator *= ext.one - lift(theory.w(i, r) + theory.hbar) * t
        degree -= 2
    precision = degree + order + 1
    coefficients: List[Tuple[int, PolyElement]] = []
    if precision > 0:
        series = rs_mul(numerator, rs_series_inversion(denominator, t, precision), t, precision)
        buckets: Dict[int, Dict[tuple, object]] = {}
        for monom, c in series.iterterms():
            buckets.setdefault(monom[-1], {})[monom[:-1]] = c
        for m in range(precision):
            coefficients.append((degree - m, ring.poly_ring.from_dict(buckets.get(m, {}))))
    log.debug("H_%s(u): degree %d, %d coefficients", i, degree, len(coefficients))
    return HSeries(i, order, degree, tuple(coefficients))


# -- shift homomorphisms -------------------------------------------------------------


def _extra_framing_factor(theory: Theory, eta: Dict[int, int], shift: Sequence[int]) -> PolyElement:
    result = theory.ring.one
    for a, x in enumerate(shift):
        i = theory.gauge.pairs[a][0]
        for m in range(1, -x + 1):
            result *= (theory.ring.w_at(a) - theory.hbar * (m - QQ(1, 2))) ** eta.get(i, 0)
    return result


def enlarged_theory(theory: Theory, eta: Sequence[int]) -> Theory:
    gauge = theory.gauge
    if len(eta) != len(gauge.vertices) or any(x < 0 for x in eta):
        raise InputError(f"η must be a non-negative entry per vertex, got {tuple(eta)}")
    w = tuple(a + b for a, b in zip(gauge.w, eta))
    extra = tuple(i for i, n in zip(gauge.vertices, eta) for _ in range(n))
    big = validate(gauge.quiver, gauge.v, w, gauge.flavour_seq + extra)
    values = theory.ring.flavour_values
    if values is not None:
        values = tuple(values) + (0,) * len(extra)
    return Theory.build(big, theory.ring.hbar_mode, values)


def _transport(small: Theory, big: Theory, element: SmashElement) -> SmashElement:
    extra = range(small.gauge.flavour_count + 1, big.gauge.flavour_count + 1)
    zero_out = [(big.ring.z_symbol(k), big.ring.zero) for k in extra]

    def move(coeff: LocRat) -> LocRat:
        num = coeff.num.compose(zero_out) if zero_out else coeff.num
        return LocRat.reduce(small.ring, small.ring.convert(num), dict(coeff.den))

    return SmashElement.from_terms(small.ring, [(g, move(c)) for g, c in element.terms])


def shift_check(theory: Theory, eta: Sequence[int], max_p: int = 2) -> Report:
    big = enlarged_theory(theory, eta)
    eta_map = dict(zip(theory.gauge.vertices, eta))
    report = Report("shift")
    for gen in generators(theory, max_p):
        small_image = image(theory, gen)
        big_image = _transport(theory, big, image(big, gen))
        if gen.kind == "E":
            expected = SmashElement.from_terms(
                theory.ring,
                [(g, c * _extra_framing_factor(theory, eta_map, g.shift)) for g, c in small_image.terms],
            )
            changed = expected != small_image
            report.add(f"{gen}", big_image == expected, status="twisted" if changed else "preserved")
        else:
            report.add(f"{gen}", big_image == small_image, status="preserved")
    return report


# -- Poisson bracket -----------------------------------------------------------------


def poisson_bracket(theory: Theory, a: SmashElement, b: SmashElement) -> SmashElement:
    """(1/h)[a, b] at h = 0."""
    if not theory.ring.symbolic_h:
        raise InputError("the Poisson bracket needs symbolic h")
    h = theory.ring.h_symbol
    bracket = a.commutator(b)
    divided = []
    for g, coeff in bracket.terms:
        try:
            divided.append((g, coeff.exquo(h)))
        except ExactQuotientFailed:
            raise NotDivisibleError(f"commutator coefficient {coeff} is not divisible by h") from None
    return SmashElement.from_terms(theory.ring, divided).specialize_h_zero()


__all__ = [
    "AbelianExpression",
    "GENERATOR_KINDS",
    "HSeries",
    "MonopoleSpec",
    "YangianGenerator",
    "abelian_from_monopoles",
    "crosscheck_spherical",
    "dressed_monopole",
    "enlarged_theory",
    "generators",
    "h_series",
    "image",
    "invariant_test_polys",
    "iwahori_monopole",
    "monopole_spec",
    "poisson_bracket",
    "shift_check",
    "verify_abelian_from_monopoles",
    "verify_relations",
]

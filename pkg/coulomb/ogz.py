"""Orthogonal Gelfand–Zetlin generators for the type A chain.

The chain has vertices 1..n−1 with arrows i+1 → i and framing r_n at n−1.
Gelfand–Zetlin variables are ``x[i,k] = −w[i,k] − i·h/2`` (``x[n,k] = −z[k] − n·h/2``)
and ``φ[i,k] = u[i,k]⁻¹``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.smash import SmashElement
from coulomb.errors import InputError
from coulomb.gklo import YangianGenerator, image
from coulomb.quiver import GaugeData, Quiver, validate
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OgzData:
    n: int
    r: Tuple[int, ...]
    opposite: bool = False

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InputError("OGZ data needs n ≥ 2")
        if len(self.r) != self.n:
            raise InputError(f"r must have n = {self.n} entries, got {len(self.r)}")
        if any(x < 0 for x in self.r):
            raise InputError("r entries must be non-negative")

    @classmethod
    def from_gauge(cls, gauge: GaugeData) -> "OgzData":
        """Recognize chain gauge data 1 ← 2 ← … ← n−1 framed only at n−1."""
        m = len(gauge.vertices)
        chain = tuple(range(1, m + 1))
        arrows = {(i + 1, i) for i in range(1, m)}
        if gauge.vertices != chain or set(gauge.quiver.arrows) != arrows or any(gauge.w[:-1]):
            raise InputError("non-chain data: expected vertices 1..n−1, arrows i+1->i and framing only at n−1")
        return cls(m + 1, tuple(gauge.v) + (gauge.w[-1],))

    def gauge(self) -> GaugeData:
        m = self.n - 1
        vertices = tuple(range(1, m + 1))
        arrows = tuple((i + 1, i) for i in range(1, m))
        w = (0,) * (m - 1) + (self.r[-1],)
        return validate(Quiver(vertices, arrows), self.r[:-1], w)

    def theory(self, hbar_mode: str = "symbolic") -> Theory:
        return Theory.build(self.gauge(), hbar_mode)

    def flip(self) -> "OgzData":
        return OgzData(self.n, self.r, not self.opposite)


def gz_variable(theory: Theory, n: int, i: int, k: int) -> PolyElement:
    if i == n:
        return -theory.z(k) - theory.hbar * QQ(n, 2)
    return -theory.w(i, k) - theory.hbar * QQ(i, 2)


def _level_size(data: OgzData, i: int) -> int:
    return data.r[i - 1] if 1 <= i <= data.n else 0


def _generator(data: OgzData, theory: Theory, i: int, sign: int) -> SmashElement:
    """X_i^+ (sign=+1) or X_i^- (sign=−1) in right normal form."""
    neighbour = i + 1 if sign > 0 else i - 1
    terms = []
    for k in range(1, data.r[i - 1] + 1):
        x_ik = gz_variable(theory, data.n, i, k)
        num = theory.ring.one
        for l in range(1, _level_size(data, neighbour) + 1):
            num *= gz_variable(theory, data.n, neighbour, l) - x_ik
        den: Dict[LinForm, int] = {}
        form_sign = 1
        for l in range(1, data.r[i - 1] + 1):
            if l == k:
                continue
            # x[i,l] − x[i,k] = w[i,k] − w[i,l]
            s, form = LinForm.make(i, k, l, 0)
            form_sign *= s
            den[form] = den.get(form, 0) + 1
        coeff = LocRat.reduce(theory.ring, num * form_sign, den)
        shift = theory.u(i, k, -sign).terms[0][0]
        terms.append((shift, -coeff if sign > 0 else coeff))
    return SmashElement.from_terms(theory.ring, terms)


def antiinvolution(element: SmashElement) -> SmashElement:
    """The anti-involution fixing x and sending φ to φ⁻¹: f·g ↦ g⁻¹(f)·g⁻¹."""
    terms = []
    for g, coeff in element.terms:
        inverse = g.inverse()
        terms.append((inverse, coeff.act(inverse)))
    return SmashElement.from_terms(element.ring, terms)


def ogz_generators(data: OgzData, theory: Theory) -> Dict[Tuple[str, int], SmashElement]:
    """X_i^± for i = 1..n−1; for opposite data the transported elements ι(X_i^∓)."""
    gens: Dict[Tuple[str, int], SmashElement] = {}
    for i in range(1, data.n):
        plus, minus = _generator(data, theory, i, 1), _generator(data, theory, i, -1)
        if data.opposite:
            plus, minus = antiinvolution(minus), antiinvolution(plus)
        gens[("+", i)] = plus
        gens[("-", i)] = minus
    return gens


def compare_with_yangian(data: OgzData, theory: Theory) -> Report:
    """X_i^+ against E(i,1) and X_i^- against F(i,1), one sign per generator."""
    report = Report("ogz")
    gens = ogz_generators(OgzData(data.n, data.r), theory)
    for i in range(1, data.n):
        for kind, key in (("E", "+"), ("F", "-")):
            yangian = image(theory, YangianGenerator(kind, i, 1)) if theory.gauge.v_at(i) else theory.zero
            x = gens[(key, i)]
            if yangian.is_zero() and x.is_zero():
                report.add(f"X[{i}]{key}~{kind}({i},1)", True, sign="0")
            elif yangian == x:
                report.add(f"X[{i}]{key}~{kind}({i},1)", True, sign="+1")
            elif yangian == -x:
                report.add(f"X[{i}]{key}~{kind}({i},1)", True, sign="-1")
            else:
                report.add(f"X[{i}]{key}~{kind}({i},1)", False, lhs=yangian, rhs=x)
    return report


def flavour_symmetrize(data: OgzData, theory: Theory, element: SmashElement) -> SmashElement:
    """Average over permutations of the flavour variables: Ũ(𝐫) → U(𝐫)."""
    count = data.r[-1]
    if count <= 1 or theory.ring.flavour_values is not None:
        return element
    zs = [theory.ring.z_symbol(k) for k in range(1, count + 1)]
    images = list(permutations(zs))
    weight = theory.const(QQ(1, len(images)))

    def average(coeff: LocRat) -> LocRat:
        total = LocRat.zero(theory.ring)
        for perm in images:
            total = total + coeff.map(lambda p: p.compose(list(zip(zs, perm))), lambda f: (1, f))
        return total * weight

    return element.map_coefficients(average)


def flavour_invariant(data: OgzData, theory: Theory, element: SmashElement) -> bool:
    return flavour_symmetrize(data, theory, element) == element


def verify_ogz(data: OgzData, theory: Theory) -> Report:
    report = compare_with_yangian(data, theory)
    gens = ogz_generators(data, theory)
    for (key, i), x in sorted(gens.items()):
        report.add(f"involution X[{i}]{key}", antiinvolution(antiinvolution(x)) == x)
        report.add(f"flavour-invariant X[{i}]{key}", flavour_invariant(data, theory, x))
    for i in range(1, data.n):
        for j in range(i + 2, data.n):
            for key in ("+", "-"):
                bracket = gens[(key, i)].commutator(gens[(key, j)])
                report.add(f"[X[{i}]{key},X[{j}]{key}]=0", bracket.is_zero())
    return report


def emit(data: OgzData, theory: Theory) -> List[str]:
    """Generator listing in right and left normal form."""
    lines = []
    for (key, i), x in sorted(ogz_generators(data, theory).items()):
        lines.append(f"X[{i}]{key} right: {x.serialize()}")
        lines.append(f"X[{i}]{key} left: {x.format_left()}")
    return lines


__all__ = [
    "OgzData",
    "antiinvolution",
    "compare_with_yangian",
    "emit",
    "flavour_invariant",
    "flavour_symmetrize",
    "gz_variable",
    "ogz_generators",
    "verify_ogz",
]

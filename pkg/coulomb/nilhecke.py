"""NilHecke algebra inside the smash product.

Divided differences ``∂_{i,r} = (w[i,r] − w[i,r+1])⁻¹ (1 − s_{i,r})``, Demazure
elements of reduced words, the symmetrizer, Schubert polynomials and dual
bases of H_T over H_G for the pairing ``f ⊗ g ↦ ∂_{w₀}(f g)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.rings import PolyElement

from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.smash import SmashElement
from coulomb.algebra.weyl import (
    ExtAffineWeyl,
    compose_perm,
    inverse_perm,
    longest_permutation,
    perm_from_word,
    perm_length,
    reduced_word,
)
from coulomb.errors import ConventionError, InputError, SolveError
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

Simple = Tuple[int, int]


def weyl_order(theory: Theory) -> int:
    order = 1
    for i in theory.gauge.vertices:
        order *= factorial(theory.gauge.v_at(i))
    return order


def _flat(theory: Theory, i: int, r: int) -> int:
    if not 1 <= r < theory.gauge.v_at(i):
        raise InputError(f"no simple reflection s[{i},{r}] (v_{i} = {theory.gauge.v_at(i)})")
    return theory.gauge.index(i, r)


def simple_reflection(theory: Theory, i: int, r: int) -> SmashElement:
    a = _flat(theory, i, r)
    return SmashElement.group(theory.ring, ExtAffineWeyl.transposition(theory.gauge.size, a, a + 1))


def divided_difference(theory: Theory, i: int, r: int) -> SmashElement:
    a = _flat(theory, i, r)
    inverse_root = LocRat.inverse_form(theory.ring, 1, LinForm(i, r, r + 1, 0))
    swap = ExtAffineWeyl.transposition(theory.gauge.size, a, a + 1)
    identity = ExtAffineWeyl.identity(theory.gauge.size)
    return SmashElement.from_terms(theory.ring, [(identity, inverse_root), (swap, -inverse_root)])


def word_to_flat(theory: Theory, word: Sequence[Simple]) -> List[int]:
    return [_flat(theory, i, r) for i, r in word]


def flat_to_word(theory: Theory, flat: Sequence[int]) -> List[Simple]:
    return [theory.gauge.pairs[a] for a in flat]


def demazure(theory: Theory, word: Sequence[Simple]) -> SmashElement:
    """∂ of a reduced word; non-reduced words are rejected."""
    flat = word_to_flat(theory, word)
    if perm_length(perm_from_word(theory.gauge.size, flat)) != len(flat):
        raise InputError(f"non-reduced word {list(word)}")
    result = theory.unit
    for i, r in word:
        result = result * divided_difference(theory, i, r)
    return result


def demazure_of(theory: Theory, perm: Sequence[int]) -> SmashElement:
    """∂_w for a flat block permutation w, through its canonical reduced word."""
    return demazure(theory, flat_to_word(theory, reduced_word(perm)))


def longest_element(theory: Theory) -> Tuple[int, ...]:
    return longest_permutation(theory.gauge)


def longest_demazure(theory: Theory) -> SmashElement:
    return demazure_of(theory, longest_element(theory))


def symmetrizer(theory: Theory) -> SmashElement:
    """e = (1/|Σ|) Σ_σ σ."""
    weight = theory.const(Fraction(1, weyl_order(theory)))
    return SmashElement.from_terms(theory.ring, [(g, weight) for g in theory.weyl_group()])


def vandermonde(theory: Theory) -> PolyElement:
    """Δ = Π_i Π_{r<s} (w[i,r] − w[i,s])."""
    delta = theory.ring.one
    for i in theory.gauge.vertices:
        vi = theory.gauge.v_at(i)
        for r in range(1, vi + 1):
            for s in range(r + 1, vi + 1):
                delta *= theory.w(i, r) - theory.w(i, s)
    return delta


def geometric_symmetrizer(theory: Theory) -> Tuple[SmashElement, int]:
    """(1/|Σ|)·∂_{w₀}∘Δ with the sign that makes it equal to e.

    Multiplication by Δ happens first; the sign is returned so callers can
    record it.
    """
    e = symmetrizer(theory)
    candidate = longest_demazure(theory) * vandermonde(theory)
    candidate = candidate * theory.const(Fraction(1, weyl_order(theory)))
    for sign in (1, -1):
        scaled = candidate if sign == 1 else -candidate
        if scaled == e:
            log.info("geometric idempotent sign %+d", sign)
            return scaled, sign
    raise ConventionError("geometric idempotent is not ±e")


# -- Schubert polynomials and dual bases -------------------------------------


def staircase(theory: Theory, i: int) -> PolyElement:
    vi = theory.gauge.v_at(i)
    result = theory.ring.one
    for r in range(1, vi + 1):
        result *= theory.w(i, r) ** (vi - r)
    return result


def _block_perm(theory: Theory, i: int, local: Sequence[int]) -> Tuple[int, ...]:
    block = theory.gauge.block(i)
    if sorted(local) != list(range(len(block))):
        raise InputError(f"{tuple(local)} is not a permutation of 0..{len(block) - 1}")
    perm = list(range(theory.gauge.size))
    for a, image in zip(block, local):
        perm[a] = block[image]
    return tuple(perm)


def schubert(theory: Theory, sigma: Sequence[int], i: int) -> PolyElement:
    """𝔖_σ at vertex i for σ in 0-based one-line notation: ∂_{σ⁻¹w₀} applied to the staircase."""
    vi = theory.gauge.v_at(i)
    local_w0 = tuple(range(vi - 1, -1, -1))
    local = compose_perm(inverse_perm(sigma), local_w0)
    op = demazure_of(theory, _block_perm(theory, i, local))
    return op.act_on_function(staircase(theory, i)).as_poly()


def staircase_basis(theory: Theory) -> List[PolyElement]:
    ranges = []
    variables = []
    for i in theory.gauge.vertices:
        vi = theory.gauge.v_at(i)
        for r in range(1, vi + 1):
            ranges.append(range(vi - r + 1))
            variables.append(theory.w(i, r))
    basis = []
    for exponents in product(*ranges):
        monomial = theory.ring.one
        for x, k in zip(variables, exponents):
            monomial *= x ** k
        basis.append(monomial)
    return basis


def schubert_basis(theory: Theory) -> List[PolyElement]:
    per_vertex = []
    for i in theory.gauge.vertices:
        vi = theory.gauge.v_at(i)
        per_vertex.append([schubert(theory, sigma, i) for sigma in permutations(range(vi))])
    basis = []
    for choice in product(*per_vertex):
        term = theory.ring.one
        for p in choice:
            term *= p
        basis.append(term)
    return basis


@dataclass(frozen=True)
class DualBases:
    x: Tuple[PolyElement, ...]
    y: Tuple[PolyElement, ...]
    seed: str

    def expansion(self, theory: Theory) -> SmashElement:
        """Σ_σ x_σ · ∂_{w₀} · y_σ."""
        d0 = longest_demazure(theory)
        return theory.sum(theory.scalar(x) * d0 * y for x, y in zip(self.x, self.y))


def pairing(theory: Theory, f: PolyElement, g: PolyElement) -> PolyElement:
    return longest_demazure(theory).act_on_function(f * g).as_poly()


def dual_bases(theory: Theory, seed: str = "staircase") -> DualBases:
    if seed == "staircase":
        x = staircase_basis(theory)
    elif seed == "schubert":
        x = schubert_basis(theory)
    else:
        raise InputError(f"unknown basis seed {seed!r}; use staircase or schubert")
    n = len(x)
    d0 = longest_demazure(theory)
    gram = [[d0.act_on_function(x[a] * x[b]).as_poly() for b in range(n)] for a in range(n)]
    domain, base = theory.ring.fraction_field()
    matrix = DomainMatrix([[domain.convert_from(g, base) for g in row] for row in gram], (n, n), domain)
    try:
        inverse = matrix.inv().to_list()
    except DMNonInvertibleMatrixError:
        raise SolveError("singular Gram matrix") from None
    y = []
    for b in range(n):
        total = theory.ring.zero
        for c in range(n):
            entry = theory.ring.poly_from_fraction(inverse[c][b])
            if entry is None:
                raise SolveError("Gram matrix inverse is not polynomial")
            total += entry * x[c]
        y.append(total)
    log.info("dual bases (%s seed): %d elements", seed, n)
    return DualBases(tuple(x), tuple(y), seed)


def matrix_units(theory: Theory, bases: DualBases) -> List[List[SmashElement]]:
    d0 = longest_demazure(theory)
    return [[theory.scalar(x) * d0 * y for y in bases.y] for x in bases.x]


# -- verification suites ---------------------------------------------------------


def verify_dual_bases(theory: Theory, seed: str = "staircase") -> Report:
    report = Report("dual-bases")
    bases = dual_bases(theory, seed)
    n = len(bases.x)
    d0 = longest_demazure(theory)
    bad = 0
    for a in range(n):
        for b in range(n):
            value = d0.act_on_function(bases.x[a] * bases.y[b])
            expected = LocRat.one(theory.ring) if a == b else LocRat.zero(theory.ring)
            if value != expected:
                bad += 1
    report.add("pairing", bad == 0, seed=seed, size=n, mismatches=bad)
    expansion = bases.expansion(theory)
    report.add("unit-expansion", expansion == theory.unit, seed=seed, lhs=expansion.serialize())
    return report


def verify_idempotent(theory: Theory) -> Report:
    report = Report("idempotent")
    e = symmetrizer(theory)
    report.add("e^2=e", e * e == e)
    absorbing = all(theory.perm(g.perm) * e == e and e * theory.perm(g.perm) == e for g in theory.weyl_group())
    report.add("sigma-e=e-sigma=e", absorbing)
    try:
        _, sign = geometric_symmetrizer(theory)
        report.add("geometric-form", True, sign=f"{sign:+d}")
    except ConventionError as exc:
        report.add("geometric-form", False, error=exc)
    for i in theory.gauge.vertices:
        vi = theory.gauge.v_at(i)
        for r in range(1, vi):
            d = divided_difference(theory, i, r)
            report.add(f"nil-square[{i},{r}]", (d * d).is_zero())
            if r + 1 < vi:
                d2 = divided_difference(theory, i, r + 1)
                report.add(f"braid[{i},{r}]", d * d2 * d == d2 * d * d2)
    report.extend(full_idempotent_certificate(theory).checks)
    return report


def full_idempotent_certificate(theory: Theory, seed: str = "staircase") -> Report:
    """Matrix units x_a ∂_{w₀} y_b and 1 = Σ_a x_a e ∂_{w₀} y_a."""
    report = Report("full-idempotent")
    bases = dual_bases(theory, seed)
    units = matrix_units(theory, bases)
    n = len(units)
    ok = True
    for a, b, c, d in product(range(n), repeat=4):
        expected = units[a][d] if b == c else theory.zero
        if units[a][b] * units[c][d] != expected:
            ok = False
            break
    report.add("matrix-units", ok, dimension=n * n)
    e = symmetrizer(theory)
    d0 = longest_demazure(theory)
    through_e = theory.sum(theory.scalar(x) * e * d0 * y for x, y in zip(bases.x, bases.y))
    report.add("unit-in-ideal", through_e == theory.unit)
    return report


__all__ = [
    "DualBases",
    "demazure",
    "demazure_of",
    "divided_difference",
    "dual_bases",
    "flat_to_word",
    "full_idempotent_certificate",
    "geometric_symmetrizer",
    "longest_demazure",
    "longest_element",
    "matrix_units",
    "pairing",
    "schubert",
    "schubert_basis",
    "simple_reflection",
    "staircase",
    "staircase_basis",
    "symmetrizer",
    "vandermonde",
    "verify_dual_bases",
    "verify_idempotent",
    "weyl_order",
    "word_to_flat",
]

"""Abelianized Coulomb branch: classes r_λ as pure-shift smash elements.

r_λ is built by composing unit steps r_{±ε_{i,r}} and dividing out the
product-formula factor at every step.  The closed form
``ε(λ)·Π_ξ ψ_{⟨ξ,λ⟩}(ξ)·u^λ`` serves as an independent oracle.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement

from coulomb.algebra.smash import SmashElement
from coulomb.algebra.weyl import ExtAffineWeyl
from coulomb.errors import ConventionError, InputError, NotApplicableError, SolveError
from coulomb.quiver import Coweight, check_coweight
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

Step = Tuple[int, int]  # (sign, flat index)


@dataclass(frozen=True)
class AbelianClass:
    coweight: Coweight
    element: SmashElement

    @property
    def phi(self) -> PolyElement:
        """The polynomial coefficient of u^λ."""
        (_, coeff), = self.element.terms
        return coeff.as_poly()


# -- unit steps and product-formula factors ---------------------------------


def r_unit(theory: Theory, sign: int, i: int, r: int) -> AbelianClass:
    gauge = theory.gauge
    a = gauge.index(i, r)
    w_ir = theory.w(i, r)
    half = theory.half
    coeff = theory.ring.one
    if sign > 0:
        for j in gauge.quiver.heads_from(i):
            for s in range(1, gauge.v_at(j) + 1):
                coeff *= w_ir - theory.w(j, s) + half
    elif sign < 0:
        for k in gauge.flavours_at(i):
            coeff *= w_ir - theory.z(k) - half
        for j in gauge.quiver.tails_into(i):
            for s in range(1, gauge.v_at(j) + 1):
                coeff *= w_ir - theory.w(j, s) - half
    else:
        raise InputError("unit step sign must be + or -")
    lam = [0] * gauge.size
    lam[a] = 1 if sign > 0 else -1
    return AbelianClass(tuple(lam), theory.scalar(coeff) * theory.shift(lam))


def _step_class(theory: Theory, step: Step) -> AbelianClass:
    sign, a = step
    i, r = theory.gauge.pairs[a]
    return r_unit(theory, sign, i, r)


def plus_factor(theory: Theory, a: int, lam: Sequence[int]) -> PolyElement:
    """F with r_{ε_a}·r_λ = F·r_{λ+ε_a}; needs λ_a ≥ 0."""
    gauge = theory.gauge
    i, r = gauge.pairs[a]
    if lam[a] < 0:
        raise NotApplicableError(f"formula not applicable: λ[{i},{r}] = {lam[a]} < 0")
    w_ir, half = theory.w(i, r), theory.half
    factor = theory.ring.one
    for j in gauge.quiver.heads_from(i):
        for s in range(1, gauge.v_at(j) + 1):
            if lam[a] < lam[gauge.index(j, s)]:
                factor *= theory.w(j, s) - w_ir - half
    for j in gauge.quiver.tails_into(i):
        for s in range(1, gauge.v_at(j) + 1):
            if lam[a] < lam[gauge.index(j, s)]:
                factor *= w_ir - theory.w(j, s) + half
    return factor


def minus_factor(theory: Theory, a: int, lam: Sequence[int]) -> PolyElement:
    """F with r_{−ε_a}·r_λ = F·r_{λ−ε_a}; needs λ_a ≤ 0."""
    gauge = theory.gauge
    i, r = gauge.pairs[a]
    if lam[a] > 0:
        raise NotApplicableError(f"formula not applicable: λ[{i},{r}] = {lam[a]} > 0")
    w_ir, half = theory.w(i, r), theory.half
    factor = theory.ring.one
    for j in gauge.quiver.heads_from(i):
        for s in range(1, gauge.v_at(j) + 1):
            if lam[gauge.index(j, s)] < lam[a]:
                factor *= theory.w(j, s) - w_ir + half
    for j in gauge.quiver.tails_into(i):
        for s in range(1, gauge.v_at(j) + 1):
            if lam[gauge.index(j, s)] < lam[a]:
                factor *= w_ir - theory.w(j, s) - half
    return factor


def step_factor(theory: Theory, step: Step, lam: Sequence[int]) -> PolyElement:
    sign, a = step
    return plus_factor(theory, a, lam) if sign > 0 else minus_factor(theory, a, lam)


# -- r_λ ---------------------------------------------------------------------


def default_steps(lam: Sequence[int]) -> List[Step]:
    """All positive steps by index, then all negative steps by index."""
    steps = [(1, a) for a, x in enumerate(lam) for _ in range(max(x, 0))]
    steps += [(-1, a) for a, x in enumerate(lam) for _ in range(max(-x, 0))]
    return steps


def r_general(theory: Theory, lam: Sequence[int], steps: Optional[Sequence[Step]] = None) -> AbelianClass:
    """r_λ from unit steps applied on the left in the given order (last step applied last)."""
    lam = check_coweight(theory.gauge, lam)
    if steps is None:
        steps = default_steps(lam)
    elif sorted(steps) != sorted(default_steps(lam)):
        raise InputError(f"steps {list(steps)} do not add up to {lam}")
    current = [0] * theory.gauge.size
    element = theory.unit
    for step in steps:
        sign, a = step
        factor = step_factor(theory, step, current)
        stepped = _step_class(theory, step).element * element
        current[a] += sign
        (g, coeff), = stepped.terms
        try:
            divided = coeff.exquo(factor)
        except ExactQuotientFailed:
            raise ConventionError(
                f"inconsistent Φ convention: step {step} does not divide at {tuple(current)}"
            ) from None
        log.debug("step %s: divided by %s", step, factor)
        element = SmashElement.from_terms(theory.ring, [(g, divided)])
    return AbelianClass(lam, element)


def _psi(theory: Theory, d: int, xi: PolyElement) -> PolyElement:
    result = theory.ring.one
    for m in range(1, -d + 1):
        result *= xi - theory.hbar * (m - QQ(1, 2))
    return result


def phi_zero(theory: Theory, lam: Sequence[int]) -> PolyElement:
    """Π_ξ ψ_{⟨ξ,λ⟩}(ξ) over the weights ξ of N."""
    gauge = theory.gauge
    lam = check_coweight(gauge, lam)
    phi = theory.ring.one
    for i, j in gauge.quiver.arrows:
        for r in range(1, gauge.v_at(i) + 1):
            for s in range(1, gauge.v_at(j) + 1):
                d = lam[gauge.index(j, s)] - lam[gauge.index(i, r)]
                phi *= _psi(theory, d, theory.w(j, s) - theory.w(i, r))
    for k, i in enumerate(gauge.flavour_seq, start=1):
        for r in range(1, gauge.v_at(i) + 1):
            phi *= _psi(theory, lam[gauge.index(i, r)], theory.w(i, r) - theory.z(k))
    return phi


def epsilon_sign(theory: Theory, lam: Sequence[int]) -> int:
    """ε(λ) = (−1)^{Σ_i (Σ_{i→j} v_j)·Σ_r max(λ_{i,r}, 0)}."""
    gauge = theory.gauge
    exponent = 0
    for i in gauge.vertices:
        exponent += gauge.out_dimension(i) * sum(max(lam[a], 0) for a in gauge.block(i))
    return -1 if exponent % 2 else 1


def closed_form(theory: Theory, lam: Sequence[int]) -> AbelianClass:
    """ε(λ)·Φ⁰_λ·u^λ."""
    lam = check_coweight(theory.gauge, lam)
    phi = phi_zero(theory, lam)
    if epsilon_sign(theory, lam) < 0:
        phi = -phi
    return AbelianClass(lam, theory.scalar(phi) * theory.shift(lam))


def twist(theory: Theory, lam: Sequence[int], x: PolyElement) -> PolyElement:
    """u_λ(x): the shift automorphism w_a ↦ w_a + λ_a·h."""
    return ExtAffineWeyl.from_shift(lam).act_poly(theory.ring, x)


# -- verification ---------------------------------------------------------------


def verify_product_formula(theory: Theory, i: int, r: int, lam: Sequence[int], sign: int = 1) -> Report:
    lam = check_coweight(theory.gauge, lam)
    a = theory.gauge.index(i, r)
    step = (sign, a)
    factor = step_factor(theory, step, lam)
    target = list(lam)
    target[a] += sign
    lhs = _step_class(theory, step).element * r_general(theory, lam).element
    rhs = theory.scalar(factor) * r_general(theory, target).element
    report = Report("product-formula")
    report.add(
        f"r[{'+' if sign > 0 else '-'},{i},{r}]*r{tuple(lam)}",
        lhs == rhs,
        lhs=lhs.serialize(),
        rhs=rhs.serialize(),
    )
    oracle = closed_form(theory, target).element
    report.add(f"closed-form{tuple(target)}", oracle == r_general(theory, target).element)
    return report


def verify_path_independence(
    theory: Theory, lam: Sequence[int], samples: int = 10, seed: int = 0
) -> Report:
    rng = random.Random(seed)
    reference = r_general(theory, lam).element
    report = Report("path-independence")
    steps = default_steps(lam)
    for n in range(samples):
        order = list(steps)
        rng.shuffle(order)
        value = r_general(theory, lam, order).element
        report.add(f"order-{n}", value == reference, steps=order)
    return report


def verify_twist(theory: Theory, lam: Sequence[int], x: PolyElement) -> Report:
    r_lam = r_general(theory, lam).element
    lhs = r_lam * x
    rhs = theory.scalar(twist(theory, lam, x)) * r_lam
    report = Report("twist")
    report.add(f"r{tuple(lam)}*x", lhs == rhs, x=x)
    return report


def abelian_suite(theory: Theory, bound: int = 1) -> Report:
    """Product formula and closed form for every |λ_a| ≤ bound and every unit step that applies."""
    report = Report("product-formula")
    for lam in product(range(-bound, bound + 1), repeat=theory.gauge.size):
        for a, (i, r) in enumerate(theory.gauge.pairs):
            for sign in (1, -1):
                if sign * lam[a] < 0:
                    continue
                report.extend(verify_product_formula(theory, i, r, lam, sign).checks)
    return report


# -- expression trees --------------------------------------------------------------


@dataclass(frozen=True)
class StepNode:
    sign: int
    i: int
    r: int

    def text(self) -> str:
        return f"r[{'+' if self.sign > 0 else '-'},{self.i},{self.r}]"


@dataclass(frozen=True)
class PolyNode:
    value: PolyElement

    def text(self) -> str:
        return "{" + str(self.value) + "}"


@dataclass(frozen=True)
class SumNode:
    terms: Tuple["Node", ...]

    def text(self) -> str:
        return "(" + " + ".join(t.text() for t in self.terms) + ")"


@dataclass(frozen=True)
class ProductNode:
    factors: Tuple["Node", ...]

    def text(self) -> str:
        return " * ".join(f.text() for f in self.factors)


Node = Union[StepNode, PolyNode, SumNode, ProductNode]


def evaluate(theory: Theory, node: Node) -> SmashElement:
    if isinstance(node, StepNode):
        return r_unit(theory, node.sign, node.i, node.r).element
    if isinstance(node, PolyNode):
        return theory.scalar(node.value)
    if isinstance(node, SumNode):
        return theory.sum(evaluate(theory, t) for t in node.terms)
    result = theory.unit
    for factor in node.factors:
        result = result * evaluate(theory, factor)
    return result


_TOKEN = re.compile(r"\s*(r\[[+-],\d+,\d+\]|\{[^{}]*\}|\(|\)|\+|\*)")


def parse_tree(theory: Theory, text: str) -> Node:
    tokens: List[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputError(f"bad expression near {text[pos:pos + 20]!r}")
        tokens.append(match.group(1))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    node, rest = _parse_sum(theory, tokens)
    if rest:
        raise InputError(f"trailing tokens {rest}")
    return node


def _parse_sum(theory: Theory, tokens: List[str]) -> Tuple[Node, List[str]]:
    terms = []
    node, tokens = _parse_product(theory, tokens)
    terms.append(node)
    while tokens and tokens[0] == "+":
        node, tokens = _parse_product(theory, tokens[1:])
        terms.append(node)
    return (terms[0] if len(terms) == 1 else SumNode(tuple(terms))), tokens


def _parse_product(theory: Theory, tokens: List[str]) -> Tuple[Node, List[str]]:
    factors = []
    node, tokens = _parse_atom(theory, tokens)
    factors.append(node)
    while tokens and tokens[0] == "*":
        node, tokens = _parse_atom(theory, tokens[1:])
        factors.append(node)
    return (factors[0] if len(factors) == 1 else ProductNode(tuple(factors))), tokens


def _parse_atom(theory: Theory, tokens: List[str]) -> Tuple[Node, List[str]]:
    if not tokens:
        raise InputError("unexpected end of expression")
    head, rest = tokens[0], tokens[1:]
    if head == "(":
        node, rest = _parse_sum(theory, rest)
        if not rest or rest[0] != ")":
            raise InputError("missing ')'")
        if not isinstance(node, SumNode):
            node = SumNode((node,))
        return node, rest[1:]
    if head.startswith("r["):
        sign_text, i, r = head[2:-1].split(",")
        return StepNode(1 if sign_text == "+" else -1, int(i), int(r)), rest
    if head.startswith("{"):
        return PolyNode(theory.poly(head[1:-1])), rest
    raise InputError(f"unexpected token {head!r}")


# -- ℏ = 1 generation -----------------------------------------------------------


def bezout(theory: Theory, factors: Sequence[PolyElement], degree_bound: int) -> List[PolyElement]:
    """Polynomials c_a with Σ c_a·F_a = 1, searched by increasing degree."""
    ring = theory.ring
    variables = [
        ring.poly_ring.gens[n]
        for n in range(ring.poly_ring.ngens)
        if any(f.degree(n) > 0 for f in factors)
    ]
    for degree in range(degree_bound + 1):
        monomials = ring.monomials_upto(variables, degree)
        columns = [(a, m) for a in range(len(factors)) for m in monomials]
        products = [m * factors[a] for a, m in columns]
        rows: Dict[tuple, int] = {}
        for p in products:
            for monom in p.itermonoms():
                rows.setdefault(monom, len(rows))
        one_monom = next(iter(ring.one.itermonoms()))
        rows.setdefault(one_monom, len(rows))
        width = len(columns) + 1
        matrix = [[QQ.zero] * width for _ in rows]
        for col, p in enumerate(products):
            for monom, c in p.iterterms():
                matrix[rows[monom]][col] = QQ.convert(c)
        matrix[rows[one_monom]][-1] = QQ.one
        reduced, pivots = DomainMatrix(matrix, (len(rows), width), QQ).rref()
        log.debug("Bézout degree %d: %d unknowns, %d equations", degree, len(columns), len(rows))
        if width - 1 in pivots:
            continue
        values = reduced.to_list()
        solution = [QQ.zero] * len(columns)
        for row, col in enumerate(pivots):
            solution[col] = values[row][-1]
        coefficients = [ring.zero for _ in factors]
        for (a, m), value in zip(columns, solution):
            if value:
                coefficients[a] += m * ring.const(value)
        log.info("Bézout identity found at degree %d", degree)
        return coefficients
    raise SolveError(f"increase degree bound (no Bézout identity up to degree {degree_bound})")


def decompose_r(theory: Theory, lam: Sequence[int], degree_bound: int = 6) -> Node:
    """Expression for r_λ in unit steps with polynomial coefficients (ℏ = 1)."""
    if not theory.hbar_one:
        raise InputError("decompose_r needs the engine in h = 1 mode")
    lam = check_coweight(theory.gauge, lam)
    memo: Dict[Coweight, Node] = {}
    return _decompose(theory, lam, degree_bound, memo)


def _decompose(theory: Theory, lam: Coweight, degree_bound: int, memo: Dict[Coweight, Node]) -> Node:
    if lam in memo:
        return memo[lam]
    pairs = theory.gauge.pairs
    size = sum(abs(x) for x in lam)
    if size == 0:
        node: Node = PolyNode(theory.ring.one)
    elif size == 1:
        a = next(a for a, x in enumerate(lam) if x)
        node = StepNode(lam[a], *pairs[a])
    else:
        positive = max(lam) > 0
        extreme = max(lam) if positive else min(lam)
        chosen = [a for a, x in enumerate(lam) if x == extreme]
        sign = 1 if positive else -1
        branches = []
        factors = []
        for a in chosen:
            smaller = list(lam)
            smaller[a] -= sign
            factors.append(step_factor(theory, (sign, a), smaller))
            branches.append((a, tuple(smaller)))
        coefficients = bezout(theory, factors, degree_bound)
        terms = []
        for (a, smaller), c in zip(branches, coefficients):
            if not c:
                continue
            parts: List[Node] = [] if c == theory.ring.one else [PolyNode(c)]
            parts.append(StepNode(sign, *pairs[a]))
            sub = _decompose(theory, smaller, degree_bound, memo)
            if not (isinstance(sub, PolyNode) and sub.value == theory.ring.one):
                parts.append(sub)
            terms.append(parts[0] if len(parts) == 1 else ProductNode(tuple(_flatten(parts))))
        node = terms[0] if len(terms) == 1 else SumNode(tuple(terms))
    memo[lam] = node
    return node


def _flatten(parts: Sequence[Node]) -> List[Node]:
    out: List[Node] = []
    for part in parts:
        if isinstance(part, ProductNode):
            out.extend(part.factors)
        else:
            out.append(part)
    return out


def verify_decomposition(theory: Theory, lam: Sequence[int], degree_bound: int = 6) -> Report:
    tree = decompose_r(theory, lam, degree_bound)
    value = evaluate(theory, tree)
    expected = r_general(theory, lam).element
    report = Report("decompose-r")
    report.add(f"r{tuple(lam)}", value == expected, tree=tree.text())
    return report


__all__ = [
    "AbelianClass",
    "Node",
    "PolyNode",
    "ProductNode",
    "StepNode",
    "SumNode",
    "abelian_suite",
    "bezout",
    "closed_form",
    "decompose_r",
    "default_steps",
    "epsilon_sign",
    "evaluate",
    "minus_factor",
    "parse_tree",
    "phi_zero",
    "plus_factor",
    "r_general",
    "r_unit",
    "step_factor",
    "twist",
    "verify_decomposition",
    "verify_path_independence",
    "verify_product_formula",
    "verify_twist",
]

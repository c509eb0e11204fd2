"""Coefficient ring Q[w, z, h] with the gauge-variable layout.

Gauge variables ``w_{i}_{r}`` are laid out vertex by vertex, so a global index
``a`` identifies the pair ``(i, r)``.  Flavour variables are ``z_{k}`` and the
loop parameter is ``h``.  In ℏ = 1 mode ``hbar`` is the constant 1 and with
rational flavour values ``z(k)`` is a constant, so every element produced by
the engine is already specialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import SympifyError, sympify
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement, PolyRing

from coulomb.errors import InputError

HBAR_MODES = ("symbolic", "one")

Pair = Tuple[int, int]


def to_qq(value) -> object:
    """Convert an int, Fraction, ``"p/q"`` string or QQ element to a QQ element."""
    if isinstance(value, (int, Fraction, str)):
        fr = Fraction(value)
        return QQ(fr.numerator, fr.denominator)
    return QQ.convert(value)


@dataclass(frozen=True)
class CoefficientRing:
    pairs: Tuple[Pair, ...]
    flavour_vertices: Tuple[int, ...] = ()
    hbar_mode: str = "symbolic"
    flavour_values: Optional[Tuple[Fraction, ...]] = None
    poly_ring: PolyRing = field(init=False, repr=False, compare=False)
    _index: Dict[Pair, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.hbar_mode not in HBAR_MODES:
            raise InputError(f"unknown h mode {self.hbar_mode!r}")
        if self.flavour_values is not None and len(self.flavour_values) != len(self.flavour_vertices):
            raise InputError(
                f"{len(self.flavour_values)} flavour values for {len(self.flavour_vertices)} flavours"
            )
        names = [f"w_{i}_{r}" for i, r in self.pairs]
        names += [f"z_{k}" for k in range(1, len(self.flavour_vertices) + 1)]
        names.append("h")
        object.__setattr__(self, "poly_ring", PolyRing(names, QQ, lex))
        object.__setattr__(self, "_index", {pair: a for a, pair in enumerate(self.pairs)})

    # -- layout ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def vertices(self) -> Tuple[int, ...]:
        seen: List[int] = []
        for i, _ in self.pairs:
            if i not in seen:
                seen.append(i)
        return tuple(seen)

    def index(self, i: int, r: int) -> int:
        try:
            return self._index[(i, r)]
        except KeyError:
            raise InputError(f"no gauge variable w[{i},{r}]") from None

    def block(self, i: int) -> Tuple[int, ...]:
        return tuple(a for a, (j, _) in enumerate(self.pairs) if j == i)

    def vertex_of(self, a: int) -> int:
        return self.pairs[a][0]

    def same_vertex(self, a: int, b: int) -> bool:
        return self.pairs[a][0] == self.pairs[b][0]

    # -- elements -------------------------------------------------------

    @property
    def zero(self) -> PolyElement:
        return self.poly_ring.zero

    @property
    def one(self) -> PolyElement:
        return self.poly_ring.one

    @property
    def h_symbol(self) -> PolyElement:
        return self.poly_ring.gens[-1]

    @property
    def hbar(self) -> PolyElement:
        if self.hbar_mode == "one":
            return self.poly_ring.one
        return self.h_symbol

    @property
    def half_hbar(self) -> PolyElement:
        return self.hbar * QQ(1, 2)

    @property
    def symbolic_h(self) -> bool:
        return self.hbar_mode == "symbolic"

    def w(self, i: int, r: int) -> PolyElement:
        return self.poly_ring.gens[self.index(i, r)]

    def w_at(self, a: int) -> PolyElement:
        return self.poly_ring.gens[a]

    def z_symbol(self, k: int) -> PolyElement:
        return self.poly_ring.gens[self.size + k - 1]

    def z(self, k: int) -> PolyElement:
        if not 1 <= k <= len(self.flavour_vertices):
            raise InputError(f"no flavour variable z[{k}]")
        if self.flavour_values is not None:
            return self.const(self.flavour_values[k - 1])
        return self.z_symbol(k)

    def const(self, value) -> PolyElement:
        return self.poly_ring.ground_new(to_qq(value))

    def flavours_at(self, i: int) -> Tuple[int, ...]:
        return tuple(k for k, j in enumerate(self.flavour_vertices, start=1) if j == i)

    def specialize(self, p: PolyElement) -> PolyElement:
        """Apply the ℏ = 1 and flavour-value substitutions of this ring."""
        replacements = []
        if self.hbar_mode == "one":
            replacements.append((self.h_symbol, self.poly_ring.one))
        if self.flavour_values is not None:
            for k in range(1, len(self.flavour_vertices) + 1):
                replacements.append((self.z_symbol(k), self.z(k)))
        if not replacements:
            return p
        return p.compose(replacements)

    def from_text(self, text: str) -> PolyElement:
        try:
            expr = sympify(text, locals={str(s): s for s in self.poly_ring.symbols})
            p = self.poly_ring.from_expr(expr)
        except (SympifyError, CoercionFailed, ValueError, TypeError) as exc:
            raise InputError(f"cannot read polynomial {text!r}: {exc}") from None
        return self.specialize(p)

    def convert(self, p: PolyElement) -> PolyElement:
        """Move a polynomial from a ring with compatible symbol names into this one."""
        if p.ring == self.poly_ring:
            return p
        return self.specialize(self.poly_ring.from_expr(p.as_expr()))

    def fraction_field(self):
        """The sympy fraction-field domain over this ring, with the polynomial domain it converts from."""
        base = self.poly_ring.to_domain()
        return base.get_field(), base

    def poly_from_fraction(self, entry) -> Optional[PolyElement]:
        """A fraction-field element as a polynomial, or None when its denominator is not constant."""
        numer, denom = self.convert(entry.numer), self.convert(entry.denom)
        if not denom.is_ground:
            return None
        return numer.quo_ground(denom.LC)

    def elementary_symmetric(self, variables: Sequence[PolyElement], p: int) -> PolyElement:
        result = self.zero
        for subset in combinations(variables, p):
            term = self.one
            for x in subset:
                term *= x
            result += term
        return result

    def monomials_upto(self, variables: Iterable[PolyElement], degree: int) -> List[PolyElement]:
        """All monomials in ``variables`` of total degree at most ``degree``."""
        variables = list(variables)
        layer = [self.one]
        result = [self.one]
        for _ in range(degree):
            nxt = {}
            for m in layer:
                for x in variables:
                    prod = m * x
                    nxt[next(iter(prod))] = prod
            layer = [nxt[k] for k in sorted(nxt)]
            result.extend(layer)
        return result


def total_degree(p: PolyElement) -> Optional[int]:
    """Common total degree of the monomials of ``p``; None when p is inhomogeneous or zero."""
    degrees = {sum(m) for m in p.itermonoms()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


__all__ = ["CoefficientRing", "HBAR_MODES", "Pair", "to_qq", "total_degree"]

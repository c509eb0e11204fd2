"""Rational functions with factored denominators of admissible linear forms.

A ``LocRat`` is ``num / Π form^m`` where every form is w[i,r] − w[i,s] − n·h at
a single vertex.  Forms are kept factored and normalized to r < s, so reducing
a fraction is trial division: two equal fractions always have identical
storage.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement

from coulomb.algebra.ring import CoefficientRing, total_degree
from coulomb.algebra.weyl import ExtAffineWeyl
from coulomb.errors import AdmissibilityError, InputError

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LinForm:
    """w[i,r] − w[i,s] − n·h with r < s."""

    i: int
    r: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.r >= self.s:
            raise AdmissibilityError(f"LinForm needs r < s, got {self}")

    @classmethod
    def make(cls, i: int, r: int, s: int, n: int) -> Tuple[int, "LinForm"]:
        """Canonical form of w[i,r] − w[i,s] − n·h as (sign, form)."""
        if r == s:
            raise AdmissibilityError(f"w[{i},{r}] − w[{i},{s}] − {n}h is not an admissible form")
        if r < s:
            return 1, cls(i, r, s, n)
        return -1, cls(i, s, r, -n)

    @classmethod
    def between(cls, ring: CoefficientRing, a: int, b: int, n: int) -> Tuple[int, "LinForm"]:
        """Canonical form of w_a − w_b − n·h for global indices a, b."""
        (i, r), (j, s) = ring.pairs[a], ring.pairs[b]
        if i != j:
            raise AdmissibilityError(f"w[{i},{r}] and w[{j},{s}] sit at different vertices")
        return cls.make(i, r, s, n)

    def indices(self, ring: CoefficientRing) -> Tuple[int, int]:
        return ring.index(self.i, self.r), ring.index(self.i, self.s)

    def poly(self, ring: CoefficientRing) -> PolyElement:
        return ring.w(self.i, self.r) - ring.w(self.i, self.s) - ring.hbar * self.n

    def act(self, ring: CoefficientRing, g: ExtAffineWeyl) -> Tuple[int, "LinForm"]:
        a, b = self.indices(ring)
        sa, sb = g.perm[a], g.perm[b]
        return LinForm.between(ring, sa, sb, self.n - g.shift[sa] + g.shift[sb])

    def token(self) -> str:
        return f"L[{self.i},{self.r},{self.s},{self.n}]"

    def __str__(self) -> str:
        return self.token()


Denominator = Tuple[Tuple[LinForm, int], ...]


@dataclass(frozen=True)
class LocRat:
    num: PolyElement
    den: Denominator = ()
    ring: CoefficientRing = field(default=None, compare=False, repr=False)

    # -- construction ---------------------------------------------------

    @classmethod
    def reduce(
        cls,
        ring: CoefficientRing,
        num: PolyElement,
        den: Optional[Mapping[LinForm, int]] = None,
    ) -> "LocRat":
        if not num:
            return cls(ring.zero, (), ring)
        remaining: Dict[LinForm, int] = {}
        for form, mult in (den or {}).items():
            if not isinstance(form, LinForm):
                raise AdmissibilityError(f"non-admissible denominator factor {form!r}")
            if mult < 0:
                raise InputError(f"negative multiplicity for {form}")
            if not mult:
                continue
            p = form.poly(ring)
            while mult:
                try:
                    num = num.exquo(p)
                except ExactQuotientFailed:
                    break
                mult -= 1
            if mult:
                remaining[form] = mult
        return cls(num, tuple(sorted(remaining.items())), ring)

    @classmethod
    def from_poly(cls, ring: CoefficientRing, p: PolyElement) -> "LocRat":
        return cls.reduce(ring, p)

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "LocRat":
        return cls(ring.zero, (), ring)

    @classmethod
    def one(cls, ring: CoefficientRing) -> "LocRat":
        return cls(ring.one, (), ring)

    @classmethod
    def inverse_form(cls, ring: CoefficientRing, sign: int, form: LinForm, mult: int = 1) -> "LocRat":
        return cls(ring.one * sign, ((form, mult),), ring)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return not self.den

    def as_poly(self) -> PolyElement:
        if self.den:
            raise InputError(f"{self} is not a polynomial")
        return self.num

    def den_dict(self) -> Dict[LinForm, int]:
        return dict(self.den)

    def den_poly(self) -> PolyElement:
        result = self.ring.one
        for form, mult in self.den:
            result *= form.poly(self.ring) ** mult
        return result

    def degree(self) -> Optional[int]:
        d = total_degree(self.num)
        if d is None:
            return None
        return d - sum(m for _, m in self.den)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "LocRat":
        if isinstance(other, LocRat):
            return other
        if isinstance(other, PolyElement):
            return LocRat(other, (), self.ring)
        return LocRat(self.ring.const(other), (), self.ring)

    def __add__(self, other) -> "LocRat":
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        mine, theirs = self.den_dict(), other.den_dict()
        common: Dict[LinForm, int] = {}
        for form in set(mine) | set(theirs):
            common[form] = max(mine.get(form, 0), theirs.get(form, 0))
        left, right = self.num, other.num
        for form, mult in common.items():
            p = form.poly(self.ring)
            if mult - mine.get(form, 0):
                left = left * p ** (mult - mine.get(form, 0))
            if mult - theirs.get(form, 0):
                right = right * p ** (mult - theirs.get(form, 0))
        return LocRat.reduce(self.ring, left + right, common)

    __radd__ = __add__

    def __neg__(self) -> "LocRat":
        return LocRat(-self.num, self.den, self.ring)

    def __sub__(self, other) -> "LocRat":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LocRat":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LocRat":
        other = self._coerce(other)
        if not self.num or not other.num:
            return LocRat.zero(self.ring)
        if not other.den:
            if not self.den:
                return LocRat(self.num * other.num, (), self.ring)
        den = self.den_dict()
        for form, mult in other.den:
            den[form] = den.get(form, 0) + mult
        return LocRat.reduce(self.ring, self.num * other.num, den)

    __rmul__ = __mul__

    def divide_by(self, form: LinForm, sign: int = 1, mult: int = 1) -> "LocRat":
        return self * LocRat.inverse_form(self.ring, sign, form, mult)

    def exquo(self, p: PolyElement) -> "LocRat":
        """Exact division of the numerator by a polynomial (raises ExactQuotientFailed)."""
        return LocRat(self.num.exquo(p), self.den, self.ring)

    # -- group action and substitutions ---------------------------------

    def act(self, g: ExtAffineWeyl) -> "LocRat":
        if g.is_identity() or not self.num:
            return self
        num = g.act_poly(self.ring, self.num)
        den: Dict[LinForm, int] = {}
        for form, mult in self.den:
            sign, image = form.act(self.ring, g)
            if sign < 0 and mult % 2:
                num = -num
            den[image] = mult
        return LocRat(num, tuple(sorted(den.items())), self.ring)

    def map(
        self,
        num_map: Callable[[PolyElement], PolyElement],
        form_map: Callable[[LinForm], Tuple[int, LinForm]],
    ) -> "LocRat":
        """Substitute in numerator and denominator; forms must stay admissible."""
        num = num_map(self.num)
        den: Dict[LinForm, int] = {}
        for form, mult in self.den:
            sign, image = form_map(form)
            if sign < 0 and mult % 2:
                num = -num
            den[image] = den.get(image, 0) + mult
        return LocRat.reduce(self.ring, num, den)

    def specialize_h_zero(self) -> "LocRat":
        h = self.ring.h_symbol
        return self.map(
            lambda p: p.compose(h, self.ring.zero),
            lambda form: (1, LinForm(form.i, form.r, form.s, 0)),
        )

    # -- printing -------------------------------------------------------

    def den_text(self) -> str:
        parts = []
        for form, mult in self.den:
            parts.append(form.token() if mult == 1 else f"{form.token()}^{mult}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.den:
            return f"({self.num})"
        return f"({self.num}) / ({self.den_text()})"


def product_of(ring: CoefficientRing, factors: Iterable[PolyElement]) -> PolyElement:
    result = ring.one
    for f in factors:
        result *= f
    return result


__all__ = ["Denominator", "LinForm", "LocRat", "product_of"]

"""The smash product Frac(H_T) # Σ̂ in right normal form Σ f_g · g."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.ring import CoefficientRing
from coulomb.algebra.weyl import ExtAffineWeyl
from coulomb.errors import InputError

log = logging.getLogger(__name__)

Coefficient = Union[LocRat, PolyElement, int, Fraction]

MIXED = "mixed"
INHOMOGENEOUS = "inhomogeneous"


@dataclass(frozen=True)
class Gradings:
    weight: Union[Tuple[int, ...], str]
    degree: Union[int, str]

    @property
    def homogeneous(self) -> bool:
        return self.weight != MIXED and self.degree != INHOMOGENEOUS


@dataclass(frozen=True)
class SmashElement:
    ring: CoefficientRing
    terms: Tuple[Tuple[ExtAffineWeyl, LocRat], ...] = ()

    # -- construction ---------------------------------------------------

    @classmethod
    def from_terms(
        cls, ring: CoefficientRing, terms: Iterable[Tuple[ExtAffineWeyl, Coefficient]]
    ) -> "SmashElement":
        acc: Dict[ExtAffineWeyl, LocRat] = {}
        for g, coeff in terms:
            coeff = _as_locrat(ring, coeff)
            if not coeff:
                continue
            acc[g] = acc[g] + coeff if g in acc else coeff
        kept = [(g, f) for g, f in acc.items() if f]
        kept.sort(key=lambda t: t[0].key())
        return cls(ring, tuple(kept))

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "SmashElement":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: CoefficientRing) -> "SmashElement":
        return cls.group(ring, ExtAffineWeyl.identity(ring.size))

    @classmethod
    def group(cls, ring: CoefficientRing, g: ExtAffineWeyl) -> "SmashElement":
        return cls(ring, ((g, LocRat.one(ring)),))

    @classmethod
    def scalar(cls, ring: CoefficientRing, coeff: Coefficient) -> "SmashElement":
        return cls.from_terms(ring, [(ExtAffineWeyl.identity(ring.size), coeff)])

    @classmethod
    def shift(cls, ring: CoefficientRing, lam: Sequence[int]) -> "SmashElement":
        return cls.group(ring, ExtAffineWeyl.from_shift(lam))

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> Tuple[ExtAffineWeyl, ...]:
        return tuple(g for g, _ in self.terms)

    def coefficient(self, g: ExtAffineWeyl) -> LocRat:
        for h, f in self.terms:
            if h == g:
                return f
        return LocRat.zero(self.ring)

    def has_trivial_group_part(self) -> bool:
        return all(g.is_identity() for g, _ in self.terms)

    def is_pure_shift(self) -> bool:
        return all(g.is_pure_shift() for g, _ in self.terms)

    # -- arithmetic -----------------------------------------------------

    def _check_ring(self, other: "SmashElement") -> None:
        if other.ring != self.ring:
            raise InputError("smash elements over different gauge data")

    def __add__(self, other) -> "SmashElement":
        if not isinstance(other, SmashElement):
            other = SmashElement.scalar(self.ring, other)
        self._check_ring(other)
        return SmashElement.from_terms(self.ring, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "SmashElement":
        return SmashElement(self.ring, tuple((g, -f) for g, f in self.terms))

    def __sub__(self, other) -> "SmashElement":
        if not isinstance(other, SmashElement):
            other = SmashElement.scalar(self.ring, other)
        return self + (-other)

    def __rsub__(self, other) -> "SmashElement":
        return SmashElement.scalar(self.ring, other) - self

    def __mul__(self, other) -> "SmashElement":
        if not isinstance(other, SmashElement):
            c = _as_locrat(self.ring, other)
            return SmashElement.from_terms(self.ring, [(g, f * c.act(g)) for g, f in self.terms])
        self._check_ring(other)
        acc: List[Tuple[ExtAffineWeyl, LocRat]] = []
        for g1, f1 in self.terms:
            for g2, f2 in other.terms:
                acc.append((g1 * g2, f1 * f2.act(g1)))
        return SmashElement.from_terms(self.ring, acc)

    def __rmul__(self, other) -> "SmashElement":
        c = _as_locrat(self.ring, other)
        return SmashElement.from_terms(self.ring, [(g, c * f) for g, f in self.terms])

    def __pow__(self, k: int) -> "SmashElement":
        if k < 0:
            raise InputError("negative powers are only defined for group elements")
        result = SmashElement.unit(self.ring)
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other: "SmashElement") -> "SmashElement":
        return self * other - other * self

    def map_coefficients(self, fn: Callable[[LocRat], LocRat]) -> "SmashElement":
        return SmashElement.from_terms(self.ring, [(g, fn(f)) for g, f in self.terms])

    # -- representation on rational functions ----------------------------

    def act_on_function(self, f: Coefficient) -> LocRat:
        f = _as_locrat(self.ring, f)
        total = LocRat.zero(self.ring)
        for g, coeff in self.terms:
            total = total + coeff * f.act(g)
        return total

    # -- gradings ---------------------------------------------------------

    def gradings(self) -> Gradings:
        vertices = self.ring.vertices
        weights = set()
        degrees = set()
        for g, f in self.terms:
            weights.add(tuple(sum(g.shift[a] for a in self.ring.block(i)) for i in vertices))
            degrees.add(f.degree())
        if not self.terms:
            return Gradings(tuple(0 for _ in vertices), 0)
        weight = weights.pop() if len(weights) == 1 else MIXED
        degree = degrees.pop() if len(degrees) == 1 else INHOMOGENEOUS
        if degree is None:
            degree = INHOMOGENEOUS
        return Gradings(weight, degree)

    # -- h → 0 ------------------------------------------------------------

    def specialize_h_zero(self) -> "SmashElement":
        return self.map_coefficients(LocRat.specialize_h_zero)

    # -- serialization ------------------------------------------------------

    def _group_text(self, g: ExtAffineWeyl) -> List[str]:
        parts = []
        if not g.is_pure_shift():
            blocks = []
            for i in self.ring.vertices:
                block = self.ring.block(i)
                base = block[0] if block else 0
                blocks.append(" ".join(str(g.perm[a] - base + 1) for a in block))
            parts.append(f"s[{'|'.join(blocks)}]")
        if any(g.shift):
            blocks = [",".join(str(g.shift[a]) for a in self.ring.block(i)) for i in self.ring.vertices]
            parts.append(f"u[{'|'.join(blocks)}]")
        return parts

    def serialize(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(" * ".join([str(f)] + self._group_text(g)) for g, f in self.terms)

    __str__ = serialize

    def left_terms(self) -> Tuple[Tuple[ExtAffineWeyl, LocRat], ...]:
        """Terms rewritten as g · f'_g with f'_g = g⁻¹(f_g)."""
        return tuple((g, f.act(g.inverse())) for g, f in self.terms)

    def format_left(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for g, f in self.left_terms():
            rendered.append(" * ".join(list(reversed(self._group_text(g))) + [str(f)]))
        return " + ".join(rendered)

    @classmethod
    def parse(cls, ring: CoefficientRing, text: str) -> "SmashElement":
        text = text.strip()
        if text == "0":
            return cls.zero(ring)
        terms = []
        for chunk in _split_top_level(text):
            match = _TERM_RE.match(chunk.strip())
            if match is None:
                raise InputError(f"cannot parse smash term {chunk!r}")
            num = ring.from_text(match.group("num"))
            den: Dict[LinForm, int] = {}
            if match.group("den"):
                for token in match.group("den").split("*"):
                    form_match = _FORM_RE.fullmatch(token.strip())
                    if form_match is None:
                        raise InputError(f"bad denominator factor {token!r}")
                    i, r, s, n = (int(x) for x in form_match.group(1, 2, 3, 4))
                    mult = int(form_match.group(5) or 1)
                    den[LinForm(i, r, s, n)] = den.get(LinForm(i, r, s, n), 0) + mult
            g = _parse_group(ring, match.group("perm"), match.group("shift"))
            terms.append((g, LocRat.reduce(ring, num, den)))
        return cls.from_terms(ring, terms)


_TERM_RE = re.compile(
    r"^\((?P<num>[^()]*)\)"
    r"(?: / \((?P<den>[^()]*)\))?"
    r"(?: \* s\[(?P<perm>[^\]]*)\])?"
    r"(?: \* u\[(?P<shift>[^\]]*)\])?$"
)
_FORM_RE = re.compile(r"L\[(-?\d+),(-?\d+),(-?\d+),(-?\d+)\](?:\^(\d+))?")


def _split_top_level(text: str) -> List[str]:
    chunks, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            chunks.append(text[start:i])
            start = i + 3
            i += 3
            continue
        i += 1
    chunks.append(text[start:])
    return chunks


def _parse_group(ring: CoefficientRing, perm_text: Optional[str], shift_text: Optional[str]) -> ExtAffineWeyl:
    vertices = ring.vertices
    perm = list(range(ring.size))
    shift = [0] * ring.size
    if perm_text is not None:
        blocks = perm_text.split("|")
        if len(blocks) != len(vertices):
            raise InputError(f"permutation {perm_text!r} has the wrong number of vertex blocks")
        for i, block_text in zip(vertices, blocks):
            block = ring.block(i)
            images = [int(x) for x in block_text.split()]
            if sorted(images) != list(range(1, len(block) + 1)):
                raise InputError(f"bad permutation block {block_text!r}")
            for a, image in zip(block, images):
                perm[a] = block[image - 1]
    if shift_text is not None:
        blocks = shift_text.split("|")
        if len(blocks) != len(vertices):
            raise InputError(f"shift {shift_text!r} has the wrong number of vertex blocks")
        for i, block_text in zip(vertices, blocks):
            block = ring.block(i)
            values = [int(x) for x in block_text.split(",") if x.strip()]
            if len(values) != len(block):
                raise InputError(f"bad shift block {block_text!r}")
            for a, value in zip(block, values):
                shift[a] = value
    return ExtAffineWeyl(tuple(perm), tuple(shift))


def _as_locrat(ring: CoefficientRing, coeff: Coefficient) -> LocRat:
    if isinstance(coeff, LocRat):
        return coeff
    if isinstance(coeff, PolyElement):
        return LocRat.from_poly(ring, coeff)
    return LocRat.from_poly(ring, ring.const(coeff))


def sign_between(a: SmashElement, b: SmashElement) -> Optional[int]:
    """+1 if a == b, −1 if a == −b (a nonzero), else None."""
    if a == b:
        return 1
    if a == -b:
        return -1
    return None


__all__ = ["Gradings", "INHOMOGENEOUS", "MIXED", "SmashElement", "sign_between"]

"""Gauge data bundled with its coefficient ring; the entry point of every higher module."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from sympy.polys.rings import PolyElement

from coulomb.algebra.locrat import LocRat
from coulomb.algebra.ring import CoefficientRing
from coulomb.algebra.smash import SmashElement
from coulomb.algebra.weyl import ExtAffineWeyl, block_permutations
from coulomb.quiver import GaugeData, check_coweight


@dataclass(frozen=True)
class Theory:
    gauge: GaugeData
    ring: CoefficientRing

    @classmethod
    def build(
        cls,
        gauge: GaugeData,
        hbar_mode: str = "symbolic",
        flavour_values: Optional[Sequence[Fraction]] = None,
    ) -> "Theory":
        ring = CoefficientRing(
            pairs=gauge.pairs,
            flavour_vertices=gauge.flavour_seq,
            hbar_mode=hbar_mode,
            flavour_values=None if flavour_values is None else tuple(flavour_values),
        )
        return cls(gauge, ring)

    def at_hbar_one(self) -> "Theory":
        return Theory.build(self.gauge, "one", self.ring.flavour_values)

    @property
    def hbar_one(self) -> bool:
        return self.ring.hbar_mode == "one"

    # -- coefficients ----------------------------------------------------

    def w(self, i: int, r: int) -> PolyElement:
        return self.ring.w(i, r)

    def z(self, k: int) -> PolyElement:
        return self.ring.z(k)

    @property
    def hbar(self) -> PolyElement:
        return self.ring.hbar

    @property
    def half(self) -> PolyElement:
        return self.ring.half_hbar

    def const(self, value) -> PolyElement:
        return self.ring.const(value)

    def poly(self, text: str) -> PolyElement:
        return self.ring.from_text(text)

    def frac(self, p: PolyElement) -> LocRat:
        return LocRat.from_poly(self.ring, p)

    # -- smash elements ---------------------------------------------------

    @property
    def unit(self) -> SmashElement:
        return SmashElement.unit(self.ring)

    @property
    def zero(self) -> SmashElement:
        return SmashElement.zero(self.ring)

    def scalar(self, coeff) -> SmashElement:
        return SmashElement.scalar(self.ring, coeff)

    def shift(self, lam: Sequence[int]) -> SmashElement:
        return SmashElement.shift(self.ring, check_coweight(self.gauge, lam))

    def u(self, i: int, r: int, power: int = 1) -> SmashElement:
        lam = [0] * self.gauge.size
        lam[self.gauge.index(i, r)] = power
        return SmashElement.shift(self.ring, lam)

    def perm(self, perm: Sequence[int]) -> SmashElement:
        return SmashElement.group(self.ring, ExtAffineWeyl.from_perm(perm))

    def weyl_group(self) -> Iterable[ExtAffineWeyl]:
        for perm in block_permutations(self.gauge):
            yield ExtAffineWeyl.from_perm(perm)

    def sum(self, elements: Iterable[SmashElement]) -> SmashElement:
        total = self.zero
        for x in elements:
            total = total + x
        return total

    def parse(self, text: str) -> SmashElement:
        return SmashElement.parse(self.ring, text)


__all__ = ["Theory"]

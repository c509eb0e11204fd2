"""Extended affine Weyl group Π_i (Z^{v_i} ⋊ Σ_{v_i}) on the flat gauge index.

An element is stored as ``(perm, shift)`` and means t_shift ∘ perm.  It acts on
gauge variables by ``w_a ↦ w_{perm[a]} + shift[perm[a]]·h``; permutations never
mix indices of different vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from coulomb.algebra.ring import CoefficientRing
from coulomb.errors import InputError


@dataclass(frozen=True, order=True)
class ExtAffineWeyl:
    perm: Tuple[int, ...]
    shift: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.perm) != len(self.shift):
            raise InputError("perm and shift sizes differ")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InputError(f"not a permutation: {self.perm}")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExtAffineWeyl":
        return cls(tuple(range(n)), (0,) * n)

    @classmethod
    def from_shift(cls, shift: Sequence[int]) -> "ExtAffineWeyl":
        return cls(tuple(range(len(shift))), tuple(int(x) for x in shift))

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "ExtAffineWeyl":
        return cls(tuple(perm), (0,) * len(perm))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "ExtAffineWeyl":
        perm = list(range(n))
        perm[a], perm[b] = perm[b], perm[a]
        return cls.from_perm(perm)

    @classmethod
    def reflection(cls, n: int, a: int, b: int, level: int) -> "ExtAffineWeyl":
        """Affine reflection negating w_a − w_b − level·h."""
        shift = [0] * n
        shift[a] = -level
        shift[b] = level
        perm = list(range(n))
        perm[a], perm[b] = b, a
        return cls(tuple(perm), tuple(shift))

    # -- group structure ------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.is_pure_shift() and not any(self.shift)

    def is_pure_shift(self) -> bool:
        return self.perm == tuple(range(self.size))

    def is_pure_perm(self) -> bool:
        return not any(self.shift)

    def __mul__(self, other: "ExtAffineWeyl") -> "ExtAffineWeyl":
        if not isinstance(other, ExtAffineWeyl):
            return NotImplemented
        perm = tuple(self.perm[other.perm[a]] for a in range(self.size))
        moved = [0] * self.size
        for a in range(self.size):
            moved[self.perm[a]] = other.shift[a]
        shift = tuple(x + y for x, y in zip(self.shift, moved))
        return ExtAffineWeyl(perm, shift)

    def inverse(self) -> "ExtAffineWeyl":
        inv = [0] * self.size
        for a, b in enumerate(self.perm):
            inv[b] = a
        shift = tuple(-self.shift[self.perm[c]] for c in range(self.size))
        return ExtAffineWeyl(tuple(inv), shift)

    def __pow__(self, k: int) -> "ExtAffineWeyl":
        base = self if k >= 0 else self.inverse()
        result = ExtAffineWeyl.identity(self.size)
        for _ in range(abs(k)):
            result = result * base
        return result

    # -- actions --------------------------------------------------------

    def act_poly(self, ring: CoefficientRing, p: PolyElement) -> PolyElement:
        if self.is_identity() or p.is_ground:
            return p
        hbar = ring.hbar
        images = []
        for a in range(self.size):
            b = self.perm[a]
            image = ring.w_at(b)
            if self.shift[b]:
                image = image + hbar * self.shift[b]
            images.append((ring.w_at(a), image))
        return p.compose(images)

    def act_coweight(self, lam: Sequence[int]) -> Tuple[int, ...]:
        """Permutation part acting on a coweight: (σλ)[σ(a)] = λ[a]."""
        out = [0] * self.size
        for a in range(self.size):
            out[self.perm[a]] = lam[a]
        return tuple(out)

    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.shift, self.perm)


# -- permutation helpers (flat one-line notation, 0-based) -----------------


def compose_perm(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    """(p∘q)(a) = p(q(a))."""
    return tuple(p[q[a]] for a in range(len(q)))


def inverse_perm(p: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for a, b in enumerate(p):
        inv[b] = a
    return tuple(inv)


def perm_length(p: Sequence[int]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def reduced_word(p: Sequence[int]) -> List[int]:
    """Reduced word of ``p`` as indices a meaning s_a = (a a+1); word [a1, a2] is s_{a1}s_{a2}."""
    p = list(p)
    word: List[int] = []
    while True:
        for a in range(len(p) - 1):
            if p[a] > p[a + 1]:
                p[a], p[a + 1] = p[a + 1], p[a]
                word.append(a)
                break
        else:
            break
    word.reverse()
    return word


def perm_from_word(n: int, word: Sequence[int]) -> Tuple[int, ...]:
    p = tuple(range(n))
    for a in word:
        s = list(range(n))
        s[a], s[a + 1] = s[a + 1], s[a]
        p = compose_perm(p, s)
    return p


def block_permutations(ring: CoefficientRing) -> Iterator[Tuple[int, ...]]:
    """Every element of Σ = Π_i Σ_{v_i}, as flat permutations."""
    blocks = [ring.block(i) for i in ring.vertices]
    for choice in product(*(permutations(block) for block in blocks)):
        perm = list(range(ring.size))
        for block, image in zip(blocks, choice):
            for a, b in zip(block, image):
                perm[a] = b
        yield tuple(perm)


def longest_permutation(ring: CoefficientRing) -> Tuple[int, ...]:
    perm = list(range(ring.size))
    for i in ring.vertices:
        block = ring.block(i)
        for a, b in zip(block, reversed(block)):
            perm[a] = b
    return tuple(perm)


__all__ = [
    "ExtAffineWeyl",
    "block_permutations",
    "compose_perm",
    "inverse_perm",
    "longest_permutation",
    "perm_from_word",
    "perm_length",
    "reduced_word",
]

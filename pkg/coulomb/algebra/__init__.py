"""Exact coefficient arithmetic: rings, localized fractions, the extended affine Weyl group, smash products."""

from .locrat import LinForm, LocRat, product_of
from .ring import CoefficientRing, to_qq, total_degree
from .smash import Gradings, SmashElement, sign_between
from .weyl import (
    ExtAffineWeyl,
    block_permutations,
    compose_perm,
    inverse_perm,
    longest_permutation,
    perm_from_word,
    perm_length,
    reduced_word,
)

__all__ = [
    "CoefficientRing",
    "ExtAffineWeyl",
    "Gradings",
    "LinForm",
    "LocRat",
    "SmashElement",
    "block_permutations",
    "compose_perm",
    "inverse_perm",
    "longest_permutation",
    "perm_from_word",
    "perm_length",
    "product_of",
    "reduced_word",
    "sign_between",
    "to_qq",
    "total_degree",
]

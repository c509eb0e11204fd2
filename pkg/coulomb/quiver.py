"""Quiver gauge data, coweights, minuscule orbits and chamber generators."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from coulomb.algebra.weyl import (
    block_permutations,
    compose_perm,
    longest_permutation,
    reduced_word,
)
from coulomb.errors import GaugeError, InputError

log = logging.getLogger(__name__)

Pair = Tuple[int, int]
Coweight = Tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[int, ...]
    arrows: Tuple[Tuple[int, int], ...] = ()

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def heads_from(self, i: int) -> Tuple[int, ...]:
        """Targets j of arrows i → j."""
        return tuple(b for a, b in self.arrows if a == i)

    def tails_into(self, i: int) -> Tuple[int, ...]:
        """Sources j of arrows j → i."""
        return tuple(a for a, b in self.arrows if b == i)

    def adjacent(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows or (j, i) in self.arrows

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph())

    def reoriented(self, arrow: Tuple[int, int]) -> "Quiver":
        if arrow not in self.arrows:
            raise InputError(f"no arrow {arrow[0]}->{arrow[1]}")
        arrows = tuple((b, a) if (a, b) == arrow else (a, b) for a, b in self.arrows)
        return Quiver(self.vertices, arrows)


@dataclass(frozen=True)
class GaugeData:
    quiver: Quiver
    v: Tuple[int, ...]
    w: Tuple[int, ...]
    flavour_seq: Tuple[int, ...]
    pairs: Tuple[Pair, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pairs = tuple((i, r) for i, n in zip(self.quiver.vertices, self.v) for r in range(1, n + 1))
        object.__setattr__(self, "pairs", pairs)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.quiver.vertices

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def flavour_count(self) -> int:
        return len(self.flavour_seq)

    def v_at(self, i: int) -> int:
        return self.v[self._position(i)]

    def w_at(self, i: int) -> int:
        return self.w[self._position(i)]

    def _position(self, i: int) -> int:
        try:
            return self.quiver.vertices.index(i)
        except ValueError:
            raise InputError(f"unknown vertex {i}") from None

    def index(self, i: int, r: int) -> int:
        try:
            return self.pairs.index((i, r))
        except ValueError:
            raise InputError(f"no gauge pair ({i},{r})") from None

    def block(self, i: int) -> Tuple[int, ...]:
        return tuple(a for a, (j, _) in enumerate(self.pairs) if j == i)

    def flavours_at(self, i: int) -> Tuple[int, ...]:
        return tuple(k for k, j in enumerate(self.flavour_seq, start=1) if j == i)

    def out_dimension(self, i: int) -> int:
        """Σ_{i→j} v_j."""
        return sum(self.v_at(j) for j in self.quiver.heads_from(i))

    def with_dimensions(self, v: Sequence[int], w: Sequence[int]) -> "GaugeData":
        return validate(self.quiver, v, w)

    def describe(self) -> str:
        arrows = " ".join(f"{a}->{b}" for a, b in self.quiver.arrows) or "none"
        return (
            f"vertices={' '.join(map(str, self.vertices))} arrows={arrows} "
            f"v={' '.join(map(str, self.v))} w={' '.join(map(str, self.w))}"
        )


def validate(
    quiver: Quiver,
    v: Sequence[int],
    w: Sequence[int],
    flavour_seq: Optional[Sequence[int]] = None,
) -> GaugeData:
    """Check the quiver is simple and the framing matches; list every violation."""
    structural: List[str] = []
    framing: List[str] = []
    vertices = tuple(quiver.vertices)
    if len(set(vertices)) != len(vertices):
        structural.append("repeated vertex label")
    seen = set()
    for a, b in quiver.arrows:
        if a not in vertices or b not in vertices:
            structural.append(f"arrow {a}->{b} uses an unknown vertex")
        if a == b:
            structural.append(f"loop at vertex {a}")
        key = frozenset((a, b))
        if key in seen and a != b:
            structural.append(f"multiple edges between {a} and {b}")
        seen.add(key)
    if len(v) != len(vertices) or len(w) != len(vertices):
        framing.append(f"dimension vectors must have {len(vertices)} entries")
    if any(x < 0 for x in list(v) + list(w)):
        framing.append("dimensions must be non-negative")
    if flavour_seq is None and not framing:
        flavour_seq = [i for i, n in zip(vertices, w) for _ in range(n)]
    if flavour_seq is not None and not framing:
        for i in flavour_seq:
            if i not in vertices:
                framing.append(f"flavour at unknown vertex {i}")
        for i, n in zip(vertices, w):
            count = sum(1 for j in flavour_seq if j == i)
            if count != n:
                framing.append(f"vertex {i} has w={n} but {count} flavours")
    violations = structural + framing
    if violations:
        message = "non-simple quiver" if structural else "bad framing"
        log.debug("gauge data rejected: %s", "; ".join(violations))
        raise GaugeError(message, violations)
    return GaugeData(Quiver(vertices, tuple(quiver.arrows)), tuple(v), tuple(w), tuple(flavour_seq))


# -- coweights --------------------------------------------------------------


def zero_coweight(gauge: GaugeData) -> Coweight:
    return (0,) * gauge.size


def epsilon(gauge: GaugeData, i: int, r: int, sign: int = 1) -> Coweight:
    lam = [0] * gauge.size
    lam[gauge.index(i, r)] = sign
    return tuple(lam)


def varpi(gauge: GaugeData, i: int, n: int) -> Coweight:
    """ϖ_{i,n} = ε_{i,1} + … + ε_{i,n}."""
    if not 0 <= n <= gauge.v_at(i):
        raise InputError(f"ϖ[{i},{n}] needs 0 ≤ n ≤ {gauge.v_at(i)}")
    lam = [0] * gauge.size
    for r in range(1, n + 1):
        lam[gauge.index(i, r)] = 1
    return tuple(lam)


def varpi_star(gauge: GaugeData, i: int, n: int) -> Coweight:
    """ϖ*_{i,n} = −ε_{i,v_i} − … − ε_{i,v_i−n+1}."""
    vi = gauge.v_at(i)
    if not 0 <= n <= vi:
        raise InputError(f"ϖ*[{i},{n}] needs 0 ≤ n ≤ {vi}")
    lam = [0] * gauge.size
    for r in range(vi - n + 1, vi + 1):
        lam[gauge.index(i, r)] = -1
    return tuple(lam)


def check_coweight(gauge: GaugeData, lam: Sequence[int]) -> Coweight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != gauge.size:
        raise InputError(f"coweight has {len(lam)} entries, gauge rank is {gauge.size}")
    return lam


def is_dominant(gauge: GaugeData, lam: Sequence[int]) -> bool:
    for i in gauge.vertices:
        values = [lam[a] for a in gauge.block(i)]
        if any(x < y for x, y in zip(values, values[1:])):
            return False
    return True


def dominant(gauge: GaugeData, lam: Sequence[int]) -> Coweight:
    out = list(lam)
    for i in gauge.vertices:
        block = gauge.block(i)
        for a, x in zip(block, sorted((lam[b] for b in block), reverse=True)):
            out[a] = x
    return tuple(out)


def vertex_weight(gauge: GaugeData, lam: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(lam[a] for a in gauge.block(i)) for i in gauge.vertices)


def orbit(gauge: GaugeData, lam: Sequence[int]) -> List[Coweight]:
    seen = set()
    for perm in block_permutations(gauge):
        image = [0] * gauge.size
        for a in range(gauge.size):
            image[perm[a]] = lam[a]
        seen.add(tuple(image))
    return sorted(seen, reverse=True)


def is_minuscule(gauge: GaugeData, lam: Sequence[int]) -> bool:
    """Each vertex component is a Σ-conjugate of 0, some ϖ_{i,n} or some ϖ*_{i,n}."""
    for i in gauge.vertices:
        values = {lam[a] for a in gauge.block(i)}
        if not (values <= {0, 1} or values <= {0, -1}):
            return False
    return True


@dataclass(frozen=True)
class MinusculeData:
    coweight: Coweight
    is_minuscule: bool
    orbit: Tuple[Coweight, ...]
    stabilizer_generators: Tuple[Tuple[int, int], ...]
    w_lambda: Tuple[int, ...]
    w0_w_lambda: Tuple[int, ...]
    w0_w_lambda_word: Tuple[int, ...]


def stabilizer_longest(gauge: GaugeData, lam: Sequence[int]) -> Tuple[int, ...]:
    """Longest element of Σ_λ: reverse every class of equal entries within a vertex."""
    perm = list(range(gauge.size))
    for i in gauge.vertices:
        classes: Dict[int, List[int]] = {}
        for a in gauge.block(i):
            classes.setdefault(lam[a], []).append(a)
        for members in classes.values():
            for a, b in zip(members, reversed(members)):
                perm[a] = b
    return tuple(perm)


def minuscule_data(gauge: GaugeData, lam: Sequence[int]) -> MinusculeData:
    lam = check_coweight(gauge, lam)
    generators = []
    for i in gauge.vertices:
        block = gauge.block(i)
        for a, b in zip(block, block[1:]):
            if lam[a] == lam[b]:
                generators.append((a, b))
    w_lambda = stabilizer_longest(gauge, lam)
    w0 = longest_permutation(gauge)
    w0_w_lambda = compose_perm(w0, w_lambda)
    word = tuple(reduced_word(w0_w_lambda))
    log.debug("minuscule data %s: ℓ(w0 wλ)=%d", lam, len(word))
    return MinusculeData(
        coweight=lam,
        is_minuscule=is_minuscule(gauge, lam),
        orbit=tuple(orbit(gauge, lam)),
        stabilizer_generators=tuple(generators),
        w_lambda=w_lambda,
        w0_w_lambda=w0_w_lambda,
        w0_w_lambda_word=word,
    )


# -- chambers ----------------------------------------------------------------


def _check_order(gauge: GaugeData, order: Sequence[Pair], split: int) -> Tuple[int, ...]:
    try:
        indices = tuple(gauge.index(i, r) for i, r in order)
    except InputError as exc:
        raise InputError(f"malformed order: {exc}") from None
    if sorted(indices) != list(range(gauge.size)):
        raise InputError("malformed order: every gauge pair must appear exactly once")
    if not 0 <= split <= gauge.size:
        raise InputError(f"malformed order: split {split} outside 0..{gauge.size}")
    return indices


def chamber_generators(gauge: GaugeData, order: Sequence[Pair], split: int) -> List[Coweight]:
    """Semigroup generators of λ_{o1} ≥ … ≥ λ_{op} ≥ 0 ≥ λ_{o(p+1)} ≥ … ≥ λ_{on}."""
    indices = _check_order(gauge, order, split)
    n = gauge.size
    generators: List[Coweight] = []
    for s in range(1, split + 1):
        lam = [0] * n
        for a in indices[:s]:
            lam[a] = 1
        generators.append(tuple(lam))
    for s in range(split + 1, n + 1):
        lam = [0] * n
        for a in indices[s - 1 :]:
            lam[a] = -1
        generators.append(tuple(lam))
    return generators


def in_chamber(gauge: GaugeData, lam: Sequence[int], order: Sequence[Pair], split: int) -> bool:
    indices = _check_order(gauge, order, split)
    values = [lam[a] for a in indices]
    chain = values[:split] + [0] + values[split:]
    return all(x >= y for x, y in zip(chain, chain[1:]))


def chamber_decomposition(
    gauge: GaugeData, lam: Sequence[int], order: Sequence[Pair], split: int
) -> Optional[List[int]]:
    """ℕ-coefficients of λ on the chamber generators, or None when λ is outside."""
    if not in_chamber(gauge, lam, order, split):
        return None
    indices = _check_order(gauge, order, split)
    values = [lam[a] for a in indices]
    coefficients = []
    for s in range(1, split + 1):
        nxt = values[s] if s < split else 0
        coefficients.append(values[s - 1] - nxt)
    for s in range(split + 1, gauge.size + 1):
        prev = values[s - 2] if s > split + 1 else 0
        coefficients.append(prev - values[s - 1])
    return coefficients


def chambers(gauge: GaugeData) -> Iterator[Tuple[Tuple[Pair, ...], int]]:
    for order in permutations(gauge.pairs):
        for split in range(gauge.size + 1):
            yield order, split


@dataclass(frozen=True)
class ChamberReport:
    order: Tuple[Pair, ...]
    split: int
    generators: Tuple[Coweight, ...]
    all_minuscule: bool
    points_checked: int
    failures: Tuple[Coweight, ...]

    @property
    def passed(self) -> bool:
        return self.all_minuscule and not self.failures


def verify_chamber(gauge: GaugeData, order: Sequence[Pair], split: int, bound: int = 3) -> ChamberReport:
    """Brute-force check that every chamber point in [−bound, bound]^v is covered."""
    generators = chamber_generators(gauge, order, split)
    checked = 0
    failures = []
    for lam in product(range(-bound, bound + 1), repeat=gauge.size):
        coefficients = chamber_decomposition(gauge, lam, order, split)
        if coefficients is None:
            continue
        checked += 1
        total = [0] * gauge.size
        for c, gen in zip(coefficients, generators):
            for a in range(gauge.size):
                total[a] += c * gen[a]
        if any(c < 0 for c in coefficients) or tuple(total) != lam:
            failures.append(lam)
    report = ChamberReport(
        order=tuple(order),
        split=split,
        generators=tuple(generators),
        all_minuscule=all(is_minuscule(gauge, g) for g in generators),
        points_checked=checked,
        failures=tuple(failures),
    )
    log.debug("chamber %s split %d: %d points, %d failures", order, split, checked, len(failures))
    return report


def covering_chamber(gauge: GaugeData, lam: Sequence[int]) -> Tuple[Tuple[Pair, ...], int]:
    """A chamber containing λ: sort pairs by decreasing λ and split at the sign change."""
    lam = check_coweight(gauge, lam)
    order = sorted(gauge.pairs, key=lambda pair: (-lam[gauge.index(*pair)], pair))
    split = sum(1 for x in lam if x > 0)
    return tuple(order), split


# -- vertex sequence ----------------------------------------------------------


def canonical_sequence(gauge: GaugeData) -> Tuple[int, ...]:
    """𝐢_v: each vertex block contiguous, blocks in the lexicographically least topological order."""
    graph = gauge.quiver.graph()
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise GaugeError(
            "cyclic: reorient an arrow of the quiver (the Coulomb branch does not depend on orientation)",
            [f"cycle through {' -> '.join(str(a) for a, _ in cycle)}"],
        )
    seq: List[int] = []
    for i in nx.lexicographical_topological_sort(graph):
        seq.extend([i] * gauge.v_at(i))
    return tuple(seq)


def sequence_pairs(seq: Iterable[int]) -> Tuple[Pair, ...]:
    """The pairs (i, r) in the order <_𝐢: the r-th occurrence of i is (i, r)."""
    counts: Dict[int, int] = {}
    pairs = []
    for i in seq:
        counts[i] = counts.get(i, 0) + 1
        pairs.append((i, counts[i]))
    return tuple(pairs)


def check_sequence(gauge: GaugeData, seq: Sequence[int]) -> Tuple[int, ...]:
    for i in gauge.vertices:
        if sum(1 for j in seq if j == i) != gauge.v_at(i):
            raise InputError(f"vertex sequence must contain {i} exactly {gauge.v_at(i)} times")
    if len(seq) != gauge.size:
        raise InputError("vertex sequence mentions unknown vertices")
    return tuple(seq)


__all__ = [
    "ChamberReport",
    "Coweight",
    "GaugeData",
    "MinusculeData",
    "Pair",
    "Quiver",
    "canonical_sequence",
    "chamber_decomposition",
    "chamber_generators",
    "chambers",
    "check_coweight",
    "check_sequence",
    "covering_chamber",
    "dominant",
    "epsilon",
    "in_chamber",
    "is_dominant",
    "is_minuscule",
    "minuscule_data",
    "orbit",
    "sequence_pairs",
    "stabilizer_longest",
    "validate",
    "varpi",
    "varpi_star",
    "vertex_weight",
    "zero_coweight",
]

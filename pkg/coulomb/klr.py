"""Cylindrical KLR diagrams and their difference-operator evaluation.

A diagram is a bottom vertex sequence plus a list of slices read bottom to
top.  Each slice holds one elementary piece, or several pieces on disjoint
positions.  The pieces are ``psi k`` (crossing at positions k, k+1),
``sigma +`` / ``sigma -`` (the last or first strand passes the seam) and
``dot k``.  Strands sit at the equal partition ``k/(n+1)`` of the unit
interval.

Evaluation lifts every strand to the universal cover and records the
hyperplanes crossed on the way:

* root ``w_a − w_b = n`` (same vertex): ``α⁻¹(1 − t_α)``
* arrow ``w_head − w_tail = n``: identity when growing, ``w_head − w_tail − (n − ½)h`` when shrinking
* flavour ``w_a = n``: identity when growing, ``Π_k (w_a − z_k − (n − ½)h)`` when shrinking

The operators are composed right to left and multiplied on the left by the
inverse of the terminal group element.

File format::

    objects: 1 1 2
    psi 1
    sigma +
    dot 2; psi 3
    e
    top: 1 2 1
"""

from __future__ import annotations

import heapq
import logging
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from coulomb.algebra.locrat import LinForm, LocRat
from coulomb.algebra.smash import SmashElement, sign_between
from coulomb.algebra.weyl import ExtAffineWeyl
from coulomb.errors import DegenerateDiagramError, DiagramError, InputError
from coulomb.gklo import MonopoleSpec, iwahori_monopole
from coulomb.nilhecke import symmetrizer
from coulomb.quiver import GaugeData, canonical_sequence, check_sequence, sequence_pairs, varpi, varpi_star
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

_KINDS = ("e", "psi", "sigma", "dot")


@dataclass(frozen=True, order=True)
class Piece:
    kind: str
    arg: int = 0

    def positions(self, n: int) -> Tuple[int, ...]:
        if self.kind == "psi":
            return (self.arg, self.arg + 1)
        if self.kind == "dot":
            return (self.arg,)
        if self.kind == "sigma":
            return tuple(range(1, n + 1))
        return ()

    def text(self) -> str:
        if self.kind == "e":
            return "e"
        if self.kind == "sigma":
            return "sigma +" if self.arg > 0 else "sigma -"
        return f"{self.kind} {self.arg}"


Slice = Tuple[Piece, ...]


def psi(k: int) -> Slice:
    return (Piece("psi", k),)


def dot(k: int) -> Slice:
    return (Piece("dot", k),)


def sigma(sign: int) -> Slice:
    return (Piece("sigma", 1 if sign > 0 else -1),)


IDENTITY_SLICE: Slice = (Piece("e"),)


def _apply_labels(labels: Tuple[int, ...], piece: Piece) -> Tuple[int, ...]:
    if piece.kind == "psi":
        k = piece.arg - 1
        out = list(labels)
        out[k], out[k + 1] = out[k + 1], out[k]
        return tuple(out)
    if piece.kind == "sigma":
        return labels[-1:] + labels[:-1] if piece.arg > 0 else labels[1:] + labels[:1]
    return labels


def _check_slice(slice_: Slice, n: int, lineno: Optional[int] = None) -> None:
    where = f"line {lineno}: " if lineno is not None else ""
    used: set = set()
    for piece in slice_:
        if piece.kind not in _KINDS:
            raise DiagramError(f"{where}unknown piece {piece.kind!r}")
        if piece.kind == "psi" and not 1 <= piece.arg < n:
            raise DiagramError(f"{where}psi {piece.arg} needs 1 ≤ k < {n}")
        if piece.kind == "dot" and not 1 <= piece.arg <= n:
            raise DiagramError(f"{where}dot {piece.arg} needs 1 ≤ k ≤ {n}")
        if piece.kind == "sigma" and n == 0:
            raise DiagramError(f"{where}sigma on an empty object")
        positions = set(piece.positions(n))
        if positions & used or (piece.kind == "sigma" and len(slice_) > 1):
            raise DegenerateDiagramError(f"{where}degenerate diagram: pieces meet in one slice (perturb slice heights)")
        used |= positions


@dataclass(frozen=True)
class CylDiagram:
    bottom: Tuple[int, ...]
    slices: Tuple[Slice, ...] = ()

    @property
    def size(self) -> int:
        return len(self.bottom)

    def objects(self) -> List[Tuple[int, ...]]:
        """The vertex sequence below every slice, then the top."""
        labels = self.bottom
        out = [labels]
        for slice_ in self.slices:
            for piece in slice_:
                labels = _apply_labels(labels, piece)
            out.append(labels)
        return out

    @property
    def top(self) -> Tuple[int, ...]:
        return self.objects()[-1]

    def then(self, *slices: Slice) -> "CylDiagram":
        for slice_ in slices:
            _check_slice(slice_, self.size)
        return CylDiagram(self.bottom, self.slices + tuple(slices))

    def text(self) -> str:
        lines = ["objects: " + " ".join(str(i) for i in self.bottom)]
        lines += ["; ".join(piece.text() for piece in slice_) for slice_ in self.slices]
        lines.append("top: " + " ".join(str(i) for i in self.top))
        return "\n".join(lines) + "\n"


def _parse_sequence(text: str, lineno: int) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise DiagramError(f"line {lineno}: bad vertex sequence {text.strip()!r}") from None


def _parse_piece(text: str, lineno: int) -> Piece:
    words = text.split()
    if words == ["e"]:
        return Piece("e")
    if len(words) == 2 and words[0] == "sigma" and words[1] in ("+", "-"):
        return Piece("sigma", 1 if words[1] == "+" else -1)
    if len(words) == 2 and words[0] in ("psi", "dot") and words[1].isdigit():
        return Piece(words[0], int(words[1]))
    raise DiagramError(f"line {lineno}: cannot read slice {text.strip()!r}")


def parse_diagram(gauge: GaugeData, text: str) -> CylDiagram:
    bottom: Optional[Tuple[int, ...]] = None
    top: Optional[Tuple[int, ...]] = None
    slices: List[Slice] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if top is not None:
            raise DiagramError(f"line {lineno}: nothing may follow the top: line")
        if line.startswith("objects:"):
            if bottom is not None:
                raise DiagramError(f"line {lineno}: objects: given twice")
            bottom = _parse_sequence(line[len("objects:"):], lineno)
            continue
        if line.startswith("top:"):
            top = _parse_sequence(line[len("top:"):], lineno)
            continue
        if bottom is None:
            raise DiagramError(f"line {lineno}: the first line must be 'objects: <sequence>'")
        slice_ = tuple(_parse_piece(part, lineno) for part in line.split(";"))
        _check_slice(slice_, len(bottom), lineno)
        slices.append(slice_)
    if bottom is None:
        raise DiagramError("empty diagram: missing 'objects:' line")
    try:
        check_sequence(gauge, bottom)
    except InputError as exc:
        raise DiagramError(f"bottom object: {exc}") from None
    diagram = CylDiagram(bottom, tuple(slices))
    if top is not None and top != diagram.top:
        raise DiagramError(f"label mismatch: slices end at {diagram.top}, file says top {top}")
    return diagram


def load_diagram(gauge: GaugeData, path: str) -> CylDiagram:
    if not os.path.exists(path):
        raise DiagramError(f"diagram file not found: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        return parse_diagram(gauge, fh.read())


def stack(upper: CylDiagram, lower: CylDiagram) -> CylDiagram:
    """``upper`` placed on top of ``lower``."""
    if upper.bottom != lower.top:
        raise DiagramError(f"label mismatch: cannot stack {upper.bottom} on top of {lower.top}")
    return CylDiagram(lower.bottom, lower.slices + upper.slices)


# -- unrolling ------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingEvent:
    """``w_a − w_b`` (or ``w_a`` when ``b`` is None) passing through ``n·h``."""

    kind: str
    a: int
    b: Optional[int]
    n: int
    direction: int

    def describe(self, gauge: GaugeData) -> str:
        i, r = gauge.pairs[self.a]
        lhs = f"w[{i},{r}]"
        if self.b is not None:
            j, s = gauge.pairs[self.b]
            lhs += f" - w[{j},{s}]"
        arrow = "up" if self.direction > 0 else "down"
        return f"{self.kind} {lhs} = {self.n} {arrow}"


@dataclass(frozen=True)
class DotMark:
    a: int
    offset: int

    def describe(self, gauge: GaugeData) -> str:
        i, r = gauge.pairs[self.a]
        return f"dot w[{i},{r}] offset {self.offset}"


Step = Union[CrossingEvent, DotMark]


@dataclass(frozen=True)
class UnrolledPath:
    steps: Tuple[Step, ...]
    terminal: ExtAffineWeyl

    @property
    def events(self) -> Tuple[CrossingEvent, ...]:
        return tuple(s for s in self.steps if isinstance(s, CrossingEvent))


# (strand, offset) per position
Configuration = Tuple[Tuple[int, int], ...]


def _initial(gauge: GaugeData, bottom: Sequence[int]) -> Configuration:
    return tuple((gauge.index(i, r), 0) for i, r in sequence_pairs(bottom))


def _vertex_getter(gauge: GaugeData):
    return lambda a: gauge.pairs[a][0]


def _move(gauge: GaugeData, config: Configuration, piece: Piece) -> Tuple[Configuration, List[Step]]:
    """Apply one piece to a configuration, returning the steps it records."""
    strands = list(config)
    steps: List[Step] = []
    vertex = _vertex_getter(gauge)
    if piece.kind == "psi":
        k = piece.arg - 1
        (p, mp), (q, mq) = strands[k], strands[k + 1]
        n = mp - mq
        i, j = vertex(p), vertex(q)
        # w_p − w_q grows through n
        if i == j:
            steps.append(CrossingEvent("root", p, q, n, 1))
        elif (i, j) in gauge.quiver.arrows:
            steps.append(CrossingEvent("arrow", q, p, -n, -1))
        elif (j, i) in gauge.quiver.arrows:
            steps.append(CrossingEvent("arrow", p, q, n, 1))
        strands[k], strands[k + 1] = strands[k + 1], strands[k]
    elif piece.kind == "sigma" and piece.arg > 0:
        p, m = strands.pop()
        if gauge.flavours_at(vertex(p)):
            steps.append(CrossingEvent("flavour", p, None, m + 1, 1))
        strands.insert(0, (p, m + 1))
    elif piece.kind == "sigma":
        p, m = strands.pop(0)
        if gauge.flavours_at(vertex(p)):
            steps.append(CrossingEvent("flavour", p, None, m, -1))
        strands.append((p, m - 1))
    elif piece.kind == "dot":
        p, m = strands[piece.arg - 1]
        steps.append(DotMark(p, m))
    return tuple(strands), steps


def _terminal(gauge: GaugeData, config: Configuration, top: Sequence[int]) -> ExtAffineWeyl:
    perm = [0] * gauge.size
    shift = [0] * gauge.size
    for (strand, offset), pair in zip(config, sequence_pairs(top)):
        perm[gauge.index(*pair)] = strand
        shift[strand] = -offset
    return ExtAffineWeyl(tuple(perm), tuple(shift))


def unroll(gauge: GaugeData, diagram: CylDiagram) -> UnrolledPath:
    check_sequence(gauge, diagram.bottom)
    config = _initial(gauge, diagram.bottom)
    steps: List[Step] = []
    for slice_ in diagram.slices:
        _check_slice(slice_, diagram.size)
        for piece in slice_:
            config, recorded = _move(gauge, config, piece)
            steps.extend(recorded)
    return UnrolledPath(tuple(steps), _terminal(gauge, config, diagram.top))


def _operator(theory: Theory, step: Step) -> SmashElement:
    ring = theory.ring
    if isinstance(step, DotMark):
        return theory.scalar(ring.w_at(step.a) - ring.hbar * step.offset)
    if step.kind == "root":
        # α = w_b − w_a + n·h is positive where the path starts
        sign, form = LinForm.between(ring, step.b, step.a, -step.n)
        inverse_root = LocRat.inverse_form(ring, sign, form)
        t = ExtAffineWeyl.reflection(ring.size, step.b, step.a, -step.n)
        identity = ExtAffineWeyl.identity(ring.size)
        return SmashElement.from_terms(ring, [(identity, inverse_root), (t, -inverse_root)])
    if step.direction > 0:
        return theory.unit
    offset = ring.hbar * step.n - ring.half_hbar
    if step.kind == "arrow":
        return theory.scalar(ring.w_at(step.a) - ring.w_at(step.b) - offset)
    factor = ring.one
    for k in theory.gauge.flavours_at(ring.vertex_of(step.a)):
        factor *= ring.w_at(step.a) - ring.z(k) - offset
    return theory.scalar(factor)


def evaluate_path(theory: Theory, path: UnrolledPath) -> SmashElement:
    acc = theory.unit
    for step in path.steps:
        acc = _operator(theory, step) * acc
    return SmashElement.group(theory.ring, path.terminal.inverse()) * acc


def evaluate(theory: Theory, diagram: CylDiagram) -> SmashElement:
    return evaluate_path(theory, unroll(theory.gauge, diagram))


# -- isotopies ------------------------------------------------------------------


def slide_variants(diagram: CylDiagram) -> Iterator[CylDiagram]:
    """Diagrams isotopic to ``diagram``: disjoint neighbours swapped or merged, identity slices added."""
    n = diagram.size
    slices = list(diagram.slices)
    for idx in range(len(slices) - 1):
        lower, upper = slices[idx], slices[idx + 1]
        if any(p.kind in ("sigma", "e") for p in lower + upper):
            continue
        used_lower = {x for p in lower for x in p.positions(n)}
        used_upper = {x for p in upper for x in p.positions(n)}
        if used_lower & used_upper:
            continue
        swapped = slices[:idx] + [upper, lower] + slices[idx + 2 :]
        merged = slices[:idx] + [lower + upper] + slices[idx + 2 :]
        yield CylDiagram(diagram.bottom, tuple(swapped))
        yield CylDiagram(diagram.bottom, tuple(merged))
    for idx in range(len(slices) + 1):
        padded = slices[:idx] + [IDENTITY_SLICE] + slices[idx:]
        yield CylDiagram(diagram.bottom, tuple(padded))


def isotopy_check(theory: Theory, diagram: CylDiagram, other: CylDiagram) -> Report:
    report = Report("isotopy")
    lhs, rhs = evaluate(theory, diagram), evaluate(theory, other)
    detail = {} if lhs == rhs else {"lhs": lhs.serialize(), "rhs": rhs.serialize()}
    report.add(other.text().replace("\n", " / ").strip(" /"), lhs == rhs, **detail)
    return report


def random_diagram(gauge: GaugeData, bottom: Sequence[int], rng: random.Random, length: int) -> CylDiagram:
    n = len(bottom)
    choices: List[Slice] = [IDENTITY_SLICE]
    if n:
        choices += [sigma(1), sigma(-1)] + [dot(k) for k in range(1, n + 1)]
        choices += [psi(k) for k in range(1, n)]
    return CylDiagram(tuple(bottom), tuple(rng.choice(choices) for _ in range(length)))


# -- wrap diagrams on the canonical object --------------------------------------


def wrap_diagram(gauge: GaugeData, i: int, p: int, kind: str) -> CylDiagram:
    """The End(𝐢_v) diagram of F(i,p) (strand wraps right) or E(i,p) (wraps left).

    F wraps the last strand of vertex i, E the first; both carry p − 1 dots
    on the wrapped strand.
    """
    if kind not in ("E", "F"):
        raise DiagramError(f"wrap kind must be E or F, got {kind!r}")
    if gauge.v_at(i) == 0:
        raise DiagramError(f"vertex {i} has no strands")
    if p < 1:
        raise DiagramError("p must be ≥ 1")
    seq = canonical_sequence(gauge)
    n = len(seq)
    first = seq.index(i) + 1
    last = first + gauge.v_at(i) - 1
    slices: List[Slice] = []
    if kind == "F":
        slices += [psi(k) for k in range(last, n)]
        slices.append(sigma(1))
        slices += [dot(1)] * (p - 1)
        slices += [psi(k) for k in range(1, last)]
    else:
        slices += [psi(k) for k in range(first - 1, 0, -1)]
        slices.append(sigma(-1))
        slices += [dot(n)] * (p - 1)
        slices += [psi(k) for k in range(n - 1, first - 1, -1)]
    return CylDiagram(seq, tuple(slices))


def wrap_target(theory: Theory, i: int, p: int, kind: str) -> SmashElement:
    gauge = theory.gauge
    if kind == "F":
        spec = MonopoleSpec(varpi(gauge, i, 1), theory.w(i, 1) ** (p - 1))
    else:
        spec = MonopoleSpec(varpi_star(gauge, i, 1), theory.w(i, gauge.v_at(i)) ** (p - 1))
    return iwahori_monopole(theory, spec)


# -- basis diagrams ---------------------------------------------------------------


def _positions(config_or_seq: Sequence[int]) -> List[Fraction]:
    n = len(config_or_seq)
    return [Fraction(k, n + 1) for k in range(1, n + 1)]


def _point(gauge: GaugeData, g: ExtAffineWeyl, top: Sequence[int]) -> List[Fraction]:
    """g·η_top: coordinate a is η_top[σ⁻¹(a)] − λ_a."""
    eta = [Fraction(0)] * gauge.size
    for pair, x in zip(sequence_pairs(top), _positions(top)):
        eta[gauge.index(*pair)] = x
    inverse = [0] * gauge.size
    for a, b in enumerate(g.perm):
        inverse[b] = a
    return [eta[inverse[a]] - g.shift[a] for a in range(gauge.size)]


def root_distance(gauge: GaugeData, start: Sequence[Fraction], end: Sequence[Fraction]) -> int:
    """Number of root hyperplanes w_a − w_b ∈ ℤ separating two generic points."""
    count = 0
    for i in gauge.vertices:
        block = gauge.block(i)
        for x, a in enumerate(block):
            for b in block[x + 1 :]:
                d0, d1 = start[a] - start[b], end[a] - end[b]
                count += abs(math.floor(d0) - math.floor(d1))
    return count


def leading_element(theory: Theory, diagram: CylDiagram) -> Tuple[Optional[ExtAffineWeyl], SmashElement]:
    """The unique support element farthest from the bottom object, or None if the maximum is shared."""
    gauge = theory.gauge
    element = evaluate(theory, diagram)
    start = [Fraction(0)] * gauge.size
    for pair, x in zip(sequence_pairs(diagram.bottom), _positions(diagram.bottom)):
        start[gauge.index(*pair)] = x
    heights: Dict[ExtAffineWeyl, int] = {}
    for h in element.support():
        heights[h] = root_distance(gauge, start, _point(gauge, h.inverse(), diagram.top))
    if not heights:
        return None, element
    best = max(heights.values())
    leaders = [h for h, d in heights.items() if d == best]
    return (leaders[0] if len(leaders) == 1 else None), element


def basis_diagrams(
    gauge: GaugeData, bottom: Sequence[int], top: Sequence[int], bound: int
) -> List[CylDiagram]:
    """Minimal diagrams from ``bottom`` to ``top`` for every terminal element in the window.

    The search costs (root crossings, other crossings, slices) and keeps
    configurations with at most ``bound`` crossings and offsets |m| ≤ bound.
    """
    bottom, top = check_sequence(gauge, bottom), check_sequence(gauge, top)
    if bound < 0:
        raise DiagramError("bound must be ≥ 0")
    n = len(bottom)
    moves: List[Piece] = [Piece("psi", k) for k in range(1, n)]
    if n:
        moves += [Piece("sigma", 1), Piece("sigma", -1)]
    start = _initial(gauge, bottom)
    best: Dict[Configuration, Tuple[int, int, int]] = {start: (0, 0, 0)}
    paths: Dict[Configuration, Tuple[Piece, ...]] = {start: ()}
    labels: Dict[Configuration, Tuple[int, ...]] = {start: bottom}
    heap: List[Tuple[Tuple[int, int, int], Tuple[Piece, ...], Configuration]] = [((0, 0, 0), (), start)]
    while heap:
        cost, path, config = heapq.heappop(heap)
        if cost != best.get(config):
            continue
        for piece in moves:
            nxt, steps = _move(gauge, config, piece)
            roots = sum(1 for s in steps if isinstance(s, CrossingEvent) and s.kind == "root")
            others = sum(1 for s in steps if isinstance(s, CrossingEvent)) - roots
            new_cost = (cost[0] + roots, cost[1] + others, cost[2] + 1)
            if new_cost[0] + new_cost[1] > bound or any(abs(m) > bound for _, m in nxt):
                continue
            if nxt not in best or new_cost < best[nxt]:
                best[nxt] = new_cost
                paths[nxt] = path + (piece,)
                labels[nxt] = _apply_labels(labels[config], piece)
                heapq.heappush(heap, (new_cost, paths[nxt], nxt))
    found = [c for c in best if labels[c] == top]
    found.sort(key=lambda c: (best[c], _terminal(gauge, c, top).key()))
    diagrams = [CylDiagram(bottom, tuple((piece,) for piece in paths[c])) for c in found]
    log.info("basis diagrams %s -> %s (bound %d): %d", bottom, top, bound, len(diagrams))
    return diagrams


# -- verification ------------------------------------------------------------------


def _short(d: CylDiagram) -> str:
    return d.text().replace("\n", " / ").strip(" /")


def verify_klr(theory: Theory, seed: int = 0, pairs: int = 100, max_slices: int = 6, bound: int = 1) -> Report:
    report = Report("klr")
    gauge = theory.gauge
    rng = random.Random(seed)
    seq = list(canonical_sequence(gauge))

    identity = CylDiagram(tuple(seq))
    report.add("identity", evaluate(theory, identity) == theory.unit)

    functorial = 0
    slide_failures: List[str] = []
    for _ in range(pairs):
        bottom = seq[:]
        rng.shuffle(bottom)
        lower = random_diagram(gauge, bottom, rng, rng.randint(0, max_slices))
        upper = random_diagram(gauge, lower.top, rng, rng.randint(0, max_slices))
        whole = evaluate(theory, stack(upper, lower))
        if whole == evaluate(theory, upper) * evaluate(theory, lower):
            functorial += 1
        else:
            report.add("functoriality", False, upper=_short(upper), lower=_short(lower))
        original = evaluate(theory, lower)
        for variant in slide_variants(lower):
            if evaluate(theory, variant) != original:
                slide_failures.append(_short(variant))
    report.add("functoriality", functorial == pairs, pairs=pairs, functorial=functorial)
    report.add("isotopy", not slide_failures, **({"first": slide_failures[0]} if slide_failures else {}))

    for k, (a, b) in enumerate(zip(seq, seq[1:]), start=1):
        if a == b:
            twice = CylDiagram(tuple(seq), (psi(k), psi(k)))
            report.add(f"nil-square psi {k}", evaluate(theory, twice).is_zero())
            break

    e = symmetrizer(theory)
    for i in gauge.vertices:
        if not gauge.v_at(i):
            continue
        for kind in ("F", "E"):
            value = evaluate(theory, wrap_diagram(gauge, i, 1, kind)) * e
            target = wrap_target(theory, i, 1, kind)
            sign = sign_between(value, target)
            if sign is None:
                report.add(f"wrap {kind}({i},1)", False, lhs=value.serialize(), rhs=target.serialize())
            else:
                report.add(f"wrap {kind}({i},1)", True, sign=f"{sign:+d}")

    leaders = []
    triangular = True
    for diagram in basis_diagrams(gauge, seq, seq, bound):
        leader, _ = leading_element(theory, diagram)
        expected = unroll(gauge, diagram).terminal.inverse()
        if leader != expected:
            triangular = False
            report.add("basis-leading", False, diagram=_short(diagram))
        leaders.append(leader)
    report.add("triangularity", triangular and len(set(leaders)) == len(leaders), diagrams=len(leaders), bound=bound)
    return report


__all__ = [
    "CrossingEvent",
    "CylDiagram",
    "DotMark",
    "IDENTITY_SLICE",
    "Piece",
    "UnrolledPath",
    "basis_diagrams",
    "dot",
    "evaluate",
    "evaluate_path",
    "isotopy_check",
    "leading_element",
    "load_diagram",
    "parse_diagram",
    "psi",
    "random_diagram",
    "root_distance",
    "sigma",
    "slide_variants",
    "stack",
    "unroll",
    "verify_klr",
    "wrap_diagram",
    "wrap_target",
]

"""Relation files: one checked identity per line.

    # comment
    commutator A(1,1) F(1,1) equals h * F(1,1)
    poisson F(1,1) A(1,1) equals -1 * F(1,1)

Expressions use ``+ - *``, parentheses, the prefix operators ``commutator X Y``
and ``poisson X Y`` (X, Y atoms), generator tokens ``A(i,p) E(i,p) F(i,p)``,
variables ``w_i_r z_k h`` and rationals such as ``1/2``.
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from coulomb.algebra.smash import SmashElement
from coulomb.errors import CoulombError, InputError
from coulomb.gklo import YangianGenerator, image, poisson_bracket
from coulomb.report import Report
from coulomb.theory import Theory

log = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<gen>[AEF]\(\s*\d+\s*,\s*\d+\s*\))"
    r"|(?P<var>w_\d+_\d+|z_\d+|h)\b"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<word>commutator|poisson|equals)\b"
    r"|(?P<op>[-+*()]))"
)


@dataclass(frozen=True)
class Relation:
    lineno: int
    text: str
    lhs: Tuple[str, ...]
    rhs: Tuple[str, ...]


def tokenize(text: str, lineno: int = 0) -> List[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise InputError(f"line {lineno}: cannot read {text[pos:].strip()!r}")
        tokens.append(match.group(match.lastgroup).replace(" ", ""))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_relations(text: str) -> List[Relation]:
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = tokenize(line, lineno)
        if tokens.count("equals") != 1:
            raise InputError(f"line {lineno}: a relation needs exactly one 'equals'")
        split = tokens.index("equals")
        lhs, rhs = tokens[:split], tokens[split + 1 :]
        if not lhs or not rhs:
            raise InputError(f"line {lineno}: empty side of relation")
        relations.append(Relation(lineno, line, tuple(lhs), tuple(rhs)))
    return relations


def load_relations(path: str) -> List[Relation]:
    if not os.path.exists(path):
        raise InputError(f"relation file not found: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        return parse_relations(fh.read())


class _Evaluator:
    def __init__(self, theory: Theory):
        self.theory = theory
        self.cache: Dict[str, SmashElement] = {}

    def evaluate(self, tokens: Tuple[str, ...], lineno: int) -> SmashElement:
        self.tokens = list(tokens)
        self.lineno = lineno
        value = self._sum()
        if self.tokens:
            raise InputError(f"line {lineno}: unexpected {self.tokens[0]!r}")
        return value

    def _take(self) -> str:
        if not self.tokens:
            raise InputError(f"line {self.lineno}: expression ends early")
        return self.tokens.pop(0)

    def _sum(self) -> SmashElement:
        value = self._product()
        while self.tokens and self.tokens[0] in "+-":
            op = self._take()
            rhs = self._product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _product(self) -> SmashElement:
        value = self._unary()
        while self.tokens and self.tokens[0] == "*":
            self._take()
            value = value * self._unary()
        return value

    def _unary(self) -> SmashElement:
        if self.tokens and self.tokens[0] == "-":
            self._take()
            return -self._unary()
        return self._atom()

    def _atom(self) -> SmashElement:
        token = self._take()
        if token == "(":
            value = self._sum()
            if self._take() != ")":
                raise InputError(f"line {self.lineno}: missing ')'")
            return value
        if token == "commutator":
            a, b = self._atom(), self._atom()
            return a.commutator(b)
        if token == "poisson":
            a, b = self._atom(), self._atom()
            return poisson_bracket(self.theory, a, b)
        if token[0] in "AEF" and "(" in token:
            if token not in self.cache:
                self.cache[token] = image(self.theory, YangianGenerator.parse(token))
            return self.cache[token]
        if token[0].isdigit():
            return self.theory.scalar(Fraction(token))
        if token[0] in "wzh":
            return self.theory.scalar(self.theory.poly(token))
        raise InputError(f"line {self.lineno}: unexpected {token!r}")


def evaluate_expression(theory: Theory, text: str) -> SmashElement:
    """One expression in relation syntax, e.g. ``E(1,1) * F(1,1) - h``."""
    return _Evaluator(theory).evaluate(tuple(tokenize(text)), 0)


def check_relations(theory: Theory, relations: List[Relation]) -> Report:
    report = Report("relations-file")
    evaluator = _Evaluator(theory)
    for relation in relations:
        try:
            lhs = evaluator.evaluate(relation.lhs, relation.lineno)
            rhs = evaluator.evaluate(relation.rhs, relation.lineno)
        except InputError:
            raise
        except CoulombError as exc:
            report.add(f"line {relation.lineno}", False, relation=relation.text, error=exc)
            continue
        passed = lhs == rhs
        if not passed:
            log.info("relation on line %d fails: %s vs %s", relation.lineno, lhs, rhs)
        report.add(
            f"line {relation.lineno}",
            passed,
            relation=relation.text,
            **({} if passed else {"lhs": lhs.serialize(), "rhs": rhs.serialize()}),
        )
    return report


__all__ = ["Relation", "check_relations", "evaluate_expression", "load_relations", "parse_relations", "tokenize"]

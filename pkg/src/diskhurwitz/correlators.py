"""Pairing and three-point structure constants of the disk theory.

Every three-point case has the shape

    < S, (Q * star(d), P * d) >  =  value(P, Q) / |Aut(d)|

where ``S`` is a simple critical value (an acute point, a grave point, or an
interior point a_1^m a_2), ``P`` is the consumed pattern on the right
argument and ``Q`` the produced pattern on the left one.  A case family
fixes the generator families of ``P`` and ``Q``, an index relation, and the
value.

Values are stored for the convention w(i) = i.  Under another dot weight the
right argument's dot components rescale the correlator by i / w(i) each, so
that changing the convention is a pure rescaling of the dot variables.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from .monomial import (
    INDEX,
    BoundaryMonomial,
    Convention,
    Family,
    Generator,
    aut_order,
    enumerate_degree,
    length,
)

Indices = tuple[int, ...]

AC, GR, BA, DO = Family.ACUTE, Family.GRAVE, Family.BAR, Family.DOT


class SimpleKind(enum.Enum):
    INTERIOR = "interior"
    ACUTE = "acute"
    GRAVE = "grave"


@dataclass(frozen=True)
class CaseFamily:
    name: str
    consumed: tuple[Family, ...]
    produced: tuple[Family, ...]
    relation: Callable[[Indices, Indices], bool]
    value: Callable[[Indices, Indices], Fraction]

    def flipped(self, name: str) -> CaseFamily:
        """Image under (c, b) -> (star b, star c)."""
        rel, val = self.relation, self.value
        return CaseFamily(
            name,
            tuple(f.star() for f in self.produced),
            tuple(f.star() for f in self.consumed),
            lambda p, q: rel(q, p),
            lambda p, q: val(q, p),
        )

    def transposed(self, name: str) -> CaseFamily:
        """Image under (c, b) -> (b, c); only meaningful for two boundary slots."""
        rel, val = self.relation, self.value
        return CaseFamily(
            name,
            self.produced,
            self.consumed,
            lambda p, q: rel(q, p),
            lambda p, q: val(q, p),
        )

    @property
    def signature(self) -> tuple[tuple[Family, ...], tuple[Family, ...]]:
        return tuple(sorted(self.consumed)), tuple(sorted(self.produced))


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _half_if_equal(i: int, j: int) -> Fraction:
    return 1 - Fraction(_delta(i, j), 2)


def _lengths(families: tuple[Family, ...], idx: Indices) -> list[int]:
    return [length(Generator(f, i)) for f, i in zip(families, idx)]


def _sum_eq(p: Indices, q: Indices) -> bool:
    return sum(p) == sum(q)


ACUTE_CASES = (
    CaseFamily("acute.grave_to_dot", (GR,), (DO,),
               lambda p, q: q[0] == p[0], lambda p, q: Fraction(1, 2)),
    CaseFamily("acute.bar_grave_to_bar", (BA, GR), (BA,),
               lambda p, q: q[0] == p[0] + p[1], lambda p, q: Fraction(1)),
    CaseFamily("acute.grave_pair_to_acute", (GR, GR), (AC,),
               lambda p, q: q[0] == p[0] + p[1], lambda p, q: _half_if_equal(*p)),
    CaseFamily("acute.bar_pair_to_grave", (BA, BA), (GR,),
               lambda p, q: q[0] == p[0] + p[1] - 1, lambda p, q: _half_if_equal(*p)),
)

GRAVE_CASES = tuple(
    case.flipped(case.name.replace("acute.", "grave.mirror_of_")) for case in ACUTE_CASES
)


def _min_len(consumed: tuple[Family, ...], produced: tuple[Family, ...]):
    def value(p: Indices, q: Indices) -> Fraction:
        return Fraction(min(_lengths(consumed, p) + _lengths(produced, q)))
    return value


def _diag_min_len(consumed: tuple[Family, ...], produced: tuple[Family, ...]):
    base = _min_len(consumed, produced)

    def value(p: Indices, q: Indices) -> Fraction:
        return (1 - Fraction(_delta(*p) * _delta(*q), 2)) * base(p, q)
    return value


_INTERIOR_BASE = (
    CaseFamily("interior.dot_split", (DO,), (DO, DO),
               lambda p, q: q[0] + q[1] == p[0], lambda p, q: _half_if_equal(*q)),
    CaseFamily("interior.bar_split_dot", (BA,), (DO, BA),
               lambda p, q: q[0] + q[1] == p[0], lambda p, q: Fraction(2 * q[1] - 1)),
    CaseFamily("interior.acute_split_dot", (AC,), (DO, GR),
               lambda p, q: q[0] + q[1] == p[0], lambda p, q: Fraction(2 * q[1])),
    CaseFamily("interior.grave_split_dot", (GR,), (DO, AC),
               lambda p, q: q[0] + q[1] == p[0], lambda p, q: Fraction(2 * q[1])),
    CaseFamily("interior.bar_acute_exchange", (BA, AC), (BA, GR),
               _sum_eq, _min_len((BA, AC), (BA, GR))),
    CaseFamily("interior.bar_pair_to_acute_grave", (BA, BA), (AC, GR),
               lambda p, q: q[0] + q[1] + 1 == p[0] + p[1], _min_len((BA, BA), (AC, GR))),
    CaseFamily("interior.acute_pair_exchange", (AC, AC), (GR, GR),
               _sum_eq, _diag_min_len((AC, AC), (GR, GR))),
    CaseFamily("interior.bar_pair_exchange", (BA, BA), (BA, BA),
               _sum_eq, _diag_min_len((BA, BA), (BA, BA))),
)


def _close_interior(base: tuple[CaseFamily, ...]) -> tuple[CaseFamily, ...]:
    # the two boundary slots around an interior point may be starred together
    # or swapped; both symmetries act on the listed cases
    seen: dict[tuple, CaseFamily] = {}
    for case in base:
        images = (
            case,
            case.flipped(case.name + ".flip"),
            case.transposed(case.name + ".swap"),
            case.flipped("tmp").transposed(case.name + ".flip_swap"),
        )
        for image in images:
            seen.setdefault(image.signature, image)
    return tuple(seen.values())


INTERIOR_CASES = _close_interior(_INTERIOR_BASE)


def cases_for(kind: SimpleKind) -> tuple[CaseFamily, ...]:
    if kind is SimpleKind.ACUTE:
        return ACUTE_CASES
    if kind is SimpleKind.GRAVE:
        return GRAVE_CASES
    return INTERIOR_CASES


def dot_rescale(consumed: Iterator[Generator] | tuple[Generator, ...], conv: Convention) -> Fraction:
    factor = Fraction(1)
    for g in consumed:
        if g.family is Family.DOT:
            factor *= Fraction(g.index, conv.w(g.index))
    return factor


def sub_patterns(b: BoundaryMonomial, families: tuple[Family, ...]) -> Iterator[tuple[Generator, ...]]:
    """Distinct sub-multisets of ``b`` whose family pattern is ``families``.

    Yields generator tuples aligned with ``families``; a repeated family
    yields each unordered choice once.
    """
    counts = b.counts()
    pools = [sorted(g for g in counts if g.family is f) for f in families]
    for choice in itertools.product(*pools):
        if any(
            families[s] == families[t] and choice[s] > choice[t]
            for s in range(len(families)) for t in range(s + 1, len(families))
        ):
            continue
        need: dict[Generator, int] = {}
        for g in choice:
            need[g] = need.get(g, 0) + 1
        if all(counts[g] >= n for g, n in need.items()):
            yield choice


def _assignments(gens: tuple[Generator, ...], families: tuple[Family, ...]) -> Iterator[Indices]:
    seen = set()
    for perm in itertools.permutations(gens):
        if all(g.family is f for g, f in zip(perm, families)):
            idx = tuple(g.index for g in perm)
            if idx not in seen:
                seen.add(idx)
                yield idx


@dataclass(frozen=True)
class Match:
    case: str
    consumed: tuple[Generator, ...]
    produced: tuple[Generator, ...]
    rest: BoundaryMonomial
    value: Fraction


def matches(c: BoundaryMonomial, kind: SimpleKind, b: BoundaryMonomial,
            conv: Convention = INDEX) -> list[Match]:
    """Every case decomposition of the pair (c, b).

    For each case family and each consumed pattern P inside b, the passive
    part d = b / P is fixed and Q = c / star(d) must fit the produced
    pattern.  Distinct decompositions are distinct coverings.
    """
    if c.degree != b.degree:
        return []
    found = []
    for case in cases_for(kind):
        for pattern in sub_patterns(b, case.consumed):
            rest = b.divide(pattern)
            produced = c.divide(rest.star())
            if produced is None or len(produced) != len(case.produced):
                continue
            p_idx = tuple(g.index for g in pattern)
            for q_idx in _assignments(produced.gens, case.produced):
                if case.relation(p_idx, q_idx):
                    value = (case.value(p_idx, q_idx) * dot_rescale(pattern, conv)
                             / aut_order(rest, conv))
                    found.append(Match(case.name, pattern, produced.gens, rest, value))
                    break
    return found


def two_point(c: BoundaryMonomial, b: BoundaryMonomial, conv: Convention = INDEX) -> Fraction:
    if c != b.star():
        return Fraction(0)
    return Fraction(1, aut_order(b, conv))


def three_point_boundary(c: BoundaryMonomial, kind: SimpleKind, b: BoundaryMonomial,
                         conv: Convention = INDEX) -> Fraction:
    if kind is SimpleKind.INTERIOR:
        raise ValueError("three_point_boundary needs an acute or grave simple value")
    return sum((m.value for m in matches(c, kind, b, conv)), Fraction(0))


def three_point_interior(c: BoundaryMonomial, b: BoundaryMonomial,
                         conv: Convention = INDEX) -> Fraction:
    return sum((m.value for m in matches(c, SimpleKind.INTERIOR, b, conv)), Fraction(0))


def three_point(c: BoundaryMonomial, kind: SimpleKind, b: BoundaryMonomial,
                conv: Convention = INDEX) -> Fraction:
    if kind is SimpleKind.INTERIOR:
        return three_point_interior(c, b, conv)
    return three_point_boundary(c, kind, b, conv)


def contraction_step(h_layer: Mapping[BoundaryMonomial, Fraction], kind: SimpleKind,
                     b: BoundaryMonomial, conv: Convention = INDEX) -> Fraction:
    """One recursion step by full contraction over the degree layer of ``b``.

    sum over beta of h(beta) * |Aut(beta)| * <star(beta), S, b>
    """
    total = Fraction(0)
    for beta in enumerate_degree(b.degree):
        h = h_layer.get(beta, 0)
        if h:
            total += h * aut_order(beta, conv) * three_point(beta.star(), kind, b, conv)
    return total


def produced_candidates(case: CaseFamily, p_idx: Indices) -> Iterator[Indices]:
    """Index tuples for the produced pattern compatible with ``p_idx``.

    Degree is conserved, so every produced index is bounded by the consumed
    degree.  Repeated families yield unordered choices once.
    """
    weight = sum(_lengths(case.consumed, p_idx))
    fams = case.produced
    top = weight // 2 + 1
    for q_idx in itertools.product(range(1, top + 1), repeat=len(fams)):
        if any(fams[s] == fams[t] and q_idx[s] > q_idx[t]
               for s in range(len(fams)) for t in range(s + 1, len(fams))):
            continue
        if sum(_lengths(fams, q_idx)) != weight:
            continue
        if case.relation(p_idx, q_idx):
            yield q_idx


@dataclass(frozen=True)
class Move:
    """A predecessor of ``b`` and its weight in one recursion step."""

    case: str
    predecessor: BoundaryMonomial
    coefficient: Fraction


def moves(kind: SimpleKind, b: BoundaryMonomial, conv: Convention = INDEX) -> Iterator[Move]:
    """Local moves: for each consumed pattern in b, every compatible produced one.

    The weight is |Aut(beta)| times the three-point value, where the
    predecessor is beta = star(Q) * d.
    """
    for case in cases_for(kind):
        for pattern in sub_patterns(b, case.consumed):
            rest = b.divide(pattern)
            p_idx = tuple(g.index for g in pattern)
            scale = case_scale(pattern, rest, conv)
            for q_idx in produced_candidates(case, p_idx):
                gained = tuple(Generator(f.star(), i) for f, i in zip(case.produced, q_idx))
                beta = BoundaryMonomial(rest.gens + gained)
                coefficient = aut_order(beta, conv) * case.value(p_idx, q_idx) * scale
                yield Move(case.name, beta, coefficient)


def case_scale(pattern: tuple[Generator, ...], rest: BoundaryMonomial, conv: Convention) -> Fraction:
    return dot_rescale(pattern, conv) / aut_order(rest, conv)


def step_by_moves(h: Callable[[BoundaryMonomial], Fraction], kind: SimpleKind,
                  b: BoundaryMonomial, conv: Convention = INDEX) -> Fraction:
    total = Fraction(0)
    for move in moves(kind, b, conv):
        value = h(move.predecessor)
        if value:
            total += move.coefficient * value
    return total

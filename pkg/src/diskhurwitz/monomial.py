"""Boundary value types as canonical monomials.

A boundary value type is a disjoint union of connected bipartite graphs of
four kinds.  Each kind is a generator family indexed by i >= 1:

    A(i)  acute  (i left, i+1 right vertices)   length 2i
    G(i)  grave  (i+1 left, i right vertices)   length 2i
    B(i)  bar    (i left, i right, open)        length 2i - 1
    D(i)  dot    (i left, i right, closed)      length 2i

A :class:`BoundaryMonomial` is a multiset of generators kept in canonical
order (family A < G < B < D, then index), so equality and hashing are
structural.
"""
from __future__ import annotations

import enum
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class Family(enum.IntEnum):
    ACUTE = 0
    GRAVE = 1
    BAR = 2
    DOT = 3

    @property
    def letter(self) -> str:
        return "AGBD"[self]

    @classmethod
    def from_letter(cls, letter: str) -> Family:
        return cls("AGBD".index(letter))

    def star(self) -> Family:
        if self is Family.ACUTE:
            return Family.GRAVE
        if self is Family.GRAVE:
            return Family.ACUTE
        return self


class Generator(NamedTuple):
    family: Family
    index: int

    @property
    def length(self) -> int:
        return length(self)

    def star(self) -> Generator:
        return Generator(self.family.star(), self.index)

    def __str__(self) -> str:
        return f"{self.family.letter}{self.index}"


def A(i: int) -> Generator:
    return _gen(Family.ACUTE, i)


def G(i: int) -> Generator:
    return _gen(Family.GRAVE, i)


def B(i: int) -> Generator:
    return _gen(Family.BAR, i)


def D(i: int) -> Generator:
    return _gen(Family.DOT, i)


def _gen(family: Family, i: int) -> Generator:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return Generator(family, i)


def length(g: Generator) -> int:
    """Edge count of the connected graph ``g``."""
    if g.family is Family.BAR:
        return 2 * g.index - 1
    return 2 * g.index


class DotWeight(enum.Enum):
    INDEX = "index"
    TWICE_INDEX = "twice-index"


@dataclass(frozen=True)
class Convention:
    """Automorphism weight attached to each dot component.

    ``INDEX`` takes w(i) = i, ``TWICE_INDEX`` takes w(i) = 2i.
    """

    dot_weight: DotWeight = DotWeight.INDEX

    def w(self, i: int) -> int:
        return i if self.dot_weight is DotWeight.INDEX else 2 * i

    def weight(self, g: Generator) -> int:
        """Per-component automorphism factor of ``g``."""
        if g.family is Family.BAR:
            return 1
        if g.family is Family.DOT:
            return self.w(g.index)
        return 2

    @property
    def name(self) -> str:
        return self.dot_weight.value

    @classmethod
    def from_name(cls, name: str) -> Convention:
        return cls(DotWeight(name))


INDEX = Convention(DotWeight.INDEX)
TWICE_INDEX = Convention(DotWeight.TWICE_INDEX)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class BoundaryMonomial:
    """Immutable canonical multiset of generators."""

    __slots__ = ("_gens", "_hash")

    def __init__(self, gens: Iterable[Generator] = ()):
        gens = tuple(sorted(Generator(Family(g[0]), int(g[1])) for g in gens))
        for g in gens:
            if g.index < 1:
                raise ValueError(f"generator index must be >= 1, got {g.index}")
        self._gens = gens
        self._hash = hash(gens)

    @classmethod
    def _from_sorted(cls, gens: tuple[Generator, ...]) -> BoundaryMonomial:
        obj = cls.__new__(cls)
        obj._gens = gens
        obj._hash = hash(gens)
        return obj

    @classmethod
    def from_counts(cls, counts: dict[Generator, int]) -> BoundaryMonomial:
        return cls(g for g, n in counts.items() for _ in range(n))

    @property
    def gens(self) -> tuple[Generator, ...]:
        return self._gens

    def counts(self) -> Counter[Generator]:
        return Counter(self._gens)

    def multiplicity(self, g: Generator) -> int:
        return self._gens.count(g)

    def sA(self, i: int) -> int:
        return self.multiplicity(Generator(Family.ACUTE, i))

    def sG(self, i: int) -> int:
        return self.multiplicity(Generator(Family.GRAVE, i))

    def sB(self, i: int) -> int:
        return self.multiplicity(Generator(Family.BAR, i))

    def sD(self, i: int) -> int:
        return self.multiplicity(Generator(Family.DOT, i))

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._gens)

    def __bool__(self) -> bool:
        return bool(self._gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundaryMonomial):
            return NotImplemented
        return self._gens == other._gens

    def __lt__(self, other: BoundaryMonomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BoundaryMonomial({format_monomial(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self)

    def __mul__(self, other: BoundaryMonomial | Generator) -> BoundaryMonomial:
        extra = (other,) if isinstance(other, Generator) else other._gens
        return BoundaryMonomial._from_sorted(tuple(sorted(self._gens + extra)))

    def sort_key(self) -> tuple:
        return (self.degree, self._gens)

    @property
    def degree(self) -> int:
        return sum(length(g) for g in self._gens)

    def star(self) -> BoundaryMonomial:
        return BoundaryMonomial(g.star() for g in self._gens)

    def divide(self, other: BoundaryMonomial | Iterable[Generator]) -> BoundaryMonomial | None:
        return divide(self, other)


EMPTY = BoundaryMonomial()


def monomial(*gens: Generator) -> BoundaryMonomial:
    return BoundaryMonomial(gens)


def degree(b: BoundaryMonomial) -> int:
    return b.degree


def star(b: BoundaryMonomial) -> BoundaryMonomial:
    return b.star()


def aut_order(b: BoundaryMonomial, conv: Convention = INDEX) -> int:
    """Order of the automorphism group of the graph ``b`` under ``conv``."""
    total = 1
    for g, s in b.counts().items():
        total *= conv.weight(g) ** s * math.factorial(s)
    return total


def min_length(b: BoundaryMonomial) -> int:
    if not b:
        raise ValueError("min_length of the empty monomial is undefined")
    return min(length(g) for g in b)


def divide(b: BoundaryMonomial, f: BoundaryMonomial | Iterable[Generator]) -> BoundaryMonomial | None:
    """``b / f`` when ``f`` is a sub-multiset of ``b``, else None."""
    rest = list(b.gens)
    for g in f:
        try:
            rest.remove(g)
        except ValueError:
            return None
    return BoundaryMonomial._from_sorted(tuple(rest))


def generators_up_to(k: int) -> list[Generator]:
    """All generators of length <= k, canonical order."""
    out = []
    for i in range(1, k // 2 + 1):
        out += [A(i), G(i), D(i)]
    out += [B(i) for i in range(1, (k + 1) // 2 + 1)]
    return sorted(out)


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple[BoundaryMonomial, ...]:
    gens = generators_up_to(k)
    found: list[BoundaryMonomial] = []

    def rec(start: int, remaining: int, acc: list[Generator]) -> None:
        if remaining == 0:
            found.append(BoundaryMonomial._from_sorted(tuple(acc)))
            return
        for pos in range(start, len(gens)):
            g = gens[pos]
            if length(g) <= remaining:
                acc.append(g)
                rec(pos, remaining - length(g), acc)
                acc.pop()

    rec(0, k, [])
    return tuple(sorted(found, key=lambda b: b.gens))


def enumerate_degree(k: int) -> list[BoundaryMonomial]:
    """All monomials of degree exactly ``k`` in canonical order."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    return list(_enumerate(k))


def enumerate_up_to(k: int) -> list[BoundaryMonomial]:
    return [b for d in range(k + 1) for b in _enumerate(d)]


def format_monomial(b: BoundaryMonomial) -> str:
    if not b:
        return "1"
    parts = []
    for g, s in sorted(b.counts().items()):
        parts.append(f"{g}^{s}" if s > 1 else str(g))
    return "*".join(parts)


_TERM = re.compile(r"([A-Za-z])(\d+)(?:\^(\d+))?")


def parse_monomial(text: str) -> BoundaryMonomial:
    """Parse ``"1"`` or ``term("*"term)*`` with term ``FAMILY INDEX ["^" EXP]``."""
    if text == "1":
        return EMPTY
    if not text:
        raise ParseError("empty monomial text", 0)
    gens: list[Generator] = []
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            raise ParseError(f"malformed term {text[pos:pos + 8]!r}", pos)
        letter, index, exp = m.group(1), int(m.group(2)), m.group(3)
        if letter not in "AGBD":
            raise ParseError(f"unknown family {letter!r}", pos)
        if index < 1:
            raise ParseError("index must be >= 1", m.start(2))
        count = 1 if exp is None else int(exp)
        if count < 1:
            raise ParseError("exponent must be >= 1", m.start(3))
        gens += [Generator(Family.from_letter(letter), index)] * count
        pos = m.end()
        if pos == len(text):
            return BoundaryMonomial(gens)
        if text[pos] != "*":
            raise ParseError(f"expected '*', found {text[pos]!r}", pos)
        pos += 1

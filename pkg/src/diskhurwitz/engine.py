"""Memoized evaluation of disk single Hurwitz numbers.

Indices are (m, acute, grave, b): m interior simple values, ``acute``
acute points, ``grave`` grave points, and one special boundary value of
type b.  The slice value h(m, acute, grave, b) splits as h_acute + h_grave
by the kind of simple point preceding the special value.
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .correlators import SimpleKind, contraction_step, step_by_moves
from .monomial import (
    INDEX,
    BoundaryMonomial,
    Convention,
    Family,
    aut_order,
    enumerate_degree,
    enumerate_up_to,
    format_monomial,
    parse_monomial,
)

CACHE_FORMAT_VERSION = 1

METHODS = ("moves", "contraction")


class CacheMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HurwitzIndex:
    m: int
    acute: int
    grave: int
    b: BoundaryMonomial

    @property
    def points(self) -> int:
        return self.acute + self.grave

    def key(self) -> tuple:
        return (self.m, self.acute, self.grave, self.b)


@dataclass(frozen=True)
class RefinedValue:
    h_acute: Fraction
    h_grave: Fraction

    @property
    def total(self) -> Fraction:
        return self.h_acute + self.h_grave


def base(b: BoundaryMonomial, conv: Convention = INDEX) -> Fraction:
    """Coverings with no simple critical values: only bar and dot components."""
    if any(g.family in (Family.ACUTE, Family.GRAVE) for g in b):
        return Fraction(0)
    return Fraction(1, aut_order(b, conv))


class HurwitzEngine:
    """Evaluator with a shared memo of slice values h(m, acute, grave, b).

    ``method`` selects how one recursion step is taken: ``"moves"`` walks
    the local predecessors of b, ``"contraction"`` sums over the whole
    degree layer.  ``boundary_first`` picks the reduction order when both
    interior and boundary points remain.
    """

    def __init__(self, conv: Convention = INDEX, method: str = "moves",
                 boundary_first: bool = True):
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}")
        self.conv = conv
        self.method = method
        self.boundary_first = boundary_first
        self._memo: dict[tuple, Fraction] = {}
        self._lock = threading.Lock()

    # -- memo -------------------------------------------------------------

    def _store(self, key: tuple, value: Fraction) -> Fraction:
        with self._lock:
            return self._memo.setdefault(key, value)

    def cached(self) -> dict[tuple, Fraction]:
        with self._lock:
            return dict(self._memo)

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()

    # -- recursion --------------------------------------------------------

    def _step(self, kind: SimpleKind, m: int, acute: int, grave: int,
              b: BoundaryMonomial) -> Fraction:
        """Apply one simple value of ``kind`` to the layer (m, acute, grave)."""
        if self.method == "contraction":
            layer = self.layer(m, acute, grave, b.degree)
            return contraction_step(layer, kind, b, self.conv)
        return step_by_moves(lambda beta: self.value(m, acute, grave, beta), kind, b, self.conv)

    def value(self, m: int, acute: int, grave: int, b: BoundaryMonomial) -> Fraction:
        """h(m, acute, grave, b)."""
        if min(m, acute, grave) < 0:
            return Fraction(0)
        key = (m, acute, grave, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if acute == grave == 0:
            value = base(b, self.conv) if m == 0 else self.interior_step(m, 0, 0, b)
        elif m > 0 and not self.boundary_first:
            value = self.interior_step(m, acute, grave, b)
        else:
            value = self.refined(m, acute, grave, b).total
        return self._store(key, value)

    def refined(self, m: int, acute: int, grave: int, b: BoundaryMonomial) -> RefinedValue:
        """(h_acute, h_grave); the empty slice acute = grave = 0 is split in half."""
        if acute == grave == 0:
            half = self.value(m, 0, 0, b) / 2
            return RefinedValue(half, half)
        h_acute = self._step(SimpleKind.ACUTE, m, acute - 1, grave, b) if acute else Fraction(0)
        h_grave = self._step(SimpleKind.GRAVE, m, acute, grave - 1, b) if grave else Fraction(0)
        return RefinedValue(h_acute, h_grave)

    def interior_step(self, m: int, acute: int, grave: int, b: BoundaryMonomial) -> Fraction:
        """h(m, acute, grave, b) from the layer with one fewer interior point."""
        if m < 1:
            raise ValueError("interior step needs m >= 1")
        return self._step(SimpleKind.INTERIOR, m - 1, acute, grave, b)

    def total(self, m: int, points: int, b: BoundaryMonomial) -> Fraction:
        """h(m, points, b): sum over all acute/grave splits of the boundary points."""
        return sum((self.value(m, a, points - a, b) for a in range(points + 1)), Fraction(0))

    def layer(self, m: int, acute: int, grave: int, degree: int) -> dict[BoundaryMonomial, Fraction]:
        return {b: self.value(m, acute, grave, b) for b in enumerate_degree(degree)}

    def warm(self, max_degree: int, max_points: int, threads: int = 1) -> None:
        """Fill the memo layer by layer of increasing m + acute + grave.

        Within a layer every monomial is independent, so the layer may be
        computed on a thread pool.
        """
        monomials = enumerate_up_to(max_degree)
        for n in range(max_points + 1):
            keys = [(m, a, n - m - a, b)
                    for m in range(n + 1) for a in range(n - m + 1) for b in monomials]
            if threads > 1:
                with ThreadPoolExecutor(threads) as pool:
                    list(pool.map(lambda k: self.value(*k), keys))
            else:
                for k in keys:
                    self.value(*k)

    # -- persistence ------------------------------------------------------

    def save_cache(self, path: str | Path) -> None:
        records = sorted(self.cached().items(),
                         key=lambda kv: (kv[0][:3], kv[0][3].degree, kv[0][3].gens))
        lines = [f"# diskhurwitz-memo format_version={CACHE_FORMAT_VERSION} "
                 f"dot_weight={self.conv.name}"]
        for (m, a, g, b), v in records:
            lines.append(f"{m}\t{a}\t{g}\t{format_monomial(b)}\t{v.numerator}\t{v.denominator}")
        write_atomic(Path(path), "\n".join(lines) + "\n")

    def load_cache(self, path: str | Path) -> int:
        text = Path(path).read_text()
        lines = text.splitlines()
        if not lines or not lines[0].startswith("# diskhurwitz-memo"):
            raise CacheMismatch(f"{path}: not a memo cache file")
        header = dict(item.split("=", 1) for item in lines[0].split()[2:])
        if int(header.get("format_version", -1)) != CACHE_FORMAT_VERSION:
            raise CacheMismatch(f"{path}: unsupported format_version {header.get('format_version')}")
        if header.get("dot_weight") != self.conv.name:
            raise CacheMismatch(
                f"{path}: cache built with dot_weight={header.get('dot_weight')}, "
                f"engine uses {self.conv.name}")
        n = 0
        for line in lines[1:]:
            if not line.strip():
                continue
            m, a, g, text_b, num, den = line.split("\t")
            self._store((int(m), int(a), int(g), parse_monomial(text_b)), Fraction(int(num), int(den)))
            n += 1
        return n


def write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


def indices(max_degree: int, max_points: int) -> Iterable[HurwitzIndex]:
    """Every (m, acute, grave, b) with degree(b) <= max_degree and m + acute + grave <= max_points."""
    for b in enumerate_up_to(max_degree):
        for n in range(max_points + 1):
            for m in range(n + 1):
                for a in range(n - m + 1):
                    yield HurwitzIndex(m, a, n - m - a, b)

"""Polynomial differential operators acting on coefficient tables.

A monomial is a sorted tuple of variables (repeats allowed).  An operator
is a finite sum of terms ``coefficient * x_M * d/dx_D`` where ``M`` and
``D`` are monomials: the multiplier and the multiset of variables
differentiated.  The representation is generic so the same code acts on
boundary p-variables and on the classical p_i.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Mono = tuple


@dataclass(frozen=True, order=True)
class Term:
    multiplier: Mono
    derivative: Mono
    coefficient: Fraction


def falling(counts: Mapping[Hashable, int], derivative: Mono) -> int:
    """Coefficient produced by differentiating a monomial with ``counts``."""
    result = 1
    for var, r in Counter(derivative).items():
        s = counts.get(var, 0)
        if s < r:
            return 0
        for t in range(r):
            result *= s - t
    return result


class PolyOperator:
    """Immutable finite sum of multiply-and-differentiate terms."""

    def __init__(self, terms: Iterable[Term | tuple] = ()):
        table: dict[tuple[Mono, Mono], Fraction] = defaultdict(Fraction)
        for t in terms:
            mult, der, coef = (t.multiplier, t.derivative, t.coefficient) if isinstance(t, Term) else t
            table[(tuple(sorted(mult)), tuple(sorted(der)))] += Fraction(coef)
        self._table = {k: v for k, v in table.items() if v}

    @property
    def table(self) -> dict[tuple[Mono, Mono], Fraction]:
        return dict(self._table)

    @property
    def terms(self) -> list[Term]:
        return [Term(m, d, c) for (m, d), c in sorted(self._table.items())]

    def __len__(self) -> int:
        return len(self._table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyOperator):
            return NotImplemented
        return self._table == other._table

    def __add__(self, other: PolyOperator) -> PolyOperator:
        return PolyOperator(self.terms + other.terms)

    def __neg__(self) -> PolyOperator:
        return PolyOperator(Term(t.multiplier, t.derivative, -t.coefficient) for t in self.terms)

    def __sub__(self, other: PolyOperator) -> PolyOperator:
        return self + (-other)

    def coefficient(self, multiplier: Iterable, derivative: Iterable) -> Fraction:
        return self._table.get((tuple(sorted(multiplier)), tuple(sorted(derivative))), Fraction(0))

    def preserves_weight(self, weight: Callable[[Hashable], int]) -> bool:
        return all(sum(map(weight, m)) == sum(map(weight, d)) for m, d in self._table)

    def act(self, coeffs: Mapping[Mono, Fraction]) -> dict[Mono, Fraction]:
        """Apply to a polynomial given as {monomial: coefficient}."""
        by_derivative: dict[Mono, list[tuple[Mono, Fraction]]] = defaultdict(list)
        for (mult, der), coef in self._table.items():
            by_derivative[der].append((mult, coef))
        out: dict[Mono, Fraction] = defaultdict(Fraction)
        for mono, value in coeffs.items():
            if not value:
                continue
            counts = Counter(mono)
            for der, targets in by_derivative.items():
                f = falling(counts, der)
                if not f:
                    continue
                rest = list(mono)
                for var in der:
                    rest.remove(var)
                for mult, coef in targets:
                    out[tuple(sorted(rest + list(mult)))] += coef * f * value
        return {k: v for k, v in out.items() if v}

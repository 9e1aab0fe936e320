"""Recursion tables and evolution operators transcribed as printed.

Each table is a :class:`PolyOperator` whose term ``c * x^P d^Q`` means: the
new coefficient at b receives ``c * falling(beta, Q) * h(beta)`` from
beta = b * Q / P.  Multiplicity factors such as (s + 1) in a recursion are
read from the predecessor, which is what the derivative supplies.  Sums
over index pairs run over ordered pairs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .monomial import A, B, D, G, Generator, length
from .operators import PolyOperator, Term


def _pairs(limit: int) -> Iterator[tuple[int, int]]:
    for i in range(1, limit + 1):
        for j in range(1, limit + 1):
            yield i, j


def _quads(limit: int) -> Iterator[tuple[int, int, int, int]]:
    for i, j in _pairs(limit):
        for k, l in _pairs(limit):
            yield i, j, k, l


class _Builder:
    def __init__(self, max_degree: int):
        self.max_degree = max_degree
        self.terms: list[Term] = []

    def add(self, coef, multiplier: list[Generator], derivative: list[Generator]) -> None:
        if sum(length(g) for g in multiplier) <= self.max_degree:
            self.terms.append(Term(tuple(multiplier), tuple(derivative), Fraction(coef)))

    def build(self) -> PolyOperator:
        return PolyOperator(self.terms)


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _acute(max_degree: int, dot_coef) -> PolyOperator:
    k = max_degree
    out = _Builder(k)
    for i in range(1, k + 1):
        out.add(dot_coef(i), [G(i)], [D(i)])
    for i, j in _pairs(k):
        out.add(1, [B(i), G(j)], [B(i + j)])
        out.add(1, [G(i), G(j)], [G(i + j)])
        out.add(1, [B(i), B(j)], [A(i + j - 1)])
    return out.build()


def acute_recursion(max_degree: int) -> PolyOperator:
    """The printed acute-point recursion."""
    return _acute(max_degree, lambda i: Fraction(i, 2))


def beta_operator(max_degree: int) -> PolyOperator:
    """The printed operator for an added acute point."""
    return _acute(max_degree, lambda i: i)


def grave_recursion(max_degree: int) -> PolyOperator:
    """The printed grave-point recursion; the printed grave operator is identical."""
    k = max_degree
    out = _Builder(k)
    for i in range(1, k + 1):
        out.add(1, [D(i)], [G(i)])
    for i, j in _pairs(k):
        out.add(2, [B(i + j)], [B(i), G(j)])
        out.add(2, [G(i + j)], [G(i), G(j)])
        out.add(Fraction(1, 2), [A(i + j - 1)], [B(i), B(j)])
    return out.build()


gamma_operator = grave_recursion


def interior_recursion(max_degree: int) -> PolyOperator:
    """The printed interior-point recursion; the printed interior operator is identical."""
    k = max_degree
    out = _Builder(k)
    for i, j in _pairs(k):
        out.add(Fraction(i + j, 2), [D(i), D(j)], [D(i + j)])
        out.add(Fraction(i * j, 2), [D(i + j)], [D(i), D(j)])
        out.add(2 * j - 1, [D(i), B(j)], [B(i + j)])
        out.add(i * (2 * j - 1), [B(i + j)], [D(i), B(j)])
        out.add(2 * 2 * j, [D(i), A(j)], [A(i + j)])
        out.add(2 * i * 2 * j, [A(i + j)], [D(i), A(j)])
        out.add(2 * 2 * j, [D(i), G(j)], [G(i + j)])
        out.add(2 * i * 2 * j, [G(i + j)], [D(i), G(j)])
    for i, j, k_, l in _quads(k):
        if i + j == k_ + l:
            bar_acute = 2 * min(2 * i - 1, 2 * j, 2 * k_ - 1, 2 * l)
            out.add(bar_acute, [B(k_), A(l)], [B(i), A(j)])
            out.add(bar_acute, [B(k_), G(l)], [B(i), G(j)])
            diag = (1 + _delta(i, j)) * (1 + _delta(k_, l))
            out.add(Fraction(diag, 4) * min(2 * i - 1, 2 * j - 1, 2 * k_ - 1, 2 * l - 1),
                    [B(k_), B(l)], [B(i), B(j)])
            out.add(diag * min(2 * i, 2 * j, 2 * k_, 2 * l), [G(k_), G(l)], [G(i), G(j)])
            out.add(diag * min(2 * i, 2 * j, 2 * k_, 2 * l), [A(k_), A(l)], [A(i), A(j)])
        if i + j + 1 == k_ + l:
            out.add(2 * (1 + _delta(k_, l)) * min(2 * i, 2 * j, 2 * k_ - 1, 2 * l - 1),
                    [B(k_), B(l)], [A(i), G(j)])
        if i + j == k_ + l + 1:
            out.add(Fraction(1 + _delta(i, j), 2) * min(2 * i - 1, 2 * j - 1, 2 * k_, 2 * l),
                    [A(k_), G(l)], [B(i), B(j)])
    return out.build()


alpha_operator = interior_recursion


def initial_condition(max_degree: int) -> dict[tuple[Generator, ...], Fraction]:
    """Coefficients of exp(bar p_1 + dot p_1 / 2) up to ``max_degree``."""
    out = {}
    fact_a = 1
    for a in range(max_degree + 1):
        if a:
            fact_a *= a
        fact_c = 1
        for c in range((max_degree - a) // 2 + 1):
            if c:
                fact_c *= c
            gens = tuple([B(1)] * a + [D(1)] * c)
            out[tuple(sorted(gens))] = Fraction(1, fact_a * fact_c * 2 ** c)
    return out

"""Truncated generating series and the evolution operators acting on them.

A slice is a polynomial in boundary variables, one per generator, stored as
{BoundaryMonomial: coefficient}.  A :class:`TruncatedSeries` holds one slice
per (m, acute, grave) inside its bounds.  Each simple value acts on the
total slice H by a differential operator; the derived operators here are
read off the correlator tables, with a term ``kappa * x^P d^star(Q)`` for
every case family, consumed pattern P and produced pattern Q.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import printed
from .correlators import SimpleKind, cases_for, dot_rescale, produced_candidates
from .engine import HurwitzEngine, base
from .monomial import (
    INDEX,
    BoundaryMonomial,
    Convention,
    Generator,
    enumerate_up_to,
    format_monomial,
    generators_up_to,
    length,
)
from .operators import PolyOperator, Term

Slice = dict[BoundaryMonomial, Fraction]
SliceKey = tuple[int, int, int]

OPERATOR_KIND = {"alpha": SimpleKind.INTERIOR, "beta": SimpleKind.ACUTE, "gamma": SimpleKind.GRAVE}


@dataclass(frozen=True)
class Bounds:
    m_int: int
    m_acute: int
    m_grave: int
    max_degree: int

    def keys(self) -> list[SliceKey]:
        return [(m, a, g) for m in range(self.m_int + 1)
                for a in range(self.m_acute + 1) for g in range(self.m_grave + 1)]

    def __contains__(self, key: SliceKey) -> bool:
        m, a, g = key
        return 0 <= m <= self.m_int and 0 <= a <= self.m_acute and 0 <= g <= self.m_grave


@dataclass
class TruncatedSeries:
    bounds: Bounds
    slices: dict[SliceKey, Slice] = field(default_factory=dict)

    def coefficient(self, m: int, acute: int, grave: int, b: BoundaryMonomial) -> Fraction:
        return self.slices.get((m, acute, grave), {}).get(b, Fraction(0))

    def slice(self, m: int, acute: int, grave: int) -> Slice:
        return self.slices.get((m, acute, grave), {})

    def to_json(self) -> str:
        """Nonzero coefficients keyed "m,acute,grave,monomial", sorted."""
        rows = []
        for (m, a, g), sl in self.slices.items():
            for b, v in sl.items():
                if v:
                    rows.append(((m, a, g, b.degree, b.gens),
                                 f"{m},{a},{g},{format_monomial(b)}",
                                 {"num": str(v.numerator), "den": str(v.denominator)}))
        rows.sort(key=lambda r: r[0])
        return json.dumps({key: val for _, key, val in rows}, indent=1)


def _act(op: PolyOperator, sl: Mapping[BoundaryMonomial, Fraction], max_degree: int) -> Slice:
    out = op.act({b.gens: v for b, v in sl.items()})
    result = {}
    for gens, v in out.items():
        b = BoundaryMonomial._from_sorted(gens)
        if b.degree <= max_degree:
            result[b] = v
    return result


def apply_slice(op: PolyOperator, sl: Mapping[BoundaryMonomial, Fraction], max_degree: int) -> Slice:
    """Apply ``op`` to one slice, discarding monomials above ``max_degree``."""
    return _act(op, sl, max_degree)


def apply(op: PolyOperator, series: TruncatedSeries) -> TruncatedSeries:
    """Slice-wise action of ``op``."""
    k = series.bounds.max_degree
    return TruncatedSeries(series.bounds, {key: _act(op, sl, k) for key, sl in series.slices.items()})


def _pattern_weight(gens: Iterable[Generator]) -> int:
    return sum(length(g) for g in gens)


def _consumed_patterns(families, max_degree: int) -> Iterable[tuple[Generator, ...]]:
    gens = generators_up_to(max_degree)
    pools = [[g for g in gens if g.family is f] for f in families]
    for choice in itertools.product(*pools):
        if any(families[s] == families[t] and choice[s] > choice[t]
               for s in range(len(families)) for t in range(s + 1, len(families))):
            continue
        if _pattern_weight(choice) <= max_degree:
            yield choice


def build_operator(which: str, max_degree: int, conv: Convention = INDEX) -> PolyOperator:
    """Operator by name: ``beta``, ``L_beta_derived`` or ``L_beta_literal`` (likewise alpha, gamma).

    Plain and ``_derived`` names give the derived operator; ``_literal``
    gives the printed one, which does not depend on ``conv``.
    """
    name, _, variant = which.removeprefix("L_").partition("_")
    if name not in OPERATOR_KIND or variant not in ("", "derived", "literal"):
        raise ValueError(f"unknown operator {which!r}")
    if variant == "literal":
        return getattr(printed, f"{name}_operator")(max_degree)
    return derived_operator(name, max_degree, conv)


def derived_operator(which: str, max_degree: int, conv: Convention = INDEX) -> PolyOperator:
    """Derived operator for one simple value: ``"alpha"``, ``"beta"`` or ``"gamma"``.

    kappa = value * (dot rescaling of P) * prod over star(Q) of the
    per-component weight, which turns the contraction with |Aut(beta)| / |Aut(d)|
    into a plain derivative.
    """
    kind = OPERATOR_KIND[which]
    terms = []
    for case in cases_for(kind):
        for pattern in _consumed_patterns(case.consumed, max_degree):
            p_idx = tuple(g.index for g in pattern)
            for q_idx in produced_candidates(case, p_idx):
                derivative = tuple(Generator(f.star(), i) for f, i in zip(case.produced, q_idx))
                kappa = case.value(p_idx, q_idx) * dot_rescale(pattern, conv)
                for g in derivative:
                    kappa *= conv.weight(g)
                terms.append(Term(pattern, derivative, kappa))
    return PolyOperator(terms)


@dataclass(frozen=True)
class StepOperators:
    """The three operators used to evolve slices."""

    beta: PolyOperator
    gamma: PolyOperator
    alpha: PolyOperator

    @classmethod
    def derived(cls, max_degree: int, conv: Convention = INDEX) -> StepOperators:
        return cls(*(derived_operator(w, max_degree, conv) for w in ("beta", "gamma", "alpha")))


@dataclass
class Evolution:
    """Refined and total series produced by evolving the base slice."""

    acute: TruncatedSeries
    grave: TruncatedSeries
    total: TruncatedSeries


def initial_slice(max_degree: int, conv: Convention = INDEX) -> Slice:
    return {b: v for b in enumerate_up_to(max_degree) if (v := base(b, conv))}


def evolve(ops: StepOperators, bounds: Bounds, conv: Convention = INDEX,
           initial: Slice | None = None) -> Evolution:
    """Series path: boundary points are applied before interior ones.

    The empty boundary slice is reached by interior steps from ``initial``
    and split evenly between the two refined series.
    """
    k = bounds.max_degree
    total: dict[SliceKey, Slice] = {}
    acute: dict[SliceKey, Slice] = {}
    grave: dict[SliceKey, Slice] = {}
    start = initial_slice(k, conv) if initial is None else dict(initial)
    order = sorted(bounds.keys(), key=lambda key: (sum(key), key))
    for m, a, g in order:
        if a == g == 0:
            h = start if m == 0 else _act(ops.alpha, total[(m - 1, 0, 0)], k)
            total[(m, 0, 0)] = h
            acute[(m, 0, 0)] = {b: v / 2 for b, v in h.items()}
            grave[(m, 0, 0)] = {b: v / 2 for b, v in h.items()}
            continue
        ha = _act(ops.beta, total[(m, a - 1, g)], k) if a else {}
        hg = _act(ops.gamma, total[(m, a, g - 1)], k) if g else {}
        acute[(m, a, g)] = ha
        grave[(m, a, g)] = hg
        summed = dict(ha)
        for b, v in hg.items():
            summed[b] = summed.get(b, Fraction(0)) + v
        total[(m, a, g)] = {b: v for b, v in summed.items() if v}
    return Evolution(TruncatedSeries(bounds, acute), TruncatedSeries(bounds, grave),
                     TruncatedSeries(bounds, total))


def from_engine(bounds: Bounds, engine: HurwitzEngine | None = None,
                conv: Convention = INDEX) -> Evolution:
    """Series whose coefficients are read from the memoized engine."""
    engine = engine or HurwitzEngine(conv)
    monomials = enumerate_up_to(bounds.max_degree)
    acute: dict[SliceKey, Slice] = {}
    grave: dict[SliceKey, Slice] = {}
    total: dict[SliceKey, Slice] = {}
    for key in bounds.keys():
        ra, rg, rt = {}, {}, {}
        for b in monomials:
            r = engine.refined(*key, b)
            t = engine.value(*key, b)
            if r.h_acute:
                ra[b] = r.h_acute
            if r.h_grave:
                rg[b] = r.h_grave
            if t:
                rt[b] = t
        acute[key], grave[key], total[key] = ra, rg, rt
    return Evolution(TruncatedSeries(bounds, acute), TruncatedSeries(bounds, grave),
                     TruncatedSeries(bounds, total))


def residual(which: str, series: Evolution, op: PolyOperator) -> dict[tuple, Fraction]:
    """Nonzero coefficients of the evolution equation for ``which``.

    beta:  A(m, a+1, g) - op H(m, a, g)
    gamma: G(m, a, g+1) - op H(m, a, g)
    alpha: H(m+1, a, g) - op H(m, a, g)
    """
    bounds = series.total.bounds
    shift, target = {
        "beta": ((0, 1, 0), series.acute),
        "gamma": ((0, 0, 1), series.grave),
        "alpha": ((1, 0, 0), series.total),
    }[which]
    out: dict[tuple, Fraction] = {}
    for key in bounds.keys():
        nxt = tuple(x + s for x, s in zip(key, shift))
        if nxt not in bounds:
            continue
        image = _act(op, series.total.slice(*key), bounds.max_degree)
        lhs = target.slice(*nxt)
        for b in set(image) | set(lhs):
            diff = lhs.get(b, Fraction(0)) - image.get(b, Fraction(0))
            if diff:
                out[(*key, b)] = diff
    return out

"""Comparisons between the printed tables and the contraction semantics.

Both reports are plain JSON-able dicts with deterministic ordering so that
rendering them with ``json.dumps(..., indent=1)`` is byte-stable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import printed
from .engine import HurwitzEngine, base
from .monomial import (
    INDEX,
    Convention,
    Generator,
    enumerate_up_to,
    format_monomial,
)
from .operators import PolyOperator
from .series import Bounds, StepOperators, build_operator, evolve

# printed table name -> (builder, which derived operator it should equal)
PRINTED_TABLES: dict[str, tuple[Callable[[int], PolyOperator], str]] = {
    "acute_recursion": (printed.acute_recursion, "beta"),
    "beta_operator": (printed.beta_operator, "beta"),
    "grave_recursion": (printed.grave_recursion, "gamma"),
    "gamma_operator": (printed.gamma_operator, "gamma"),
    "interior_recursion": (printed.interior_recursion, "alpha"),
    "alpha_operator": (printed.alpha_operator, "alpha"),
}

INITIAL_READINGS = ("refined_each", "total")


def rational(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return f"{x.numerator}/{x.denominator}"


def _word(gens: tuple[Generator, ...]) -> str:
    return "*".join(str(g) for g in gens) or "1"


def family_label(multiplier: tuple[Generator, ...], derivative: tuple[Generator, ...]) -> str:
    """Generator families of a term, e.g. ``G->D`` or ``BB->BB diagonal``.

    A term whose multiplier equals its derivative and whose indices all
    coincide is tagged ``diagonal``.
    """
    label = ("".join(g.family.letter for g in multiplier) + "->"
             + "".join(g.family.letter for g in derivative))
    indices = {g.index for g in multiplier + derivative}
    if multiplier == derivative and len(indices) == 1:
        label += " diagonal"
    return label


def operator_diff(printed_op: PolyOperator, derived_op: PolyOperator) -> list[dict]:
    rows = []
    lit, der = printed_op.table, derived_op.table
    for key in sorted(set(lit) | set(der)):
        p, d = lit.get(key, Fraction(0)), der.get(key, Fraction(0))
        if p == d:
            continue
        mult, deriv = key
        rows.append({
            "family": family_label(mult, deriv),
            "multiplier": _word(mult),
            "derivative": _word(deriv),
            "printed": rational(p),
            "derived": rational(d),
            "ratio": rational(p / d) if d else None,
        })
    return rows


def initial_condition_diff(max_degree: int, conv: Convention = INDEX) -> list[dict]:
    """The printed exponential initial slice under its two readings.

    ``refined_each`` reads it as each refined series at the empty boundary
    slice, which the contraction fixes at half the base value; ``total``
    reads it as the total series, fixed at the base value.
    """
    printed_ic = printed.initial_condition(max_degree)
    rows = []
    for reading in INITIAL_READINGS:
        scale = Fraction(1, 2) if reading == "refined_each" else Fraction(1)
        for b in enumerate_up_to(max_degree):
            normative = base(b, conv) * scale
            p = printed_ic.get(b.gens, Fraction(0))
            if p != normative:
                rows.append({"reading": reading, "b": format_monomial(b),
                             "printed": rational(p), "normative": rational(normative)})
    return rows


def value_diff(max_degree: int, max_points: int, conv: Convention = INDEX) -> list[dict]:
    """Slice values from the printed recursions versus the engine."""
    bounds = Bounds(max_points, max_points, max_points, max_degree)
    ops = StepOperators(printed.acute_recursion(max_degree), printed.grave_recursion(max_degree),
                        printed.interior_recursion(max_degree))
    literal = evolve(ops, bounds, conv)
    engine = HurwitzEngine(conv)
    rows = []
    for key in sorted(bounds.keys(), key=lambda k: (sum(k), k)):
        if sum(key) > max_points:
            continue
        sl = literal.total.slice(*key)
        for b in enumerate_up_to(max_degree):
            lit, nor = sl.get(b, Fraction(0)), engine.value(*key, b)
            if lit != nor:
                rows.append({"m": key[0], "acute": key[1], "grave": key[2], "b": format_monomial(b),
                             "printed": rational(lit), "normative": rational(nor)})
    return rows


def literal_rule_diff(max_degree: int = 4, max_points: int = 2, conv: Convention = INDEX) -> dict:
    """Every divergence between the printed tables and the derived ones."""
    derived = {w: build_operator(w, max_degree, conv) for w in ("alpha", "beta", "gamma")}
    tables = {}
    for name, (builder, which) in PRINTED_TABLES.items():
        tables[name] = operator_diff(builder(max_degree), derived[which])
    return {
        "dot_weight": conv.name,
        "max_degree": max_degree,
        "max_points": max_points,
        "tables": tables,
        "initial_condition": initial_condition_diff(max_degree, conv),
        "values": value_diff(max_degree, max_points, conv),
    }


def flagged_families(report: dict) -> set[tuple[str, str]]:
    return {(name, row["family"]) for name, rows in report["tables"].items() for row in rows}


def route_commutation_report(max_degree: int = 4, max_points: int = 3,
                             conv: Convention = INDEX) -> list[dict]:
    """Indices where boundary-first and interior-first reductions disagree."""
    first = HurwitzEngine(conv, boundary_first=True)
    second = HurwitzEngine(conv, boundary_first=False)
    rows = []
    for n in range(max_points + 1):
        for m in range(1, n + 1):
            for a in range(n - m + 1):
                g = n - m - a
                if a == g == 0:
                    continue
                for b in enumerate_up_to(max_degree):
                    x, y = first.value(m, a, g, b), second.value(m, a, g, b)
                    if x != y:
                        rows.append({"m": m, "acute": a, "grave": g, "b": format_monomial(b),
                                     "boundary_first": rational(x), "interior_first": rational(y),
                                     "difference": rational(x - y)})
    return rows

"""Exact disk single Hurwitz numbers from the pairing and three-point tables."""
from __future__ import annotations

from .engine import HurwitzEngine, RefinedValue, base
from .monomial import (
    EMPTY,
    INDEX,
    TWICE_INDEX,
    BoundaryMonomial,
    Convention,
    A,
    B,
    D,
    G,
    format_monomial,
    monomial,
    parse_monomial,
)

__all__ = [
    "A", "B", "D", "G", "EMPTY", "INDEX", "TWICE_INDEX",
    "BoundaryMonomial", "Convention", "HurwitzEngine", "RefinedValue",
    "base", "format_monomial", "monomial", "parse_monomial",
]

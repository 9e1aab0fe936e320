from __future__ import annotations

from fractions import Fraction

import pytest

from diskhurwitz.correlators import (
    ACUTE_CASES,
    GRAVE_CASES,
    INTERIOR_CASES,
    SimpleKind,
    contraction_step,
    matches,
    moves,
    three_point,
    three_point_boundary,
    three_point_interior,
    two_point,
)
from diskhurwitz.engine import base
from diskhurwitz.monomial import (
    INDEX,
    TWICE_INDEX,
    B,
    D,
    G,
    enumerate_degree,
    enumerate_up_to,
    monomial,
    parse_monomial,
)

ACUTE, GRAVE, INTERIOR = SimpleKind.ACUTE, SimpleKind.GRAVE, SimpleKind.INTERIOR
SMALL = enumerate_up_to(5)


def pairs(max_degree):
    for k in range(1, max_degree + 1):
        layer = enumerate_degree(k)
        for c in layer:
            for b in layer:
                yield c, b


@pytest.mark.parametrize("c, b, expected", [
    ("G1", "A1", Fraction(1, 2)),
    ("A1", "A1", 0),
    ("B2", "B2", 1),
])
def test_two_point(c, b, expected):
    assert two_point(parse_monomial(c), parse_monomial(b)) == expected


def test_two_point_symmetric():
    for c, b in pairs(4):
        assert two_point(c, b) == two_point(b, c)


@pytest.mark.parametrize("c, kind, b, expected", [
    ("D1", ACUTE, "G1", Fraction(1, 2)),
    ("A2", ACUTE, "G1^2", Fraction(1, 2)),
    ("A1*B1", GRAVE, "B2", 1),
    ("B2", ACUTE, "B2", 0),
])
def test_three_point_boundary(c, kind, b, expected):
    assert three_point_boundary(parse_monomial(c), kind, parse_monomial(b)) == expected


@pytest.mark.parametrize("c, b, expected", [
    ("B1^2", "B1^2", Fraction(1, 2)),
    ("B1*D1", "B2", 1),
    ("G1*D1", "A2", 2),
    ("A1", "G1", 0),
])
def test_three_point_interior(c, b, expected):
    assert three_point_interior(parse_monomial(c), parse_monomial(b)) == expected


def test_boundary_needs_boundary_kind():
    with pytest.raises(ValueError):
        three_point_boundary(monomial(B(1)), INTERIOR, monomial(B(1)))


def test_case_table_sizes():
    assert len(ACUTE_CASES) == len(GRAVE_CASES) == 4
    assert len(INTERIOR_CASES) == 15
    assert len({c.signature for c in INTERIOR_CASES}) == 15


def test_interior_swap_symmetry():
    for c, b in pairs(6):
        assert three_point_interior(c, b) == three_point_interior(b, c)


def test_star_flip_acute_grave():
    for c, b in pairs(6):
        assert three_point_boundary(c, ACUTE, b) == three_point_boundary(b.star(), GRAVE, c.star())


def test_star_flip_interior():
    for c, b in pairs(6):
        assert three_point_interior(c, b) == three_point_interior(b.star(), c.star())


def test_star_flip_breaks_under_twice_index_only_through_dots():
    # the dot rescaling is attached to the consumed side, so the flip picks up
    # a factor 2 per dot that changes sides
    c, b = monomial(D(1)), monomial(G(1))
    assert three_point_boundary(c, ACUTE, b, TWICE_INDEX) == Fraction(1, 2)
    assert three_point_boundary(b.star(), GRAVE, c.star(), TWICE_INDEX) == Fraction(1, 4)


def test_nonzero_implies_equal_degree():
    for c in SMALL[:20]:
        for b in SMALL[:20]:
            if c.degree != b.degree:
                for kind in SimpleKind:
                    assert three_point(c, kind, b) == 0


def test_multiple_decompositions_exist_and_are_summed():
    # b = B1^3 A1 against c = B1^3 G1 decomposes in two distinct ways, an
    # exchange of one bar with the acute and the bar self-pair exchange
    c, b = parse_monomial("B1^3*G1"), parse_monomial("B1^3*A1")
    found = matches(c, INTERIOR, b)
    assert len(found) >= 2
    assert three_point_interior(c, b) == sum(m.value for m in found)


def test_matches_are_unique_up_to_degree_three():
    for c, b in pairs(3):
        for kind in SimpleKind:
            assert len(matches(c, kind, b)) <= 1


def test_first_multiple_decomposition_at_degree_four():
    c, b = parse_monomial("A1*B1^2"), parse_monomial("G1*B1^2")
    assert sorted(m.case for m in matches(c, INTERIOR, b)) == [
        "interior.bar_acute_exchange.swap", "interior.bar_pair_exchange"]


@pytest.mark.parametrize("conv", [INDEX, TWICE_INDEX])
@pytest.mark.parametrize("b, kind, expected", [
    ("B1^2", INTERIOR, Fraction(1, 2)),
    ("D1", INTERIOR, 0),
    ("G1", ACUTE, Fraction(1, 2)),
])
def test_contraction_examples(conv, b, kind, expected):
    layer = {beta: base(beta, conv) for beta in enumerate_degree(2)}
    assert contraction_step(layer, kind, parse_monomial(b), conv) == expected


@pytest.mark.parametrize("conv", [INDEX, TWICE_INDEX])
@pytest.mark.parametrize("kind", list(SimpleKind))
def test_moves_reproduce_contraction_on_base_layer(conv, kind):
    for k in range(1, 6):
        layer = {beta: base(beta, conv) for beta in enumerate_degree(k)}
        for b in enumerate_degree(k):
            fast = sum((mv.coefficient * layer.get(mv.predecessor, 0) for mv in moves(kind, b, conv)),
                       Fraction(0))
            assert fast == contraction_step(layer, kind, b, conv), b


def test_moves_preserve_degree():
    for b in enumerate_up_to(6):
        for kind in SimpleKind:
            for mv in moves(kind, b):
                assert mv.predecessor.degree == b.degree


def test_acute_predecessors_of_grave_pair():
    # either both graves come from G(2), or one of them replaced a dot
    preds = {str(mv.predecessor) for mv in moves(ACUTE, monomial(G(1), G(1)))}
    assert preds == {"G2", "G1*D1"}

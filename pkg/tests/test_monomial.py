from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diskhurwitz.monomial import (
    EMPTY,
    INDEX,
    TWICE_INDEX,
    A,
    B,
    BoundaryMonomial,
    Convention,
    D,
    Family,
    G,
    ParseError,
    aut_order,
    divide,
    enumerate_degree,
    enumerate_up_to,
    format_monomial,
    min_length,
    monomial,
    parse_monomial,
)

generators = st.builds(
    lambda f, i: (A, G, B, D)[f](i), st.integers(0, 3), st.integers(1, 4))
monomials = st.lists(generators, max_size=5).map(BoundaryMonomial)


def test_lengths():
    assert [A(2).length, G(2).length, B(2).length, D(2).length] == [4, 4, 3, 4]


def test_index_must_be_positive():
    with pytest.raises(ValueError):
        B(0)


def test_degree_and_canonical_order():
    assert monomial(B(1), B(1)).degree == 2
    assert monomial(G(1), B(1)) == monomial(B(1), G(1))
    assert hash(monomial(D(1), A(2))) == hash(monomial(A(2), D(1)))


def test_star():
    assert monomial(A(1), B(2)).star() == monomial(G(1), B(2))
    assert monomial(D(3)).star() == monomial(D(3))


def test_aut_order_conventions():
    b = monomial(B(1), B(1), D(1))
    assert aut_order(b, INDEX) == 2
    assert aut_order(b, TWICE_INDEX) == 4
    assert aut_order(monomial(A(1), A(1), D(2)), INDEX) == 4 * 2 * 2
    assert aut_order(EMPTY) == 1


def test_min_length():
    assert min_length(monomial(A(2), B(1))) == 1
    with pytest.raises(ValueError):
        min_length(EMPTY)


def test_divide():
    b = monomial(B(1), B(1), G(2))
    assert divide(b, [B(1)]) == monomial(B(1), G(2))
    assert divide(b, [A(1)]) is None


def test_enumerate_small_degrees():
    assert enumerate_degree(0) == [EMPTY]
    assert enumerate_degree(1) == [monomial(B(1))]
    assert set(enumerate_degree(2)) == {
        monomial(A(1)), monomial(G(1)), monomial(D(1)), monomial(B(1), B(1))}
    assert len(enumerate_degree(3)) == 5


@pytest.mark.parametrize("k", range(7))
def test_enumeration_exact_degree_and_unique(k):
    found = enumerate_degree(k)
    assert len(found) == len(set(found))
    assert all(b.degree == k for b in found)


def test_enumerate_up_to_is_sorted_by_degree():
    found = enumerate_up_to(4)
    assert [b.degree for b in found] == sorted(b.degree for b in found)


@pytest.mark.parametrize("text, expected", [
    ("1", EMPTY),
    ("B1^2*D1", monomial(B(1), B(1), D(1))),
    ("G1", monomial(G(1))),
    ("D1*B1*B1", monomial(B(1), B(1), D(1))),
])
def test_parse(text, expected):
    assert parse_monomial(text) == expected


@pytest.mark.parametrize("text, position", [
    ("X1", 0), ("B0", 1), ("B1^0", 3), ("B1*", 3), ("B1 D1", 2), ("", 0), ("B1**D1", 3),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_monomial(text)
    assert err.value.position == position


def test_format():
    assert format_monomial(EMPTY) == "1"
    assert format_monomial(monomial(D(1), B(1), B(1))) == "B1^2*D1"


@given(monomials)
def test_roundtrip(b):
    assert parse_monomial(format_monomial(b)) == b


@given(monomials)
def test_star_is_an_involution_preserving_degree_and_aut(b):
    assert b.star().star() == b
    assert b.star().degree == b.degree
    assert aut_order(b.star()) == aut_order(b)


@given(monomials, monomials)
def test_product_adds_degree(b, c):
    assert (b * c).degree == b.degree + c.degree
    assert divide(b * c, c) == b


def test_convention_names():
    assert Convention.from_name("twice-index") == TWICE_INDEX
    assert TWICE_INDEX.w(3) == 6 and INDEX.w(3) == 3
    assert Family.from_letter("G").star() is Family.ACUTE
    assert Fraction(1, aut_order(monomial(B(1), B(1)))) == Fraction(1, 2)

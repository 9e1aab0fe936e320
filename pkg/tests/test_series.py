from __future__ import annotations

import json
from fractions import Fraction

import pytest

from diskhurwitz.engine import HurwitzEngine
from diskhurwitz.monomial import INDEX, TWICE_INDEX, D, G, parse_monomial
from diskhurwitz.operators import PolyOperator, Term
from diskhurwitz.series import (
    Bounds,
    StepOperators,
    TruncatedSeries,
    apply,
    build_operator,
    evolve,
    from_engine,
    residual,
)

B1 = parse_monomial("B1")
BOUNDS = Bounds(1, 2, 2, 4)


def length_weight(g):
    return g.length


@pytest.fixture(scope="module", params=[INDEX, TWICE_INDEX], ids=lambda c: c.name)
def conv(request):
    return request.param


@pytest.fixture(scope="module")
def series(conv):
    return from_engine(BOUNDS, HurwitzEngine(conv))


def test_operator_examples():
    assert build_operator("L_gamma_literal", 4).coefficient([D(1)], [G(1)]) == 1
    assert build_operator("L_beta_literal", 4).coefficient([G(1)], [D(1)]) == 1
    assert build_operator("L_beta_derived", 4, INDEX).coefficient([G(1)], [D(1)]) == Fraction(1, 2)
    assert build_operator("L_beta_derived", 4, TWICE_INDEX).coefficient([G(1)], [D(1)]) == 1


def test_unknown_operator_name():
    with pytest.raises(ValueError):
        build_operator("L_delta_literal", 2)


@pytest.mark.parametrize("which", ["alpha", "beta", "gamma", "L_alpha_literal", "L_beta_literal"])
def test_operators_preserve_weight(which, conv):
    assert build_operator(which, 6, conv).preserves_weight(length_weight)


@pytest.mark.parametrize("k", range(9))
def test_gamma_literal_equals_derived(k):
    assert build_operator("L_gamma_literal", k) == build_operator("L_gamma_derived", k, INDEX)


def test_apply_single_term():
    op = PolyOperator([Term((G(1),), (D(1),), Fraction(3))])
    s = TruncatedSeries(Bounds(0, 0, 0, 2), {(0, 0, 0): {parse_monomial("D1"): Fraction(1, 5)}})
    assert apply(op, s).coefficient(0, 0, 0, parse_monomial("G1")) == Fraction(3, 5)


def test_literal_gamma_reproduces_grave_slice(series):
    op = build_operator("L_gamma_literal", 4)
    image = apply(op, TruncatedSeries(BOUNDS, {(0, 0, 0): series.total.slice(0, 0, 0)}))
    engine = HurwitzEngine(INDEX)
    for text in ("A1", "G1", "D1", "B1^2"):
        b = parse_monomial(text)
        assert image.coefficient(0, 0, 0, b) == engine.refined(0, 0, 1, b).h_grave


def test_from_engine_examples(series):
    assert series.acute.coefficient(0, 0, 0, B1) == Fraction(1, 2)
    assert series.total.coefficient(0, 0, 0, parse_monomial("B1^2")) == Fraction(1, 2)


def test_total_is_sum_of_refined(series):
    for key in BOUNDS.keys():
        a, g, t = series.acute.slice(*key), series.grave.slice(*key), series.total.slice(*key)
        for b in set(a) | set(g) | set(t):
            assert t.get(b, 0) == a.get(b, 0) + g.get(b, 0)


def test_series_path_equals_engine_path(conv, series):
    ev = evolve(StepOperators.derived(BOUNDS.max_degree, conv), BOUNDS, conv)
    assert ev.total.slices == series.total.slices
    assert ev.acute.slices == series.acute.slices
    assert ev.grave.slices == series.grave.slices


@pytest.mark.parametrize("which", ["beta", "gamma"])
def test_boundary_residuals_vanish(which, conv, series):
    assert residual(which, series, build_operator(which, BOUNDS.max_degree, conv)) == {}


def test_alpha_residual_is_the_route_difference(conv, series):
    # the engine applies boundary points first; the alpha equation asks the
    # interior step to commute with them, which the tables do not satisfy
    res = residual("alpha", series, build_operator("alpha", BOUNDS.max_degree, conv))
    assert all(a + g >= 1 for (m, a, g, _) in res)
    assert res[(0, 0, 1, parse_monomial("A1"))] == Fraction(1, 2)


def test_alpha_residual_vanishes_on_empty_boundary_slice(conv, series):
    res = residual("alpha", series, build_operator("alpha", BOUNDS.max_degree, conv))
    assert not [k for k in res if k[1] == k[2] == 0]


def test_literal_beta_residual_is_the_dot_term():
    s = from_engine(BOUNDS, HurwitzEngine(INDEX))
    literal = residual("beta", s, build_operator("L_beta_literal", 4))
    derived = build_operator("beta", 4, INDEX)
    dot_only = PolyOperator(t for t in derived.terms if t.derivative == (D(t.derivative[0].index),))
    # literal - derived = the dot term once more, so the residual is minus its image
    for (m, a, g, b), v in literal.items():
        image = apply(dot_only, TruncatedSeries(BOUNDS, {(0, 0, 0): s.total.slice(m, a, g)}))
        assert v == -image.coefficient(0, 0, 0, b)
    assert literal


def test_json_export_is_sorted_and_stringly(series):
    text = series.total.to_json()
    data = json.loads(text)
    assert data["0,0,0,B1^2"] == {"num": "1", "den": "2"}
    assert text == series.total.to_json()
    keys = list(data)
    assert keys[0].startswith("0,0,0,")

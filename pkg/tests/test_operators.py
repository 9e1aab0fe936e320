from __future__ import annotations

from fractions import Fraction

from hypothesis import given, strategies as st

from diskhurwitz.operators import PolyOperator, Term, falling


def test_falling_factorial():
    assert falling({"x": 3}, ("x", "x")) == 6
    assert falling({"x": 1}, ("x", "x")) == 0
    assert falling({"x": 2, "y": 1}, ("x", "y")) == 2
    assert falling({}, ()) == 1


def test_terms_merge_and_cancel():
    op = PolyOperator([(("x",), ("y",), 1), (("x",), ("y",), Fraction(1, 2))])
    assert op.coefficient(["x"], ["y"]) == Fraction(3, 2)
    assert len(op - op) == 0
    assert op + op == PolyOperator([Term(("x",), ("y",), Fraction(3))])


def test_act_second_derivative():
    # x d^2/dy^2 applied to y^3 gives 6 x y
    op = PolyOperator([(("x",), ("y", "y"), 1)])
    assert op.act({("y", "y", "y"): Fraction(1)}) == {("x", "y"): Fraction(6)}


def test_act_skips_missing_variables():
    op = PolyOperator([(("x",), ("z",), 1)])
    assert op.act({("y",): Fraction(5)}) == {}


def test_weight_check():
    op = PolyOperator([((1, 1), (2,), 1)])
    assert op.preserves_weight(lambda i: i)
    assert not op.preserves_weight(lambda i: 1)


polys = st.dictionaries(
    st.lists(st.sampled_from("xyz"), max_size=3).map(lambda v: tuple(sorted(v))),
    st.fractions(max_denominator=5), max_size=4)


@given(polys, polys)
def test_act_is_linear(p, q):
    op = PolyOperator([(("x",), ("y",), 2), (("y", "y"), ("z",), Fraction(1, 3)), ((), ("x", "x"), 1)])
    summed = dict(p)
    for k, v in q.items():
        summed[k] = summed.get(k, 0) + v
    lhs = op.act(summed)
    rp, rq = op.act(p), op.act(q)
    rhs = {k: rp.get(k, 0) + rq.get(k, 0) for k in set(rp) | set(rq)}
    assert lhs == {k: v for k, v in rhs.items() if v}

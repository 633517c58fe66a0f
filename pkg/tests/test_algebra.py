from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conewalks.algebra import ts_coeff, ts_eval_expr, ts_invert, ts_mul, ts_sqrt
from conewalks.expr import ExprError, leaf
from conewalks.laurent import BiLaurent, to_q
from conewalks.models import get_model, kernel
from conewalks.series import NotInvertible, T, TruncationError, TSeries, laurent
from conewalks.solve import series_V

t = T()
x = laurent(BiLaurent.x())
xb = laurent(BiLaurent.x(-1))
y = laurent(BiLaurent.y())
yb = laurent(BiLaurent.y(-1))

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
monos = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
bilaurents = st.dictionaries(monos, rationals, max_size=3).map(BiLaurent)


@st.composite
def series(draw, order=6, unit=False):
    coeffs = draw(st.lists(bilaurents, min_size=order, max_size=order))
    if unit:
        c = draw(st.sampled_from([1, 4, 9, Fraction(1, 4), Fraction(25, 9)]))
        coeffs[0] = BiLaurent.const(c)
    return TSeries(coeffs, 0, order)


# BiLaurent

def test_bilaurent_drops_zero_terms():
    p = BiLaurent({(1, 0): 0, (0, 1): Fraction(2, 4)})
    assert p.terms == {(0, 1): to_q(Fraction(1, 2))}
    assert BiLaurent({(0, 0): 0}).is_zero()


def test_rationals_are_reduced():
    q = to_q(Fraction(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert to_q(0).denominator == 1


@given(bilaurents, bilaurents, bilaurents)
def test_bilaurent_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BiLaurent()


# multiplication

def test_geometric_series_telescopes():
    S = get_model("simple").steps.poly()
    partial = sum(((t * laurent(S)) ** n for n in range(5)), TSeries.zero())
    prod = ts_mul(1 - t * laurent(S), partial)
    assert prod.truncate_t(5).agrees(TSeries.const(1))


def test_valuations_cancel():
    assert ts_mul(t ** -1 * x, t * xb).agrees(TSeries.const(1))


def test_hand_product():
    a = (2 * t + 8 * t ** 4).truncate_t(6)
    sq = ts_mul(a, a)
    assert sq.truncate_t(6).agrees(4 * t ** 2 + 32 * t ** 5)
    # relative precision is kept: a = 2t(1 + O(t^5)) so a^2 is known below t^7
    assert sq.order == 7


def test_product_keeps_tightest_order():
    a = (1 + t).truncate_t(4)
    b = (1 + t * t).truncate_t(3)
    assert (a * b).order == 3
    # with positive valuation the known range shifts
    assert (t * a).order == 5


# inversion

def test_inverse_counts_closed_walks():
    inv = ts_invert(kernel(get_model("simple").steps), 5)
    # 4 closed walks of length 2 with N, S, E, W steps
    assert ts_coeff(inv, 0, 0, 2) == 4
    assert ts_coeff(inv, 0, 0, 0) == 1


def test_full_plane_orderings():
    # one NE, one W, one S step in any order
    K = kernel(get_model("reverse-kreweras").companion)
    assert ts_coeff(ts_invert(K, 6), 0, 0, 3) == 6
    assert ts_coeff(ts_invert(K, 6), 5, 0, 1) == 0


def test_invert_one():
    assert ts_invert(TSeries.const(1)).agrees(TSeries.const(1))


def test_inverse_reproduces_geometric_sum():
    S = get_model("reverse-kreweras").companion.poly()
    inv = ts_invert(1 - t * laurent(S), 6)
    direct = sum(((t * laurent(S)) ** n for n in range(6)), TSeries.zero())
    assert inv.agrees(direct, 6)


def test_invert_rejects_non_monomial_lead():
    with pytest.raises(NotInvertible):
        ts_invert((x + y + t).truncate_t(4))


def test_division_by_positive_valuation():
    q = TSeries.const(1) / (t * (1 + t)).truncate_t(6)
    assert q.val == -1
    assert (q * t * (1 + t)).agrees(TSeries.const(1), 4)


def test_coefficient_beyond_order_is_refused():
    with pytest.raises(TruncationError):
        (1 + t).truncate_t(2).coeff(0, 0, 3)


# square roots

def test_sqrt_catalan():
    r = ts_sqrt((1 - 4 * t * t).truncate_t(8))
    assert r.agrees(1 - 2 * t ** 2 - 2 * t ** 4 - 4 * t ** 6)


def test_sqrt_one():
    assert ts_sqrt(TSeries.const(1), 4).agrees(TSeries.const(1))


def test_sqrt_negative_valuation():
    a = (t ** -2 * (1 + 4 * t)).scale(Fraction(1, 4)).truncate_t(6)
    r = ts_sqrt(a)
    assert r.val == -1
    assert r.coeff(0, 0, -1) == Fraction(1, 2)
    assert r.coeff(0, 0, 0) == 1
    assert r.coeff(0, 0, 1) == -1
    assert (r * r).agrees(a)


def test_sqrt_odd_valuation_ramifies():
    r = ts_sqrt(t.truncate_t(4) * (1 + t))
    assert r.ram == 2
    assert r.coeff(0, 0, Fraction(1, 2)) == 1
    assert (r * r).agrees(t * (1 + t), 3)


def test_sqrt_needs_square_leading_rational():
    with pytest.raises(NotInvertible):
        ts_sqrt((2 + t).truncate_t(4))
    with pytest.raises(NotInvertible):
        ts_sqrt((x + t).truncate_t(4))


# expressions

def test_expr_three_halves_power():
    V = leaf("V")
    e = (1 - V ** 3) ** Fraction(3, 2) / V ** 2
    val = ts_eval_expr(e, {"V": series_V(12)}, 4)
    assert val.coeff(0, 0, -2) == Fraction(1, 4)
    assert val.coeff(0, 0, -1) == 0
    assert val.coeff(0, 0, 0) == 0
    # 1/V^2 gives -2t and (1 - V^3)^(3/2) = 1 - 12t^3 + ... gives -3t
    assert val.coeff(0, 0, 1) == -5


def test_expr_rational_invariant_has_valuation_minus_one():
    X = leaf("x")
    tt = leaf("t")
    e = 1 / X ** 2 - 1 / (X * tt) - X
    val = ts_eval_expr(e, {"x": BiLaurent.x(), "t": t}, 3)
    assert val.val == -1
    assert val.coeff_t(-1) == BiLaurent.x(-1).scale(-1)


def test_expr_zero_times_anything():
    e = 0 * leaf("a")
    assert ts_eval_expr(e, {"a": series_V(6)}, 5).is_zero()


def test_expr_reports_failing_path():
    e = leaf("a") / (leaf("a") - leaf("a"))
    with pytest.raises(ExprError) as info:
        ts_eval_expr(e, {"a": series_V(6)}, 4)
    assert "div" in info.value.path


def test_expr_unbound_leaf():
    with pytest.raises(ExprError):
        ts_eval_expr(leaf("a") + leaf("b"), {"a": t}, 3)


# properties

@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_series_ring_axioms(a, b, c):
    assert ((a * b) * c - a * (b * c)).is_zero()
    assert (a * (b + c) - (a * b + a * c)).is_zero()
    assert (a + b - (b + a)).is_zero()


@settings(max_examples=200, deadline=None)
@given(series(unit=True))
def test_invert_round_trip(u):
    assert (u * ts_invert(u) - 1).is_zero()


@settings(max_examples=200, deadline=None)
@given(series(unit=True))
def test_sqrt_round_trip(u):
    r = ts_sqrt(u)
    assert (r * r - u).is_zero()
    assert r.coeffs[0].constant() > 0


@settings(max_examples=40, deadline=None)
@given(series(), st.sampled_from([2, 3]))
def test_ramification_round_trip(a, k):
    lifted = a.lift(k)
    assert lifted.ram == k * a.ram
    assert (lifted.restrict() - a).is_zero()


@settings(max_examples=30, deadline=None)
@given(series())
def test_json_round_trip(a):
    assert (TSeries.from_json(a.to_json()) - a).is_zero()
    assert TSeries.from_json(a.to_json()).order == a.order

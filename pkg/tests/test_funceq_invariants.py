import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conewalks.algebra import ts_sqrt
from conewalks.enumeration import (assemble_series, at_x0, at_y0, coefficient_series, count_walks,
                                   generating_series)
from conewalks.funceq import funceq_checks, model_data, report_zero, residual_eqfunc_gen
from conewalks.invariants import (DECOUPLING_MODELS, Frac, InvariantError, build_I1J1,
                                  build_three_quadrant_pair, check_divisible, check_linear_identity,
                                  decoupling_checks, decoupling_table, F_from_formula,
                                  invariant_lemma_check, known_invariants, kreweras_trivial_pair,
                                  random_pair, rational_pair, root_substitution_residuals,
                                  trivial_pair)
from conewalks.laurent import BiLaurent
from conewalks.models import CATALOG, delta, get_model, kernel, mixed_term
from conewalks.series import T, TSeries, laurent
from conewalks.solve import series_V

t = T()
x, y = laurent(BiLaurent.x()), laurent(BiLaurent.y())
xb, yb = laurent(BiLaurent.x(-1)), laurent(BiLaurent.y(-1))
ONE_Y = BiLaurent.y() + 1


# functional equations against counted series

@pytest.mark.parametrize("name", list(CATALOG))
def test_functional_equations_hold(name):
    reports = funceq_checks(name, 14)
    assert reports
    assert all(r.ok for r in reports), [r.to_json() for r in reports if not r.ok]


def test_wrong_indicator_is_detected():
    # (-1,-1) is not a Kreweras step, so the C00 term must not appear
    d = model_data("kreweras", 8)
    assert residual_eqfunc_gen(d).truncate_t(7).is_zero()
    wrong = residual_eqfunc_gen(d) + t * xb * yb * d.C00
    r = report_zero("eqfunc-gen", "kreweras", 6, wrong)
    assert not r.ok
    assert r.first_failure[0] == 1


def test_linear_identity_residual():
    # K * C = 1 - ... rewritten as a sum of products, on the simple model
    C = generating_series("simple", order=10)
    K = kernel(get_model("simple").steps)
    res = check_linear_identity([(K, C)], TSeries.const(1), 0)
    assert res.is_zero()
    res = check_linear_identity([(K, C)], TSeries.const(1), 3)
    assert not res.is_zero()


def test_report_flags_short_residual():
    r = report_zero("x", "kreweras", 8, (t * 0).truncate_t(4))
    assert not r.ok
    assert "insufficient truncation" in r.detail


# divisibility

def test_rational_pair_of_kreweras_steps_is_divisible():
    steps = get_model("reverse-kreweras").companion
    k = known_invariants("reverse-kreweras")
    assert k["I0"].equals(Frac(xb * xb - xb * t ** -1 - x), 6)
    ok, H, bad = check_divisible(k["I0"] - k["J0"], steps, (2, 2), 10)
    assert ok and bad is None
    # H = (x - y) / (t x y)
    assert (H - (yb - xb) * t ** -1).truncate_t(11).is_zero()


@pytest.mark.parametrize("name", ["kreweras", "simple", "m6", "gessel"])
def test_constant_is_not_divisible(name):
    ok, _, bad = check_divisible(Frac(TSeries.const(1)), get_model(name).steps, (2, 2), 10)
    assert not ok
    assert bad is not None


def test_decoupling_expression_divisible_for_kreweras():
    m = get_model("kreweras")
    d = decoupling_table(m)
    expr = Frac(y) - Frac(mixed_term(m.companion)) * d["G"] - d["F"]
    assert check_divisible(expr, m.companion, (2, 2), 10)[0]


def test_divisible_functions_vanish_on_the_kernel_root():
    steps = get_model("reverse-kreweras").companion
    k = known_invariants("reverse-kreweras")
    rx, ry = root_substitution_residuals(k["I0"] - k["J0"], steps, 8)
    assert rx.is_zero() and ry.is_zero()


# tabulated invariants

def test_known_invariant_entries():
    k = known_invariants("m6")
    assert "I0" not in k
    assert k["f"].equals(Frac(-xb), 5)
    assert k["g"].equals(Frac(y * (1 - t * y) * t ** -1, ONE_Y), 5)
    k = known_invariants("simple")
    assert k["f"].equals(Frac(-xb), 5)
    assert k["g"].equals(Frac(y * t ** -1, ONE_Y), 5)


def test_infinite_group_has_no_rational_pair():
    with pytest.raises(InvariantError):
        rational_pair("m7")
    with pytest.raises(InvariantError):
        known_invariants("gessel")


def test_kreweras_quadrant_pair_matches_closed_form():
    order = 12
    Q = generating_series("reverse-kreweras", "quadrant", order + 3)
    p = build_I1J1("kreweras", order)
    I1 = Frac(t * at_y0(Q) - x * t ** -1 + x * x)
    J1 = Frac(-t * at_x0(Q) - yb + t * coefficient_series(Q, 0, 0))
    assert p.I.equals(I1, order)
    assert p.J.equals(J1, order)
    K = kernel(get_model("kreweras").companion)
    ratio = -(x * t ** -1) * K * (1 + t * y * Q)
    assert (I1 - J1).equals(Frac(ratio), order)


def test_gessel_pair_from_simple_walks():
    order = 10
    Q = generating_series("gessel", "quadrant", order + 3)
    p = build_I1J1("simple", order)
    assert p.I.equals(Frac(t * at_y0(Q) + xb), order)


def test_da_quadrant_pair():
    order = 10
    Q = assemble_series(count_walks(get_model("m6").companion, "quadrant", order + 2))
    p = build_I1J1("m6", order)
    want = Frac(-t * (1 + y) * at_x0(Q) + t * coefficient_series(Q, 0, 0)) + Frac(
        y * (1 - t * y) * t ** -1, ONE_Y)
    assert p.J.equals(want, order)


# decoupling

@pytest.mark.parametrize("name", DECOUPLING_MODELS)
def test_decouplings(name):
    reports = decoupling_checks(name, 10)
    assert all(r.ok for r in reports), [r.to_json() for r in reports if not r.ok]


def test_decoupling_table_entries():
    d = decoupling_table("kreweras")
    assert d["F"].equals(Frac(t ** -1 - 2 * x), 4)
    assert d["H"].num.is_zero()
    d = decoupling_table("m6")
    assert d["H"].equals(Frac(-2 * y * t ** -1, ONE_Y), 4)
    assert F_from_formula("reverse-kreweras").equals(decoupling_table("reverse-kreweras")["F"], 6)
    with pytest.raises(InvariantError):
        decoupling_table("simple")


# three-quadrant pairs

def test_kreweras_three_quadrant_pair():
    order = 12
    tq = build_three_quadrant_pair("kreweras", order)
    U = model_data("kreweras", order + 4).Ux0
    assert tq.pair.I.equals(Frac((2 * t * U + 2 * x - t ** -1) ** 2), order)
    assert all(r.ok for r in tq.pair.check(order))


def test_da_three_quadrant_pair():
    order = 10
    tq = build_three_quadrant_pair("m6", order)
    d = model_data("m6", order + 4)
    S = Frac(y * d.D) + Frac((1 - y) * t ** -1, ONE_Y)
    assert tq.pair.J.equals(Frac(delta(get_model("m6").companion)) * S * S, order)


@pytest.mark.parametrize("name", DECOUPLING_MODELS)
def test_R_at_one_two_routes(name):
    tq = build_three_quadrant_pair(name, 15)
    assert tq.R.eval_x(1).equals(Frac(tq.R_at_1_alt), 15)


def test_reverse_kreweras_pair_needs_pole_bound_three():
    # the certificate is unique and has poles of order 3 in x and y
    tq = build_three_quadrant_pair("reverse-kreweras", 15, (3, 3))
    assert all(r.ok for r in tq.pair.check(15))


@pytest.mark.xfail(strict=True, reason="reverse-kreweras three-quadrant certificate has pole order 3")
def test_reverse_kreweras_pair_with_pole_bound_two():
    tq = build_three_quadrant_pair("reverse-kreweras", 15, (2, 2))
    assert all(r.ok for r in tq.pair.check(15))


# invariant lemma

def test_kreweras_trivial_pair_constant():
    order = 10
    It, Jt, steps = kreweras_trivial_pair(order)
    ok, A = invariant_lemma_check(It, Jt, steps, order)
    assert ok
    V = series_V(order + 6)
    closed = 2 * ts_sqrt(1 - V ** 3) ** 3 / (V * V) + (V ** 6 + 12 * V ** 3 + 8) / (4 * V * V)
    assert (A - closed).truncate_t(order + 1).is_zero()


def test_quadrant_pair_is_not_constant():
    p = build_I1J1("kreweras", 8)
    assert invariant_lemma_check(p.I, p.J, p.steps, 8) == (False, None)


def test_constant_pair_is_constant():
    steps = get_model("kreweras").companion
    c = TSeries.const(Fraction(5, 2))
    ok, A = invariant_lemma_check(Frac(c), Frac(c), steps, 6)
    assert ok and A.coeff(0, 0, 0) == Fraction(5, 2)


# closure

@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["kreweras", "reverse-kreweras", "double-kreweras", "simple", "m6"]),
       st.integers(0, 2 ** 32), st.booleans())
def test_pairs_closed_under_sum_and_product(name, seed, product):
    rng = random.Random(seed)
    p = random_pair(name, 6, rng)
    q = random_pair(name, 6, rng)
    r = p * q if product else p + q
    assert r.ok(6)


def test_trivial_pair():
    steps = get_model("simple").companion
    p = trivial_pair(3, steps)
    assert p.ok(8)

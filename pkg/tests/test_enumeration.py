import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conewalks.enumeration import (REGIONS, EnumerationError, SplitError, boundary_series,
                                   brute_force_count, count_walks, generating_series,
                                   assemble_series, in_region, series_A, split_UD)
from conewalks.laurent import BiLaurent
from conewalks.models import StepSet, get_model

SMALL = [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0)]


def independent_count(steps, region, n):
    """Tally endpoints over all |S|^n step sequences, without recursion."""
    def inside(p):
        if region == "quadrant":
            return p[0] >= 0 and p[1] >= 0
        if region == "three-quadrant":
            return p[0] >= 0 or p[1] >= 0
        return True

    out = {}
    for seq in itertools.product(sorted(steps.steps), repeat=n):
        p, ok = (0, 0), True
        for a, b in seq:
            q = (p[0] + a, p[1] + b)
            # the two diagonal jumps that cut the corner of the missing quadrant
            if region == "three-quadrant" and {p, q} == {(0, -1), (-1, 0)}:
                ok = False
            if not inside(q) or not ok:
                ok = False
                break
            p = q
        if ok:
            out[p] = out.get(p, 0) + 1
    return out


def test_kreweras_small_counts():
    assert count_walks("kreweras", "three-quadrant", 3).count(3, 0, 0) == 4
    assert count_walks("kreweras", "quadrant", 3).count(3, 0, 0) == 2


def test_simple_first_step():
    assert count_walks("simple", "three-quadrant", 1).total(1) == 4


@pytest.mark.parametrize("name", ["kreweras", "reverse-kreweras", "double-kreweras", "diagonal",
                                  "gessel", "scarecrow"])
@pytest.mark.parametrize("region", REGIONS)
def test_dp_matches_brute_force(name, region):
    steps = get_model(name).steps
    n = 5
    table = count_walks(name, region, n)
    want = independent_count(steps, region, n)
    got = {(i, j): c for i, j, c in table.nonzero(n)}
    assert got == want
    assert brute_force_count(steps, region, n) == want


@settings(max_examples=25, deadline=None)
@given(st.sets(st.sampled_from(SMALL), min_size=1), st.sampled_from(REGIONS))
def test_dp_matches_brute_force_random_models(pts, region):
    steps = StepSet.of(pts)
    table = count_walks(steps, region, 4)
    assert {(i, j): c for i, j, c in table.nonzero(4)} == independent_count(steps, region, 4)


@pytest.mark.parametrize("name", ["kreweras", "simple", "m7", "gessel"])
def test_region_monotonicity(name):
    n = 8
    q, c, p = (count_walks(name, r, n) for r in ("quadrant", "three-quadrant", "full-plane"))
    for k in range(n + 1):
        for i, j, v in p.nonzero(k):
            assert q.count(k, i, j) <= c.count(k, i, j) <= v
        size = len(get_model(name).steps)
        assert c.total(k) <= size ** k
    assert p.total(n) == len(get_model(name).steps) ** n


@pytest.mark.parametrize("name", ["kreweras", "reverse-kreweras", "double-kreweras", "simple",
                                  "diagonal", "m6", "m7", "m8", "m9"])
def test_symmetric_counts(name):
    table = count_walks(name, "three-quadrant", 9)
    for n in range(10):
        for i, j, c in table.nonzero(n):
            assert table.count(n, j, i) == c


def test_assembled_series_coefficients():
    Q = assemble_series(count_walks("reverse-kreweras", "quadrant", 3))
    assert Q.coeff_t(1) == BiLaurent.x() + BiLaurent.y()
    assert Q.coeff_t(0) == BiLaurent.const(1)
    C = generating_series("kreweras", order=4)
    assert C.coeff(-1, 0, 1) == 1


@pytest.mark.parametrize("name,kind", [("kreweras", "symmetric"), ("double-kreweras", "symmetric"),
                                       ("m6", "symmetric"), ("diagonal", "half"),
                                       ("gessel-asymmetric", "asymmetric")])
def test_split_recomposes(name, kind):
    C = generating_series(name, order=12)
    sp = split_UD(C, kind)
    assert (sp.recompose() - C).is_zero()


def test_split_rejects_asymmetric_series():
    with pytest.raises(SplitError):
        split_UD(generating_series("gessel", order=6), "symmetric")


def test_split_pieces_for_kreweras():
    C = generating_series("kreweras", order=12)
    sp = split_UD(C)
    D0 = boundary_series("D0", split=sp)
    C00 = boundary_series("C00", C=C)
    assert (D0 - C00).is_zero()
    # C-(x) = x U(x, 0)
    Cm = boundary_series("C-(x)", C=C)
    Ux0 = boundary_series("U(x,0)", split=sp)
    assert (Cm - Ux0.map_coeffs(lambda c: c.shift(1, 0))).is_zero()


def test_diagonal_parity():
    table = count_walks("diagonal", "three-quadrant", 10)
    for n in range(11):
        assert all((i + j) % 2 == 0 for i, j, _ in table.nonzero(n))


def test_boundary_selectors():
    C = generating_series("kreweras", order=6)
    assert boundary_series("C-(xbar)", C=C).coeff(-1, 0, 1) == 1
    assert boundary_series("C(1,1)", C=C).coeff(0, 0, 1) == 3
    Qs = generating_series("kreweras", "quadrant", 6)
    assert boundary_series("Q00", Qs=Qs).coeff(0, 0, 3) == 2
    with pytest.raises(EnumerationError):
        boundary_series("C(2,2)", C=C)
    with pytest.raises(EnumerationError):
        boundary_series("U00", C=C)


def test_series_A_first_coefficient():
    A = series_A("simple", 6)
    third = Fraction(1, 3)
    want = BiLaurent({(0, 0): 2 * third, (-2, 0): third, (0, -2): third})
    assert A.coeff_t(0) == want


@pytest.mark.parametrize("name", ["simple", "diagonal"])
def test_series_A_routes_agree(name):
    assert (series_A(name, 13) - series_A(name, 13, route="quadrant")).is_zero()


def test_series_A_diagonal_parity():
    A = series_A("diagonal", 10)
    for n in range(10):
        assert all((i + j) % 2 == 0 for (i, j) in A.coeff_t(n).terms)


def test_csv_and_json_output():
    table = count_walks("kreweras", "three-quadrant", 2)
    lines = table.to_csv().splitlines()
    assert lines[0] == "n,i,j,count"
    assert lines[1] == "0,0,0,1"
    # endpoints by hand: 1 at n=0, 3 at n=1, (2,2) (0,1) (1,0) (-2,0) (0,-2) at n=2
    assert len(lines) == 1 + 1 + 3 + 5
    data = table.to_json()
    assert json.loads(json.dumps(data)) == data
    assert sum(int(r["count"]) for r in data["rows"] if r["n"] == 2) == table.total(2)


def test_weighted_starts_are_rational():
    table = count_walks("simple", "three-quadrant", 2, starts=[((0, 0), Fraction(2, 3))])
    assert table.count(0, 0, 0) == Fraction(2, 3)
    assert table.total(1) == Fraction(8, 3)


def test_start_outside_region():
    with pytest.raises(EnumerationError):
        count_walks("simple", "quadrant", 2, starts=[((-1, 0), 1)])


def test_region_membership():
    assert in_region("three-quadrant", -3, 0)
    assert not in_region("three-quadrant", -1, -1)
    assert not in_region("quadrant", 0, -1)
    assert in_region("full-plane", -5, -5)


def test_large_counts_are_exact():
    # 3^60 exceeds 64 bits; the full-plane total must be exact
    table = count_walks("kreweras", "full-plane", 60, keep_layers=False)
    assert table.total(60) == 3 ** 60


def test_target_only_tables():
    table = count_walks("kreweras", "three-quadrant", 12, keep_layers=False, targets=[(0, 0)])
    full = count_walks("kreweras", "three-quadrant", 12)
    assert table.sequence(0, 0) == full.sequence(0, 0)
    with pytest.raises(EnumerationError):
        table.count(3, 1, 1)

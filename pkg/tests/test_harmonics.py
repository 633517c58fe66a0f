import mpmath
import numpy as np
import pytest
from mpmath import mp, mpf

from conewalks import harmonics as hm
from conewalks.models import get_model

MODELS = ("kreweras", "reverse-kreweras", "double-kreweras", "simple", "diagonal")


@pytest.fixture(scope="module")
def grids():
    return {m: hm.harmonic_grid(m, 12, 50) for m in MODELS}


def test_kreweras_boundary_values(grids):
    g = grids["kreweras"]
    with mp.workdps(50):
        assert abs(g[(-1, 0)] - 9) < mpf(10) ** -40
        assert abs(g[(0, 0)] - 27 * mp.sqrt(3) / 4) < mpf(10) ** -40


def test_reverse_kreweras_quadrant_origin():
    q = hm.quadrant_grid("reverse-kreweras", 8, 50)
    assert abs(q[(0, 0)] - 9) < mpf(10) ** -40
    assert all(q.checks.values())


@pytest.mark.parametrize("name", MODELS)
def test_grid_is_harmonic_positive_and_symmetric(grids, name):
    g = grids[name]
    assert all(g.checks.values()), g.checks
    assert g.max_residual < mpf(10) ** -25
    # independent re-check of the averaging relation on interior points
    mu = g.mu
    steps = get_model(name).steps.steps
    worst = 0
    with mp.workdps(50):
        for (i, j), v in g.values.items():
            if max(abs(i), abs(j)) > g.imax - 1:
                continue
            acc = sum(g[(i - a, j - b)] for a, b in steps)
            worst = max(worst, abs(mu * v - acc) / (mu * v))
    assert worst < mpf(10) ** -25
    for (i, j), v in g.values.items():
        assert v > 0
        assert i >= 0 or j >= 0
        assert abs(v - g[(j, i)]) < mpf(10) ** -25 * max(1, abs(v))


@pytest.mark.parametrize("name", MODELS)
def test_quadrant_grids(name):
    q = hm.quadrant_grid(name, 10, 50)
    assert all(q.checks.values())


def test_zero_outside_the_cone(grids):
    g = grids["double-kreweras"]
    assert g[(-1, -1)] == 0
    assert g[(-3, -5)] == 0


def test_kappa_is_three():
    kappa, gap = hm.kappa_relation("kreweras", 15, 50)
    assert abs(kappa - 3) < mpf(10) ** -30
    assert gap < mpf(10) ** -20


def test_gamma():
    with mp.workdps(50):
        assert abs(hm.gamma(mpf(1) / 2) - mp.sqrt(mp.pi)) < mpf(10) ** -45
        # reflection formula against mpmath's own continuation
        assert abs(hm.gamma(mpf(-3) / 4) - mpmath.gamma(mpf(-3) / 4)) < mpf(10) ** -40
    with pytest.raises(hm.HarmonicError):
        hm.gamma(-2)


def test_low_precision_is_refused():
    with pytest.raises(hm.HarmonicError):
        hm.harmonic_boundary("kreweras", 10, 20)
    with pytest.raises(hm.HarmonicError):
        hm.harmonic_boundary("m6", 10, 50)


def test_estimate_growth_recovers_synthetic_constant():
    # c(n) = K mu^n n^(-1-alpha) (1 + n^(-1/4)) exactly, on multiples of 3
    K, mu, alpha = 2.5, 3, 0.75
    seq = [0] * 151
    for n in range(0, 151, 3):
        if n:
            seq[n] = int(mpf(K) * mpf(mu) ** n * mpf(n) ** (-1 - alpha) * (1 + mpf(n) ** -0.25))
    est = hm.estimate_growth(seq, (0, 0), mu, alpha, period=3)
    assert abs(est - K) / K < 1e-6


def test_estimate_growth_needs_points():
    with pytest.raises(hm.HarmonicError):
        hm.estimate_growth([1, 3, 9, 27], None, 3, 0.75)
    with pytest.raises(hm.HarmonicError):
        hm.estimate_growth([0] * 100, None, 3, 0.75)


def test_kreweras_excursions_asymptotics():
    r = hm.asymptotics("kreweras", (0, 0), 150)
    with mp.workdps(30):
        want = 27 * mp.sqrt(3) / (4 * abs(mpmath.gamma(mpf(-3) / 4)))
    assert abs(r["predicted_constant"] - float(want)) < 1e-12
    assert r["rel_err"] < 0.10


def test_kreweras_total_asymptotics():
    r = hm.asymptotics("kreweras", None, 150)
    with mp.workdps(30):
        want = mpf(3) ** 0.75 * mp.sqrt(2 - mp.sqrt(2)) / mpmath.gamma(mpf(5) / 8)
    assert abs(r["predicted_constant"] - float(want)) < 1e-12
    assert r["rel_err"] < 0.15


def test_double_kreweras_total_asymptotics():
    r = hm.asymptotics("double-kreweras", None, 150)
    with mp.workdps(30):
        kappa = mpf(2) ** 0.25 * mpf(3) ** (mpf(9) / 8) * (mp.sqrt(2) - 1)
        want = kappa / mpmath.gamma(mpf(5) / 8)
    assert abs(r["predicted_constant"] - float(want)) < 1e-12
    assert r["rel_err"] < 0.15


def test_da_constants():
    mu, c, alpha = hm.da_mu_alpha(50)
    real = [r.real for r in np.roots([1, 1, -18, -43]) if abs(r.imag) < 1e-12]
    assert abs(float(mu) - max(real)) < 1e-12
    assert abs(float(mu) - 4.729) < 1e-3
    with mp.workdps(50):
        assert abs(64 * c ** 6 - 64 * c ** 4 + 28 * c ** 2 - 5) < mpf(10) ** -40
        assert abs(alpha - mp.pi / mp.acos(-c)) < mpf(10) ** -40
    assert abs(float(c) - 0.626) < 1e-3
    assert abs(float(alpha) - 1.39) < 1e-2


def test_da_sequences_converge():
    report = hm.da_predictions(150, 50)
    assert report["status"] == "prediction"
    assert report["sequences"]["relative_gap"] < 0.05
    assert abs(report["kappa_kreweras"]["kappa"] - 3) < 1e-20


def test_grid_json():
    g = hm.harmonic_grid("kreweras", 3, 40)
    out = g.to_json()
    assert out["model"] == "kreweras" and out["region"] == "three-quadrant"
    assert all(isinstance(v[2], str) for v in out["values"])

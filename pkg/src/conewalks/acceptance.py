"""The acceptance battery: one result per criterion, shared by the CLI and the tests."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from . import funceq, harmonics, invariants as inv, theorems
from .laurent import BiLaurent
from .models import CONE_MODELS
from .series import TSeries
from .solve import (series_A1_DK, series_M, series_N, series_P1, series_P2, series_V,
                    series_W, series_Z)

RATIONAL_PAIR_MODELS = ("kreweras", "reverse-kreweras", "double-kreweras", "simple", "diagonal")


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str = ""
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def line(self) -> str:
        return f"criterion {self.number:2d} {self.status}  {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "status": self.status.lower(),
                "detail": self.detail, "failures": self.failures, "seconds": round(self.seconds, 2)}


def _failed(reports) -> list:
    out = []
    for r in reports:
        if not r.ok:
            where = getattr(r, "first_failure", None) or getattr(r, "residual_locus", None)
            name = getattr(r, "check", None) or getattr(r, "id", "")
            out.append(f"{r.model if hasattr(r, 'model') else r.label}:{name}@{where} {r.detail}".strip())
    return out


def criterion_1() -> CriterionResult:
    reports = []
    for m in list(CONE_MODELS) + ["gessel", "gessel-reflected"]:
        reports += funceq.funceq_checks(m, 20)
    for m in ("scarecrow", "gessel-asymmetric"):
        reports += funceq.funceq_checks(m, 14)
    bad = _failed(reports)
    return CriterionResult(1, "functional equations", not bad,
                           f"{len(reports) - len(bad)}/{len(reports)} exact to t^20 "
                           "(t^14 for the scarecrow and asymmetric-split systems)",
                           bad)


def criterion_2() -> CriterionResult:
    reports = inv.square_lemma_checks()
    bad = _failed(reports)
    return CriterionResult(2, "discriminant square identity", not bad,
                           f"{len(reports) - len(bad)}/{len(reports)} catalog models", bad)


def invariant_pair_reports(order: int = 15, pole_bound=(2, 2)) -> list:
    reports = []
    for m in RATIONAL_PAIR_MODELS:
        p = inv.rational_pair(m)
        p.pole_bound = tuple(pole_bound)
        reports += p.check(order)
    for m in CONE_MODELS:
        p = inv.build_I1J1(m, order)
        p.pole_bound = tuple(pole_bound)
        reports += p.check(order)
    for m in inv.DECOUPLING_MODELS:
        reports += inv.build_three_quadrant_pair(m, order, pole_bound).pair.check(order)
    return reports


def criterion_3() -> CriterionResult:
    reports = invariant_pair_reports(15)
    bad = _failed(reports)
    detail = f"{len(reports) - len(bad)}/{len(reports)} checks with pole bound 2 to t^15"
    if bad and all(b.startswith("reverse-kreweras") for b in bad):
        # the unique quotient has poles of order 3 in x and y; see the README
        rk = inv.build_three_quadrant_pair("reverse-kreweras", 15, (3, 3)).pair.check(15)
        detail += "; reverse-kreweras three-quadrant pair needs bound (3,3)"
        detail += " and passes with it" if all(r.ok for r in rk) else " and still fails"
    return CriterionResult(3, "invariant pairs", not bad, detail, bad)


def criterion_4() -> CriterionResult:
    reports = []
    for m in inv.DECOUPLING_MODELS:
        reports += inv.decoupling_checks(m, 10)
    bad = _failed(reports)
    return CriterionResult(4, "decouplings", not bad,
                           f"{len(reports) - len(bad)}/{len(reports)} for {len(inv.DECOUPLING_MODELS)} models",
                           bad)


def _theorem_result(number, title, ids, orders=None) -> CriterionResult:
    checks = []
    for tid in ids:
        checks += theorems.check_theorem(tid, (orders or {}).get(tid))
    bad = [f"{c.id}:{c.label}@{c.residual_locus} {c.detail}".strip() for c in checks if not c.ok]
    return CriterionResult(number, title, not bad,
                           f"{len(checks) - len(bad)}/{len(checks)} identities, zero residual", bad)


def criterion_5() -> CriterionResult:
    ids = ("K-U", "K-D", "RK", "DK", "DA", "DA-C11", "SIMPLE", "DIAG", "Q-RK", "Q-K", "Q-DK")
    return _theorem_result(5, "theorem identities", ids, {"DA-C11": 14})


def criterion_6() -> CriterionResult:
    return _theorem_result(6, "excursion formulas", ("K-excursions", "RK-excursions", "DK-excursions"))


def criterion_7() -> CriterionResult:
    return _theorem_result(7, "C(1,1) identities", ("K-C11", "RK-C11", "DK-C11", "DA-C11"))


def criterion_8(imax: int = 20, precision: int = 50) -> CriterionResult:
    bad = []
    worst = 0
    for m in harmonics.HARMONIC_MODELS:
        try:
            g = harmonics.harmonic_grid(m, imax, precision)
        except harmonics.HarmonicError as exc:
            bad.append(f"{m}: {exc}")
            continue
        worst = max(worst, float(g.max_residual))
        if g.max_residual >= mpmath.mpf(10) ** -25:
            bad.append(f"{m}: residual {mpmath.nstr(g.max_residual, 3)}")
        bad += [f"{m}: {k}" for k, v in g.checks.items() if not v]
    kappa, gap = harmonics.kappa_relation("kreweras", 15, precision)
    if abs(kappa - 3) > mpmath.mpf(10) ** -20 or gap > mpmath.mpf(10) ** -20:
        bad.append(f"kreweras kappa={mpmath.nstr(kappa, 10)} gap={mpmath.nstr(gap, 3)}")
    return CriterionResult(8, "harmonic grids", not bad,
                           f"5 models, |i|,|j|<={imax}, max residual {worst:.1e}, kappa=3 gap {float(gap):.1e}",
                           bad)


# (model, target, tolerance); target None is the total count
ASYMPTOTIC_TARGETS = (
    ("kreweras", (0, 0), 0.10),
    ("kreweras", None, 0.15),
    ("reverse-kreweras", None, 0.15),
    ("double-kreweras", None, 0.15),
    ("simple", (0, 0), 0.15),
    ("diagonal", (0, 0), 0.15),
)


def criterion_9(nmax: int = 150) -> CriterionResult:
    bad, parts = [], []
    for model, target, tol in ASYMPTOTIC_TARGETS:
        r = harmonics.asymptotics(model, target, nmax)
        tag = f"{model}{'' if target is None else target}"
        parts.append(f"{tag} {100 * r['rel_err']:.1f}%")
        if r["rel_err"] >= tol:
            bad.append(f"{tag}: {r['estimate']:.6g} vs {r['predicted_constant']:.6g}")
    return CriterionResult(9, "asymptotic constants", not bad, ", ".join(parts), bad)


def criterion_10(nmax: int = 150) -> CriterionResult:
    rep = harmonics.da_predictions(nmax)
    bad = []
    # independent oracle for the roots: numpy's companion-matrix eigenvalues
    mu_np = max(r.real for r in np.roots([1, 1, -18, -43]) if abs(r.imag) < 1e-9)
    c_np = min((r.real for r in np.roots([64, 0, -64, 0, 28, 0, -5]) if abs(r.imag) < 1e-9 and r.real > 0),
               key=lambda v: abs(v - 0.626))
    with mpmath.mp.workdps(40):
        mu = mpmath.mpf(rep["mu"])
        if abs(float(mu) - mu_np) > 1e-10 or abs(mu ** 3 + mu ** 2 - 18 * mu - 43) > 1e-25:
            bad.append(f"mu {rep['mu']}")
    alpha_np = float(np.pi / np.arccos(-c_np))
    if abs(float(mpmath.mpf(rep["alpha"])) - alpha_np) > 1e-6:
        bad.append(f"alpha {rep['alpha']}")
    gap = rep["sequences"]["relative_gap"]
    if not gap < 0.05:
        bad.append(f"sequence gap {gap:.3%}")
    return CriterionResult(10, "DA predictions", not bad,
                           f"mu={rep['mu'][:12]} alpha={rep['alpha'][:10]} gap at n={nmax}: {100 * gap:.2f}%",
                           bad)


# property suites

def random_series(rng: random.Random, order: int = 8, span: int = 2, unit: bool = False) -> TSeries:
    data = {}
    for e in range(order):
        terms = {}
        for _ in range(rng.randint(0, 3)):
            terms[(rng.randint(-span, span), rng.randint(-span, span))] = Fraction(rng.randint(-9, 9),
                                                                                   rng.randint(1, 5))
        data[e] = BiLaurent(terms)
    if unit:
        data[0] = BiLaurent.const(Fraction(rng.choice([1, 4, 9, 1, 25]), rng.choice([1, 4, 9])))
    return TSeries.from_dict(data, order)


def ring_axiom_failures(rng: random.Random, trials: int = 30) -> list:
    bad = []
    for k in range(trials):
        a, b, c = (random_series(rng) for _ in range(3))
        if not ((a + b) - (b + a)).is_zero():
            bad.append(f"add-comm #{k}")
        if not ((a * b) - (b * a)).is_zero():
            bad.append(f"mul-comm #{k}")
        if not (((a * b) * c) - (a * (b * c))).is_zero():
            bad.append(f"mul-assoc #{k}")
        if not ((a * (b + c)) - (a * b + a * c)).is_zero():
            bad.append(f"distrib #{k}")
        if not ((a + TSeries.zero()) - a).is_zero() or not ((a * TSeries.const(1)) - a).is_zero():
            bad.append(f"identity #{k}")
    return bad


def round_trip_failures(rng: random.Random, trials: int = 30) -> list:
    bad = []
    for k in range(trials):
        u = random_series(rng, unit=True)
        if not ((u * u.invert()) - TSeries.const(1)).truncate(u.order).is_zero():
            bad.append(f"invert #{k}")
        r = u.sqrt()
        if not (r * r - u).is_zero():
            bad.append(f"sqrt #{k}")
        if not (u * u).sqrt().agrees(u):
            bad.append(f"sqrt-of-square #{k}")
    return bad


def closure_failures(rng: random.Random, pairs: int = 100, order: int = 8) -> list:
    bad = []
    models = ("kreweras", "reverse-kreweras", "double-kreweras", "simple", "m6")
    for k in range(pairs):
        model = models[k % len(models)]
        p = inv.random_pair(model, order, rng)
        q = inv.random_pair(model, order, rng)
        op = (p + q) if k % 2 else (p * q)
        if not op.ok(order):
            bad.append(f"{model} {'sum' if k % 2 else 'product'} #{k}")
    return bad


def named_identity_failures(order: int = 20) -> list:
    V, W, Z = series_V(order), series_W(order), series_Z(order)
    M, N = series_M(order), series_N(order)
    P1, P2, A1 = series_P1(order), series_P2(order), series_A1_DK(order)
    u = 1 - N
    r = N * N - N + 1
    quartic = (N * N * u ** 8 * A1 ** 4 + 4 * N * (N + 1) ** 3 * u ** 7 * A1 ** 3
               + 32 * N * r ** 3 * u ** 4 * A1 ** 2 - 64 * u ** 3 * (N + 1) ** 3 * r ** 3 * A1
               + 256 * r ** 6)
    checks = {
        "4W(1-W)=V^3": 4 * W * (1 - W) - V ** 3,
        "2Z=W(1+Z^2)": 2 * Z - W * (1 + Z * Z),
        "(1-2W)^2=1-V^3": (1 - 2 * W) ** 2 - (1 - V ** 3),
        "N=M(1-N)^2": N - M * (1 - N) ** 2,
        "P2^2(1+P1)^2=(1+4M)^3(1-P1)^2": P2 ** 2 * (1 + P1) ** 2 - (1 + 4 * M) ** 3 * (1 - P1) ** 2,
        "A1 quartic": quartic,
    }
    return [name for name, res in checks.items() if not res.truncate_t(order).is_zero()]


def criterion_11(seed: int = 2024) -> CriterionResult:
    rng = random.Random(seed)
    bad = ring_axiom_failures(rng) + round_trip_failures(rng) + closure_failures(rng)
    bad += named_identity_failures()
    return CriterionResult(11, "property suites", not bad,
                           "ring axioms, invert/sqrt round-trips, closure on 100 random pairs, "
                           "named-series identities", bad)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def run_criterion(number: int) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        res = CRITERIA[number]()
    except Exception as exc:  # a crash is a failure of that criterion, not of the battery
        res = CriterionResult(number, f"criterion {number}", False, f"error: {exc!r}", [repr(exc)])
    res.seconds = time.perf_counter() - t0
    return res


def run_all(numbers=None) -> list:
    return [run_criterion(i) for i in (numbers or sorted(CRITERIA))]

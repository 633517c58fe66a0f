"""Discrete harmonic functions and asymptotic constants, in extended precision.

The closed forms for the boundary series involve sqrt(2), sqrt(3) and nested
radicals, so this module works with mpmath floats. Power series are plain
lists of mpf coefficients, lowest degree first.

Two coordinate systems are used. Points of the three-quadrant cone are (i, j).
The half j >= i is stored in the coordinates (a, b) = ((j - i)/m, j) with
m = 2 for the diagonal model and m = 1 otherwise; there the harmonic relation
is the one of the companion step set, and the other half follows by the
symmetry H(i, j) = H(j, i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np
from mpmath import mp, mpf

from .enumeration import cached_count, count_walks
from .models import get_model, companion_steps

GUARD_DIGITS = 30

# growth rate, exponent alpha in c(n) ~ -H/Gamma(-alpha) mu^n n^(-1-alpha), period
GROWTH = {
    "kreweras": (3, mpf(3) / 4, 3),
    "reverse-kreweras": (3, mpf(3) / 4, 3),
    "double-kreweras": (6, mpf(3) / 4, 1),
    "simple": (4, mpf(2) / 3, 2),
    "diagonal": (4, mpf(2) / 3, 2),
}
HARMONIC_MODELS = tuple(GROWTH)


class HarmonicError(ArithmeticError):
    pass


# power series with mpf coefficients

def ps(coeffs, n: int) -> list:
    out = [mpf(c) for c in coeffs[:n]]
    return out + [mpf(0)] * (n - len(out))


def ps_add(a, b):
    return [u + v for u, v in zip(a, b)]


def ps_sub(a, b):
    return [u - v for u, v in zip(a, b)]


def ps_scale(a, c):
    return [c * u for u in a]


def ps_mul(a, b):
    n = len(a)
    out = [mpf(0)] * n
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j in range(n - i):
            out[i + j] += u * b[j]
    return out


def ps_inv(a):
    if a[0] == 0:
        raise HarmonicError("series not invertible")
    n = len(a)
    out = [mpf(0)] * n
    out[0] = 1 / a[0]
    for k in range(1, n):
        s = mpf(0)
        for j in range(1, k + 1):
            s += a[j] * out[k - j]
        out[k] = -s / a[0]
    return out


def ps_div(a, b):
    return ps_mul(a, ps_inv(b))


def ps_sqrt(a):
    if a[0] <= 0:
        raise HarmonicError("square root needs a positive constant term")
    n = len(a)
    out = [mpf(0)] * n
    out[0] = mp.sqrt(a[0])
    for k in range(1, n):
        s = a[k]
        for j in range(1, k):
            s -= out[j] * out[k - j]
        out[k] = s / (2 * out[0])
    return out


def ps_shift_down(a, k: int = 1):
    """Divide by x^k; the first k coefficients must vanish (up to rounding)."""
    return a[k:] + [mpf(0)] * k


def ps_shift_up(a, k: int = 1):
    return [mpf(0)] * k + a[:len(a) - k]


def ps_x(n):
    return ps([0, 1], n)


def ps_const(c, n):
    return ps([c], n)


def ps_poly_eval(coeff_series: list, Y: list) -> list:
    """sum_k coeff_series[k] * Y^k (Horner)."""
    n = len(Y)
    acc = ps_const(0, n)
    for c in reversed(coeff_series):
        acc = ps_add(ps_mul(acc, Y), c)
    return acc


def ps_newton(coeff_series: list, seed, n: int, iterations: int | None = None) -> list:
    """Power series root Y(x) of sum_k c_k(x) Y^k = 0 with Y(0) = seed (simple root)."""
    deriv = [ps_scale(c, k) for k, c in enumerate(coeff_series)][1:]
    Y = ps_const(seed, n)
    iterations = iterations or (int(math.log2(max(n, 2))) + 4)
    for _ in range(iterations):
        Y = ps_sub(Y, ps_div(ps_poly_eval(coeff_series, Y), ps_poly_eval(deriv, Y)))
    return Y


# closed forms for the boundary series

def _one_minus_x_pow(n, e, sign=-1):
    """(1 + sign*x)^e as a series, e a half-integer or integer."""
    base = ps([1, sign], n)
    k2 = int(2 * e)
    if k2 % 2 == 0:
        out = ps_const(1, n)
        for _ in range(abs(k2 // 2)):
            out = ps_mul(out, base)
        return out if e >= 0 else ps_inv(out)
    root = ps_sqrt(base)
    out = root
    for _ in range(abs(k2) // 2):
        out = ps_mul(out, base)
    return out if e >= 0 else ps_inv(out)


def series_L(n: int) -> list:
    """L(x) = sqrt(3) + O(x) with x = 9 (3 - L^2) / ((2L - 3)(L^2 - 12L + 9))."""
    X = ps_x(n)
    # 9(3 - L^2) - x (2L - 3)(L^2 - 12L + 9) = 0, expanded in L
    # (2L - 3)(L^2 - 12L + 9) = 2L^3 - 27L^2 + 54L - 27
    c0 = ps_add(ps_const(27, n), ps_scale(X, 27))
    c1 = ps_scale(X, -54)
    c2 = ps_add(ps_const(-9, n), ps_scale(X, 27))
    c3 = ps_scale(X, -2)
    return ps_newton([c0, c1, c2, c3], mp.sqrt(3), n)


def series_P(n: int) -> list:
    """P(y) = 1/3 + O(y) with y = (1 - 3P) / (P^2 (P - 3))."""
    Y = ps_x(n)
    # 1 - 3P - y (P^3 - 3P^2) = 0
    c0 = ps_const(1, n)
    c1 = ps_const(-3, n)
    c2 = ps_scale(Y, 3)
    c3 = ps_scale(Y, -1)
    return ps_newton([c0, c1, c2, c3], mpf(1) / 3, n)


def _kreweras_inner(n, sign):
    """((1+2x)/(1-x)) sqrt((4-x)/(1-x)) + 2 sign."""
    X = ps_x(n)
    frac = ps_div(ps([1, 2], n), ps([1, -1], n))
    root = ps_sqrt(ps_div(ps([4, -1], n), ps([1, -1], n)))
    return ps_add(ps_mul(frac, root), ps_const(2 * sign, n)), X


def boundary_kreweras(n):
    inner, X = _kreweras_inner(n + 1, 1)
    Hm = ps_scale(ps_mul(X, ps_sqrt(inner)), mpf(9) / 2)
    inner_d, _ = _kreweras_inner(n + 1, -1)
    q = ps_shift_down(inner_d)                       # inner / y
    g = ps_div(q, ps([4, -1], n + 1))                # / (4 - y)
    Hd = ps_scale(ps_div(ps_sqrt(g), ps([1, -1], n + 1)), 9)
    return Hm[:n], Hd[:n]


def boundary_reverse_kreweras(n):
    s3 = mp.sqrt(3)
    X = ps_x(n)
    w = ps_mul(X, _one_minus_x_pow(n, mpf(-3) / 2))
    Hm = ps_scale(ps_sub(ps_sqrt(ps_add(ps_const(1, n), ps_scale(w, 3 * s3 / 2))), ps_const(1, n)),
                  27 * s3 / 8)
    inner = ps_sqrt(ps_sub(ps_const(1, n), ps_scale(w, 3 * s3 / 2)))
    pre = ps_mul(ps_inv(ps([1, -1], n)), ps_inv(ps_sqrt(ps([1, -4], n))))
    Hd = ps_scale(ps_mul(pre, inner), 27 * s3 / 4)
    return Hm, Hd


def _dk_radical(n):
    """((2 - sqrt3 + x)/(1 - x)) sqrt((7 + 4 sqrt3 - x)/(1 - x))."""
    s3 = mp.sqrt(3)
    frac = ps_div(ps([2 - s3, 1], n), ps([1, -1], n))
    root = ps_sqrt(ps_div(ps([7 + 4 * s3, -1], n), ps([1, -1], n)))
    return ps_mul(frac, root)


def boundary_double_kreweras(n):
    s2 = mp.sqrt(2)
    c = mp.sqrt(s2 - 1)
    R = _dk_radical(n)
    X = ps_x(n)
    pre_m = ps_scale(ps_div(X, ps([1, 1], n)), mpf(3) ** (mpf(7) / 4) * c / s2)
    Hm = ps_mul(pre_m, ps_sub(ps_sqrt(ps_add(ps_const(s2, n), R)), ps_const(c, n)))
    pre_d = ps_scale(ps_inv(ps_mul(ps([1, -1], n), ps_sqrt(ps([1, -14, 1], n)))),
                     mpf(3) ** (mpf(7) / 4) * s2 * c)
    Hd = ps_mul(pre_d, ps_sqrt(ps_sub(ps_const(s2, n), R)))
    return Hm, Hd


def boundary_simple(n):
    s3 = mp.sqrt(3)
    L = series_L(n)
    P = series_P(n)
    X = ps_x(n)
    num = ps_mul(X, ps_sub(ps_scale(L, 2), ps_const(3, n)))
    den = ps_mul(ps_sub(L, ps_const(3, n)), ps_sub(L, ps_const(3, n)))
    Hm = ps_scale(ps_div(num, den), 128 * s3 / 9)
    P1 = ps_add(P, ps_const(1, n))
    P3 = ps_sub(P, ps_const(3, n))
    Pc = ps_mul(ps_mul(P, P), P)
    num_d = ps_mul(ps_mul(P1, ps_mul(P3, P3)), Pc)
    one_m = ps_sub(ps_const(1, n), P)
    den_d = ps_const(1, n)
    for _ in range(5):
        den_d = ps_mul(den_d, one_m)
    Hd = ps_scale(ps_div(num_d, den_d), 64 * s3 / 27)
    return Hm, Hd


def boundary_diagonal(n):
    """Coefficients of x^k in H-(x) = sum H(-i,0) x^(i/2), i.e. H(-2k, 0); and H(k, k)."""
    s3 = mp.sqrt(3)
    P = series_P(n)
    L = series_L(n + 2)
    num = ps_sub(ps_scale(P, 3), ps_const(1, n))
    Pm = ps_sub(P, ps_const(1, n))
    den = ps_mul(ps_add(P, ps_const(1, n)), ps_mul(Pm, Pm))
    Hm = ps_scale(ps_div(num, den), 32 * s3 / 9)
    m = n + 2
    u = ps_shift_down(ps_sub(ps_mul(L, L), ps_const(3, m)))        # (L^2 - 3)/y
    tail = ps_sub(ps_const(3, m), L)
    den_d = ps_add(ps_add(ps_mul(L, L), ps_scale(L, 6)), ps_const(-9, m))
    for _ in range(5):
        den_d = ps_mul(den_d, tail)
    Hd = ps_scale(ps_div(ps_mul(L, ps_mul(u, u)), den_d), 144 * s3)
    Hm[0] = mpf(0)
    return Hm, Hd[:n]


_BOUNDARY = {
    "kreweras": boundary_kreweras,
    "reverse-kreweras": boundary_reverse_kreweras,
    "double-kreweras": boundary_double_kreweras,
    "simple": boundary_simple,
    "diagonal": boundary_diagonal,
}


def harmonic_boundary(model, count: int = 40, precision: int = 50):
    """Taylor coefficients of H-(x) and H_d(y), ``count`` of each.

    H-(x) starts with a zero constant term; its coefficient of x^k is
    H(-k, 0) (H(-2k, 0) for the diagonal model).
    """
    name = get_model(model).name
    if name not in _BOUNDARY:
        raise HarmonicError(f"no closed form for {name!r}; known: {', '.join(_BOUNDARY)}")
    if precision < 30:
        raise HarmonicError("precision too low: at least 30 digits are required")
    with mp.workdps(precision + GUARD_DIGITS):
        Hm, Hd = _BOUNDARY[name](count)
    return Hm, Hd


# quadrant harmonic functions of the companion models

def quadrant_boundary(model, count: int = 40, precision: int = 50):
    """(h(i,0) for i >= 0, h(0,j) for j >= 0) of the companion quadrant model."""
    name = get_model(model).name
    with mp.workdps(precision + GUARD_DIGITS):
        n = count
        if name == "kreweras":
            inner, _ = _kreweras_inner(n, 1)
            row = ps_scale(inner, mpf(9) / 4)
            col = row
        elif name == "reverse-kreweras":
            row = ps_scale(_one_minus_x_pow(n, mpf(-3) / 2), 9)
            col = row
        elif name == "double-kreweras":
            R = _dk_radical(n)
            row = ps_scale(ps_div(ps_add(R, ps_const(1, n)), ps([1, 1], n)), mpf(3) / 2)
            col = row
        elif name in ("simple", "diagonal"):
            s3 = mp.sqrt(3)
            L, P = series_L(n), series_P(n)
            l2 = ps_sub(ps_scale(L, 2), ps_const(3, n))
            l3 = ps_sub(L, ps_const(3, n))
            l34 = ps_mul(ps_mul(l3, l3), ps_mul(l3, l3))
            row = ps_scale(ps_div(ps_mul(l2, l2), l34), 48 * s3)
            Pm = ps_sub(P, ps_const(1, n))
            num = ps_mul(ps_mul(ps_mul(P, P), P), ps_sub(ps_const(3, n), P))
            den = ps_mul(ps_add(P, ps_const(1, n)), ps_mul(ps_mul(Pm, Pm), ps_mul(Pm, Pm)))
            col = ps_scale(ps_div(num, den), 32 / s3)
            if name == "diagonal":
                row, col = col, row
        else:
            raise HarmonicError(f"no quadrant closed form for {name!r}")
    return row, col


# grids

@dataclass
class HarmonicGrid:
    model: str
    region: str
    precision: int
    imax: int
    values: dict
    mu: int
    alpha: object
    max_residual: object = None
    checks: dict = field(default_factory=dict)

    def __getitem__(self, p):
        return self.values.get(tuple(p), mpf(0))

    def to_json(self) -> dict:
        digits = min(self.precision, 40)
        return {
            "model": self.model,
            "region": self.region,
            "precision": self.precision,
            "imax": self.imax,
            "mu": self.mu,
            "alpha": mpmath.nstr(self.alpha, 15),
            "max_residual": mpmath.nstr(self.max_residual, 5),
            "checks": self.checks,
            "values": [[i, j, mpmath.nstr(v, digits)] for (i, j), v in sorted(self.values.items())],
        }


def _upper_steps(model):
    m = get_model(model)
    kind = "half" if m.split == "half" else "standard"
    comp = companion_steps(m.steps, kind)
    return m, _reversed(comp.steps), (2 if kind == "half" else 1)


def _reversed(steps):
    # H(p) is an average of H(p - s): endpoint counts satisfy c(n+1; p) = sum c(n; p - s)
    return sorted((-a, -b) for a, b in steps)


def _fill_rows(steps, mu, row0, col0, rows, width, value_at):
    """Fill h(a, b) for 0 <= b < rows by solving the relation at the row below.

    ``row0[a]`` gives h(a, 0), ``col0[b]`` gives h(0, b); ``value_at(h, a, b)``
    reads a value, mapping points outside the stored half as needed. The
    relation at q is mu h(q) = sum over ``steps`` s of h(q + s); callers pass
    the reversed step set.
    """
    up = [s for s in steps if s[1] == 1]
    dmax = max(s[0] for s in up)
    h = {}
    for a in range(width):
        h[(a, 0)] = row0[a]
    for b in range(rows - 1):
        h[(0, b + 1)] = col0[b + 1]
        for a in range(1, width - b - 1):
            q = (a - dmax, b)
            target = (a, b + 1)
            coef = 0
            acc = mu * value_at(h, *q)
            for s in steps:
                p = (q[0] + s[0], q[1] + s[1])
                key = value_at(h, *p, resolve=True)
                if key == target:
                    coef += 1
                else:
                    acc -= value_at(h, *p)
            if coef == 0:
                raise HarmonicError("recursion does not determine the next row")
            h[target] = acc / coef
    return h


def _three_quadrant_reader(m):
    def value_at(h, a, b, resolve=False):
        if a < 0:
            a, b = -a, b + m * (-a)
        if b < 0:
            return None if resolve else mpf(0)
        if resolve:
            return (a, b)
        if (a, b) not in h:
            raise KeyError((a, b))
        return h[(a, b)]
    return value_at


def _quadrant_reader(h, a, b, resolve=False):
    if a < 0 or b < 0:
        return None if resolve else mpf(0)
    if resolve:
        return (a, b)
    if (a, b) not in h:
        raise KeyError((a, b))
    return h[(a, b)]


def _relation_residuals(values, steps, mu, points):
    worst = mpf(0)
    where = None
    for p in points:
        v = values.get(p, mpf(0))
        s = sum((values.get((p[0] + a, p[1] + b), mpf(0)) for a, b in steps), mpf(0))
        r = abs(mu * v - s) / max(mpf(1), abs(mu * v))
        if r > worst:
            worst, where = r, p
    return worst, where


def harmonic_grid(model, imax: int = 20, precision: int = 50) -> HarmonicGrid:
    """H(i, j) on the cone points with |i|, |j| <= imax, with consistency checks."""
    m, csteps, mult = _upper_steps(model)
    if m.name not in GROWTH:
        raise HarmonicError(f"no harmonic data for {m.name!r}; known: {', '.join(GROWTH)}")
    mu, alpha, _ = GROWTH[m.name]
    rows = imax + 3
    width = (2 * (imax + 2)) // mult + rows + 3
    Hm, Hd = harmonic_boundary(m.name, max(width, rows) + 2, precision)
    with mp.workdps(precision + GUARD_DIGITS):
        row0 = [Hd[0]] + Hm[1:width]
        h = _fill_rows(csteps, mu, row0, Hd, rows, width, _three_quadrant_reader(mult))
        values = {}
        reach = imax + 1
        for i in range(-reach, reach + 1):
            for j in range(-reach, reach + 1):
                lo, hi = (i, j) if j >= i else (j, i)
                if hi < 0 or (hi - lo) % mult:
                    continue
                values[(i, j)] = h[((hi - lo) // mult, hi)]
        box = [(i, j) for i in range(-imax, imax + 1) for j in range(-imax, imax + 1)
               if (i >= 0 or j >= 0) and (i - j) % mult == 0]
        worst, where = _relation_residuals(values, _reversed(m.steps.steps), mu, box)
        tol = mpf(10) ** (-(precision // 2))
        inside = {p: v for p, v in values.items() if abs(p[0]) <= imax and abs(p[1]) <= imax}
        checks = {
            "residual_below_tolerance": bool(worst < tol),
            "positive": all(v > 0 for v in inside.values()),
            "symmetric": all(abs(v - values[(p[1], p[0])]) <= tol * max(1, abs(v))
                             for p, v in inside.items()),
            "zero_outside": all(p not in values for p in
                                [(i, j) for i in range(-imax, 0) for j in range(-imax, 0)]),
        }
        grid = HarmonicGrid(m.name, "three-quadrant", precision, imax, inside, mu, alpha,
                            worst, checks)
    if worst >= tol:
        raise HarmonicError(f"grid inconsistent: harmonic residual {mpmath.nstr(worst, 5)} at {where}")
    return grid


def quadrant_grid(model, imax: int = 20, precision: int = 50) -> HarmonicGrid:
    """h(i, j) of the companion quadrant model on 0 <= i, j <= imax."""
    m, csteps, _ = _upper_steps(model)
    mu = GROWTH[m.name][0]
    row, col = quadrant_boundary(m.name, 2 * imax + 8, precision)
    rows = imax + 2
    width = imax + rows + 4
    with mp.workdps(precision + GUARD_DIGITS):
        h = _fill_rows(csteps, mu, row, col, rows, width, _quadrant_reader)
        box = [(a, b) for a in range(imax + 1) for b in range(imax + 1)]
        worst, where = _relation_residuals(h, csteps, mu, box)
        tol = mpf(10) ** (-(precision // 2))
        inside = {p: h[p] for p in box}
        checks = {"residual_below_tolerance": bool(worst < tol),
                  "positive": all(v > 0 for v in inside.values())}
    if worst >= tol:
        raise HarmonicError(f"grid inconsistent: harmonic residual {mpmath.nstr(worst, 5)} at {where}")
    return HarmonicGrid(m.name, "quadrant", precision, imax, inside, mu, mpf(3) / 2, worst, checks)


def kappa_relation(model="kreweras", count: int = 15, precision: int = 50):
    """Compare H-(x) with kappa x sqrt(h(x, 0)); returns (kappa, max coefficient gap)."""
    Hm, _ = harmonic_boundary(model, count + 1, precision)
    row, _ = quadrant_boundary(model, count, precision)
    with mp.workdps(precision + GUARD_DIGITS):
        root = ps_sqrt(row)
        kappa = Hm[1] / root[0]
        gap = max(abs(Hm[k + 1] - kappa * root[k]) for k in range(count))
    return kappa, gap


# asymptotics

def gamma(z):
    """Gamma function, using the reflection formula for negative arguments."""
    z = mpf(z)
    if z > 0:
        return mpmath.gamma(z)
    if z == int(z):
        raise HarmonicError("Gamma has a pole at nonpositive integers")
    return mp.pi / (mp.sin(mp.pi * z) * mpmath.gamma(1 - z))


def estimate_growth(counts, target, mu, alpha=None, period: int = 1, beta=0.25, power=None,
                    fraction: float = 1 / 3):
    """Extrapolate lim c(n) mu^-n n^-power with power = -1 - alpha by default.

    ``counts`` is a CountTable or a plain list indexed by n; ``target`` is an
    endpoint (i, j) or None for the total. Only n in the residue class (mod
    ``period``) carrying nonzero counts is used; the top ``fraction`` of those
    n are fitted by a + b n^-beta and a is returned.
    """
    if isinstance(counts, (list, tuple)):
        seq = list(counts)
    elif target is None:
        seq = counts.total_sequence()
    else:
        seq = counts.sequence(*target)
    if power is None:
        power = -1 - mpf(alpha)
    nmax = len(seq) - 1
    last = max((n for n in range(nmax + 1) if seq[n]), default=None)
    if last is None:
        raise HarmonicError("too few points: all counts vanish")
    ns = [n for n in range(1, nmax + 1) if (n - last) % period == 0 and seq[n]]
    ns = [n for n in ns if n >= nmax * (1 - fraction)]
    if len(ns) < 3:
        raise HarmonicError("too few points for the extrapolation")
    with mp.workdps(40):
        s = [float(mpf(int(seq[n])) / mpf(mu) ** n / mpf(n) ** power) for n in ns]
    u = np.array([float(n) ** (-float(beta)) for n in ns])
    slope, intercept = np.polyfit(u, np.array(s), 1)
    return float(intercept)


def _cone_counts(model, nmax, targets=((0, 0),)):
    return cached_count(model, "three-quadrant", nmax, keep_layers=False, targets=tuple(targets))


def asymptotic_constant(model, target=(0, 0), precision: int = 30):
    """Predicted constant K with c(n) ~ K mu^n n^power, and the power.

    target None means the total number of walks.
    """
    name = get_model(model).name
    with mp.workdps(precision):
        if target is None:
            g58 = mpmath.gamma(mpf(5) / 8)
            if name == "kreweras":
                k = mpf(3) ** (mpf(3) / 4) * mp.sqrt(2 - mp.sqrt(2)) / g58
            elif name == "reverse-kreweras":
                k = 9 / (4 * g58) * (mpf(9) / 2 - 3 * mp.sqrt(2)) ** (mpf(1) / 4)
            elif name == "double-kreweras":
                kappa = mpf(2) ** (mpf(1) / 4) * mpf(3) ** (mpf(9) / 8) * (mp.sqrt(2) - 1)
                k = kappa / g58
            else:
                raise HarmonicError(f"no total-count constant for {name!r}")
            return k, -mpf(3) / 8
        mu, alpha, _ = GROWTH[name]
        grid = harmonic_grid(name, max(2, max(abs(target[0]), abs(target[1])) + 1), precision)
        H = grid[target]
        return -H / gamma(-alpha), -1 - alpha


def asymptotics(model, target=(0, 0), nmax: int = 150, beta=0.25) -> dict:
    """Estimate from DP counts against the predicted constant."""
    name = get_model(model).name
    mu, alpha, period = GROWTH[name]
    expected, power = asymptotic_constant(name, target)
    if target is None:
        table = cached_count(name, "three-quadrant", nmax, keep_layers=False)
        est = estimate_growth(table, None, mu, period=1, beta=beta, power=power)
    else:
        table = _cone_counts(name, nmax, (tuple(target),))
        est = estimate_growth(table, tuple(target), mu, alpha, period, beta=beta)
    rel = abs(est - float(expected)) / abs(float(expected))
    return {"model": name, "target": "total" if target is None else list(target), "nmax": nmax,
            "estimate": est, "predicted_constant": float(expected), "rel_err": rel}


# the D-algebraic model: numeric predictions

def da_mu_alpha(precision: int = 50):
    with mp.workdps(precision + 10):
        mu = max((r for r in mpmath.polyroots([1, 1, -18, -43], maxsteps=200, extraprec=50)
                  if abs(mpmath.im(r)) < mpf(10) ** (-precision)), key=lambda r: mpmath.re(r))
        mu = mpmath.re(mu)
        cs = [r for r in mpmath.polyroots([64, 0, -64, 0, 28, 0, -5], maxsteps=200, extraprec=50)
              if abs(mpmath.im(r)) < mpf(10) ** (-precision) and mpmath.re(r) > 0]
        c = min((mpmath.re(r) for r in cs), key=lambda r: abs(r - mpf("0.626")))
        alpha = mp.pi / mp.acos(-c)
    return mu, c, alpha


def da_predictions(nmax: int = 150, precision: int = 50) -> dict:
    """Compare the cone ratios for model #6 with the quadrant ratios of its companion."""
    mu, c, alpha = da_mu_alpha(precision)
    kappa, kgap = kappa_relation("kreweras", 15, precision)
    cone = count_walks("m6", "three-quadrant", nmax, keep_layers=False,
                       targets=[(0, 0), (-1, 0), (-2, 0), (1, 1)])
    comp = get_model("m6").companion
    quad = count_walks(comp, "quadrant", nmax, keep_layers=False,
                       targets=[(0, 0), (0, 1), (1, 0), (0, 2)])
    n = nmax
    with mp.workdps(precision):
        def cc(i, j):
            return mpf(int(cone.count(n, i, j)))

        def qq(i, j):
            return mpf(int(quad.count(n, i, j)))
        left = cc(0, 0) / cc(-1, 0)
        right = mp.sqrt(1 + qq(0, 1) / qq(0, 0))
        gap = abs(left - right) / right
        l2 = cc(-1, 0) / cc(-2, 0)
        r2 = 2 * qq(0, 0) / qq(1, 0)
        l3 = cc(1, 1) / cc(0, 0)
        r3 = mu ** 2 / 8 - 1 + (qq(0, 1) + qq(0, 2)) / (2 * (qq(0, 0) + qq(0, 1)))
    return {
        "mu": mpmath.nstr(mu, 30), "c": mpmath.nstr(c, 30), "alpha": mpmath.nstr(alpha, 30),
        "nmax": nmax,
        "sequences": {"c00/c-10": float(left), "sqrt(1+q01/q00)": float(right),
                      "relative_gap": float(gap)},
        "ratio_H-10/H-20": {"cone": float(l2), "quadrant": float(r2),
                            "relative_gap": float(abs(l2 - r2) / r2)},
        "ratio_H11/H00": {"cone": float(l3), "quadrant": float(r3),
                          "relative_gap": float(abs(l3 - r3) / r3)},
        "kappa_kreweras": {"kappa": float(kappa), "max_gap": mpmath.nstr(kgap, 5)},
        "status": "prediction",
    }

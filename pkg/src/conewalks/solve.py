"""Power series roots of polynomial equations: Newton iteration, Newton-Puiseux, kernel roots."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .laurent import BiLaurent
from .models import StepSet, delta, get_model, splits
from .series import NotInvertible, TSeries, TruncationError, T, laurent


class NoConvergence(ArithmeticError):
    pass


def _horner(coeffs, Y: TSeries) -> TSeries:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * Y + c
    return acc


def _derivative(coeffs):
    return [c * k for k, c in enumerate(coeffs)][1:] or [TSeries.zero()]


def poly_eval(coeffs, Y) -> TSeries:
    """P(Y) for P given by its coefficient list (lowest degree first)."""
    return _horner([TSeries.coerce(c) for c in coeffs], TSeries.coerce(Y))


def newton_series(coeffs, seed, order, ram: int = 1, max_iter: int = 60) -> TSeries:
    """Root of sum_k coeffs[k] Y^k = 0 near ``seed``, known to t-order ``order``.

    The seed must approximate a simple root: the first correction has to raise
    the valuation of the residual, otherwise NoConvergence is raised.
    """
    coeffs = [TSeries.coerce(c) for c in coeffs]
    dcoeffs = _derivative(coeffs)
    Y = TSeries.coerce(seed)
    if Y.ram < ram:
        Y = Y.lift(ram // Y.ram) if ram % Y.ram == 0 else Y.lift(ram)
    work = Y.ram
    target = math.ceil(Fraction(order) * work)
    Y = Y.truncate(target + 2)
    last_val = None
    last_dval = None
    for _ in range(max_iter):
        P = _horner(coeffs, Y)
        if P.is_zero() and (P.order is None or P.order >= target):
            return Y.truncate(target)
        if P.is_zero():
            raise NoConvergence("residual known only to low order; add precision to the coefficients")
        if last_val is not None and P.val <= last_val:
            raise NoConvergence("Newton iteration stalled")
        dP = _horner(dcoeffs, Y)
        if dP.is_zero():
            raise NoConvergence("derivative vanishes at the iterate")
        if last_dval is not None and dP.val != last_dval:
            # the derivative keeps changing valuation: the root is not simple
            raise NoConvergence("seed does not approximate a simple root")
        try:
            step = P / dP
        except (NotInvertible, TruncationError) as exc:
            raise NoConvergence(f"derivative not invertible at the iterate: {exc}") from None
        last_val, last_dval = P.val, dP.val
        Y = (Y - step).truncate(target + 2)
    raise NoConvergence("no convergence within the iteration limit")


def fixed_point(fn, seed, order, max_iter: int = 200) -> TSeries:
    """Iterate Y <- fn(Y) until Y is stable to t-order ``order``."""
    Y = TSeries.coerce(seed)
    target = math.ceil(Fraction(order) * max(1, Y.ram))
    Y = Y.truncate(target)
    for _ in range(max_iter):
        nxt = fn(Y).truncate(target)
        if nxt.order is not None and nxt.order < target:
            raise NoConvergence("fixed point lost precision")
        if (nxt - Y).is_zero():
            return nxt
        Y = nxt
    raise NoConvergence("fixed point iteration did not stabilize")


# exact rational roots of small univariate polynomials

def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


def rational_roots(coeffs) -> list:
    """Rational roots with multiplicity of sum_k coeffs[k] c^k (coefficients rational)."""
    cs = [mpq(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        return []
    roots = []
    mult0 = 0
    while cs[0] == 0:
        cs.pop(0)
        mult0 += 1
    if mult0:
        roots.append((mpq(0), mult0))
    den = math.lcm(*[int(c.denominator) for c in cs])
    ints = [int(c * den) for c in cs]
    cands = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(mpq(p, q))
            cands.add(mpq(-p, q))
    for c in sorted(cands):
        m = 0
        poly = cs
        while len(poly) > 1:
            quot, rem = _synthetic_div(poly, c)
            if rem != 0:
                break
            m += 1
            poly = quot
        if m:
            roots.append((c, m))
    return roots


def _synthetic_div(cs, c):
    # divide by (Y - c); coefficients lowest degree first
    n = len(cs) - 1
    out = [mpq(0)] * n
    acc = mpq(0)
    for k in range(n, 0, -1):
        acc = acc * c + cs[k]
        out[k - 1] = acc
    rem = acc * c + cs[0]
    return out, rem


# Newton-Puiseux

def _lead_rational(s: TSeries) -> mpq:
    lead = s.leading()
    if not lead.is_constant():
        raise ValueError("Newton-Puiseux needs scalar coefficients")
    return lead.constant()


def _lower_hull(points):
    pts = sorted(points)
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def puiseux_roots(coeffs, order, min_val=0, strict: bool = False) -> list:
    """Roots Y of sum_k coeffs[k] Y^k in Puiseux series of t with valuation >= min_val.

    Coefficients must be scalar series.  The characteristic polynomials met on
    the way must have rational roots.  Roots are returned to t-order ``order``.
    """
    coeffs = [TSeries.coerce(c) for c in coeffs]
    out = []
    _puiseux(coeffs, TSeries.zero(), Fraction(0), Fraction(min_val), strict, Fraction(order), out)
    return out


def _puiseux(coeffs, base, g, min_val, strict, order, out):
    # roots of the original polynomial are base + t^g * Z with Z a root of coeffs
    while coeffs and coeffs[-1].is_zero() and coeffs[-1].order is None:
        coeffs = coeffs[:-1]
    if coeffs and coeffs[0].is_zero() and coeffs[0].order is None:
        out.append(base)
        coeffs = coeffs[1:]
    points = [(k, c.t_val()) for k, c in enumerate(coeffs) if not c.is_zero()]
    hull = _lower_hull(points)
    for (k1, v1), (k2, v2) in zip(hull, hull[1:]):
        gamma = Fraction(v1 - v2, k2 - k1)
        if gamma < min_val or (strict and gamma == min_val):
            continue
        char = {}
        for k, v in points:
            if v + k * gamma == v1 + k1 * gamma:
                char[k - k1] = _lead_rational(coeffs[k])
        poly = [char.get(d, 0) for d in range(k2 - k1 + 1)]
        for c, mult in rational_roots(poly):
            if c == 0:
                continue
            tg = T(gamma)
            if mult == 1:
                need = order - g - gamma
                seed = tg * c
                root = newton_series(coeffs, seed, order - g, ram=tg.ram)
                out.append((base + T(g) * root).truncate_t(order))
            else:
                # Z = t^gamma (c + Z1) with val(Z1) > 0
                new = []
                for j in range(len(coeffs)):
                    acc = TSeries.zero()
                    for k in range(j, len(coeffs)):
                        if coeffs[k].is_zero():
                            continue
                        acc = acc + coeffs[k] * (tg ** k) * (math.comb(k, j) * c ** (k - j))
                    new.append(acc)
                _puiseux(new, base + T(g) * tg * c, g + gamma, Fraction(0), True, order, out)
    return out


def laurent_poly_in(F: TSeries, var: str = "y"):
    """Coefficient list (lowest first) of F as a polynomial in var, after clearing negative powers.

    Returns (coeffs, shift) with F = var^(-shift) * sum coeffs[k] var^k.
    """
    G = F if var == "x" else F.swap()
    lo, hi = G.x_range()
    shift = -lo if lo < 0 else 0
    return [G.x_part(k - shift).map_coeffs(lambda c: BiLaurent.const(c.constant()))
            for k in range(hi + shift + 1)], shift


def delta_roots(steps, order: int) -> list:
    """Power series roots (possibly ramified, valuation >= 0) of the discriminant in y."""
    if not isinstance(steps, StepSet):
        steps = get_model(steps).companion
    coeffs, _ = laurent_poly_in(delta(steps), "y")
    roots = puiseux_roots(coeffs, order, min_val=0)
    return sorted(roots, key=lambda r: (r.t_val(), [str(c) for c in r.coeffs[:8]]))


def kernel_root(steps: StepSet, order: int) -> TSeries:
    """The root X(y) = t V-(y) + O(t^2) of 1 - t*S(x, y) = 0 in x, with coefficients in y."""
    sp = splits(steps)
    t = T()
    cs = [t * laurent(sp.V_minus), t * laurent(sp.V_zero) - 1, t * laurent(sp.V_plus)]
    return newton_series(cs, 0, order)


# algebraic series of the catalog

@lru_cache(maxsize=None)
def series_V(order: int) -> TSeries:
    """V = t (2 + V^3)."""
    t = T()
    return newton_series([2 * t, -1, 0, t], 0, order)


@lru_cache(maxsize=None)
def series_W(order: int) -> TSeries:
    """4 W (1 - W) = V^3 with W = O(t)."""
    V = series_V(order)
    return newton_series([-(V ** 3), 4, -4], 0, order)


@lru_cache(maxsize=None)
def series_Z(order: int) -> TSeries:
    """2 Z = W (1 + Z^2) with Z = O(t)."""
    Wser = series_W(order)
    return newton_series([Wser, -2, Wser], 0, order)


@lru_cache(maxsize=None)
def series_M(order: int) -> TSeries:
    """M = t (1 + 2M + 4M^2)."""
    t = T()
    return newton_series([t, 2 * t - 1, 4 * t], 0, order)


@lru_cache(maxsize=None)
def series_N(order: int) -> TSeries:
    """N = M (1 - N)^2 with N = O(t)."""
    M = series_M(order)
    return newton_series([M, -(2 * M + 1), M], 0, order)


@lru_cache(maxsize=None)
def series_P1(order: int) -> TSeries:
    """P1 (1+4M)^3 (1-P1)^2 = M (1+M)^3 (1+P1)^4 with P1 = O(t)."""
    M = series_M(order)
    a = (1 + 4 * M) ** 3
    b = M * (1 + M) ** 3
    # a (P - 2P^2 + P^3) - b (1 + 4P + 6P^2 + 4P^3 + P^4)
    cs = [-b, a - 4 * b, -2 * a - 6 * b, a - 4 * b, -b]
    return newton_series(cs, 0, order)


@lru_cache(maxsize=None)
def series_P2(order: int) -> TSeries:
    """P2^4 - (1+4M)^3 P2^2 + 4M(1+M)^3(1+4M)^3 = 0 with P2 = 1 + O(t)."""
    M = series_M(order)
    c = (1 + 4 * M) ** 3
    return newton_series([4 * M * (1 + M) ** 3 * c, 0, -c, 0, 1], 1, order)


@lru_cache(maxsize=None)
def series_A1_DK(order: int) -> TSeries:
    """Root A1 = 4 + O(t) of the quartic with coefficients in N."""
    Nn = series_N(order)
    u = 1 - Nn
    r = Nn * Nn - Nn + 1
    cs = [
        256 * r ** 6,
        -64 * u ** 3 * (Nn + 1) ** 3 * r ** 3,
        32 * Nn * r ** 3 * u ** 4,
        4 * Nn * (Nn + 1) ** 3 * u ** 7,
        Nn * Nn * u ** 8,
    ]
    return newton_series(cs, 4, order)


NAMED_SERIES = {
    "V": series_V,
    "W": series_W,
    "Z": series_Z,
    "M": series_M,
    "N": series_N,
    "P1": series_P1,
    "P2": series_P2,
    "A1-DK": series_A1_DK,
}


def named_series(name: str, order: int) -> TSeries:
    if name not in NAMED_SERIES:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(NAMED_SERIES)}")
    return NAMED_SERIES[name](order)

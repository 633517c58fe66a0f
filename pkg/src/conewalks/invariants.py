"""Kernel divisibility, invariant pairs and decouplings.

Rational functions with denominators such as (1+x) cannot be stored as
Laurent polynomials, so they are kept as ``Frac`` objects: a series numerator
over a t-free polynomial denominator that does not vanish at 0.  A coefficient
p/(d(x) d'(y)) has the same pole orders at 0 as p, which lets every
divisibility and pole-order test run on numerators only.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import at_x0, at_y0, coefficient_series
from .funceq import CheckReport, _companion_quadrant, model_data, report_zero
from .laurent import BiLaurent
from .models import (SW, S as STEP_S, StepSet, delta, get_model, kernel, mixed_term,
                     splits, square_lemma_residual, CATALOG)
from .series import TSeries, T, laurent
from .solve import kernel_root

t = T()
x = laurent(BiLaurent.x())
y = laurent(BiLaurent.y())
xb = laurent(BiLaurent.x(-1))
yb = laurent(BiLaurent.y(-1))
ONE_X = BiLaurent.x() + 1
ONE_Y = BiLaurent.y() + 1


class InvariantError(ValueError):
    pass


class Frac:
    """num / den with den a t-free polynomial in x, y and den(0, 0) != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = TSeries.coerce(num) if not isinstance(num, BiLaurent) else laurent(num)
        den = BiLaurent.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        # move a monomial factor of den into the numerator
        a, b = den.min_x(), den.min_y()
        if a or b:
            den = den.shift(-a, -b)
            num = num.map_coeffs(lambda c: c.shift(-a, -b))
        if den.min_x() < 0 or den.min_y() < 0 or not den.constant():
            raise InvariantError(f"denominator {den} vanishes at 0")
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, value) -> Frac:
        return value if isinstance(value, Frac) else cls(value)

    def __add__(self, other):
        o = Frac.coerce(other)
        if self.den == o.den:
            return Frac(self.num + o.num, self.den)
        return Frac(self.num * laurent(o.den) + o.num * laurent(self.den), self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-Frac.coerce(other))

    def __rsub__(self, other):
        return Frac.coerce(other) - self

    def __mul__(self, other):
        o = Frac.coerce(other)
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvariantError("negative powers of a Frac are not supported")
        return Frac(self.num ** k, self.den ** k)

    def eval_x(self, v) -> Frac:
        return Frac(self.num.eval_x(v), self.den.eval(x=v))

    def eval_y(self, v) -> Frac:
        return Frac(self.num.eval_y(v), self.den.eval(y=v))

    def swap(self) -> Frac:
        return Frac(self.num.swap(), self.den.swap())

    def truncate_t(self, n) -> Frac:
        return Frac(self.num.truncate_t(n), self.den)

    def series(self) -> TSeries:
        """Exact value when the denominator is a constant."""
        if not self.den.is_constant():
            raise InvariantError(f"denominator {self.den} is not constant")
        return self.num.scale(1 / self.den.constant())

    def residual(self, other) -> TSeries:
        """Numerator of self - other over the common denominator."""
        o = Frac.coerce(other)
        return self.num * laurent(o.den) - o.num * laurent(self.den)

    def equals(self, other, order) -> bool:
        return self.residual(other).truncate_t(order + 1).is_zero()

    def __repr__(self):
        return f"Frac({self.num!r} / ({self.den}))"


def frac(num, den=1) -> Frac:
    return Frac(num, den)


# residual helpers

def check_linear_identity(terms, constant, order: int) -> TSeries:
    """sum(coeff * factor) - constant, truncated after t^order."""
    total = TSeries.coerce(constant) * -1
    for coeff, factor in terms:
        total = total + TSeries.coerce(coeff) * TSeries.coerce(factor)
    return total.truncate_t(order + 1)


def divide_by_kernel(num: TSeries, steps: StepSet, order: int) -> TSeries:
    """num / (1 - tS) through the geometric expansion, known through t^order."""
    return (num.truncate_t(order + 1) / kernel(steps)).truncate_t(order + 1)


def _pole_violation(H: TSeries, bound, order):
    bx, by = bound
    for k, c in enumerate(H.coeffs):
        e = H.val + k
        n = Fraction(e, H.ram)
        if n > order:
            break
        for (i, j), _ in c.sorted_items():
            if -i > bx or -j > by:
                return (int(n) if n.denominator == 1 else n, i, j)
    return None


def check_divisible(F, steps: StepSet, pole_bound=(2, 2), order: int = 10):
    """Is F divisible by the kernel of ``steps``?  Returns (ok, H, first_violation).

    H is the numerator of F / K (over the denominator of F).  The answer is a
    finite-order surrogate: pole orders of H are checked for t^0 .. t^order.
    """
    F = Frac.coerce(F)
    H = divide_by_kernel(F.num, steps, order)
    known = H.t_order()
    if known is not None and known < order + 1:
        raise InvariantError(f"quotient known only below t^{known}; insufficient truncation")
    bad = _pole_violation(H, pole_bound, order)
    return bad is None, H, bad


def divisibility_report(name: str, F, steps: StepSet, pole_bound=(2, 2), order: int = 10) -> CheckReport:
    ok, _, bad = check_divisible(F, steps, pole_bound, order)
    detail = f"pole orders of the quotient checked against bound {tuple(pole_bound)} for t^0..t^{order}"
    return CheckReport(name, "", order, "pass" if ok else "fail", bad, detail)


def root_substitution_residuals(F, steps: StepSet, order: int, pole_bound: int = 4):
    """F(X(y), y) and F(x, Y(x)) for the power series roots of the kernel."""
    F = Frac.coerce(F)
    X = kernel_root(steps, order + pole_bound + 2)
    Ys = kernel_root(steps.mirrored(), order + pole_bound + 2).swap()
    rx = F.num.truncate_t(order + pole_bound + 2).subs_x(X, pole_bound)
    ry = F.num.truncate_t(order + pole_bound + 2).subs_y(Ys, pole_bound)
    return rx.truncate_t(order + 1), ry.truncate_t(order + 1)


# invariant pairs

@dataclass
class InvariantPair:
    """(I(x), J(y)) with I - J = K * certificate for the kernel of ``steps``."""

    name: str
    I: Frac
    J: Frac
    steps: StepSet
    certificate: Frac | None = None
    pole_bound: tuple = (2, 2)
    model: str = ""

    def difference(self) -> Frac:
        return self.I - self.J

    def certificate_residual(self) -> TSeries:
        """Numerator of I - J - K * certificate."""
        return self.difference().residual(self.certificate * Frac(kernel(self.steps)))

    def __add__(self, other: InvariantPair) -> InvariantPair:
        cert = None
        if self.certificate is not None and other.certificate is not None:
            cert = self.certificate + other.certificate
        return InvariantPair(f"({self.name})+({other.name})", self.I + other.I, self.J + other.J,
                             self.steps, cert, _max_bound(self, other), self.model)

    def __mul__(self, other: InvariantPair) -> InvariantPair:
        # I1 I2 - J1 J2 = (I1 - J1) I2 + J1 (I2 - J2)
        cert = None
        if self.certificate is not None and other.certificate is not None:
            cert = self.certificate * other.I + self.J * other.certificate
        bx = self.pole_bound[0] + other.pole_bound[0] + _frac_poles(other.I)[0] + _frac_poles(self.J)[0]
        by = self.pole_bound[1] + other.pole_bound[1] + _frac_poles(other.I)[1] + _frac_poles(self.J)[1]
        return InvariantPair(f"({self.name})*({other.name})", self.I * other.I, self.J * other.J,
                             self.steps, cert, (bx, by), self.model)

    def scale(self, c) -> InvariantPair:
        c = Frac(TSeries.const(c))
        cert = None if self.certificate is None else self.certificate * c
        return InvariantPair(f"{c.num}*({self.name})", self.I * c, self.J * c, self.steps, cert,
                             self.pole_bound, self.model)

    def check(self, order: int) -> list:
        """Certificate identity (if any) and pole-bounded divisibility through t^order."""
        reports = []
        label = self.name
        if self.certificate is not None:
            r = report_zero(f"certificate:{label}", self.model, order, self.certificate_residual())
            reports.append(r)
            bad = _pole_violation(self.certificate.num.truncate_t(order + 1), self.pole_bound, order)
            reports.append(CheckReport(f"certificate-poles:{label}", self.model, order,
                                       "pass" if bad is None else "fail", bad,
                                       f"bound {tuple(self.pole_bound)}"))
        try:
            ok, _, bad = check_divisible(self.difference(), self.steps, self.pole_bound, order)
            reports.append(CheckReport(f"divisible:{label}", self.model, order,
                                       "pass" if ok else "fail", bad,
                                       f"bound {tuple(self.pole_bound)}, finite-order check"))
        except InvariantError as exc:
            reports.append(CheckReport(f"divisible:{label}", self.model, order, "fail", None, str(exc)))
        return reports

    def ok(self, order: int) -> bool:
        return all(r.ok for r in self.check(order))


def _frac_poles(f: Frac):
    return f.num.pole_orders()


def _max_bound(a, b):
    return (max(a.pole_bound[0], b.pole_bound[0]), max(a.pole_bound[1], b.pole_bound[1]))


def trivial_pair(c, steps: StepSet, name: str = "const") -> InvariantPair:
    c = Frac(TSeries.coerce(c))
    return InvariantPair(name, c, c, steps, Frac(0), (0, 0))


# known rational invariants and decouplings of xy, keyed by the original model

def _in_x(num, den=1) -> Frac:
    return Frac(num, den)


def _mirror(f: Frac) -> Frac:
    return f.swap()


def _table_entries():
    ti = t ** -1
    tbl = {
        "kreweras": dict(I0=xb + x * ti - x * x, f=x * ti - x * x, g=-yb),
        "reverse-kreweras": dict(I0=xb * xb - xb * ti - x, f=ti.scale(Fraction(1, 2)) - xb,
                                 g=ti.scale(Fraction(1, 2)) - yb),
        "double-kreweras": dict(
            I0=Frac((xb - x) * laurent(ONE_X) - (1 + 2 * t) * ti, ONE_X),
            f=Frac((x - t - t * x * x) * ti, ONE_X), g=-yb),
        "simple": dict(
            I0=x + xb - t * (xb - x) ** 2,
            J0=Frac(y * ti + t * laurent(ONE_Y) ** 4 * yb, ONE_Y ** 2),
            f=-xb, g=Frac(y * ti, ONE_Y)),
        "diagonal": dict(
            I0=Frac(x * ti + t * laurent(ONE_X) ** 4 * xb, ONE_X ** 2),
            J0=y + yb - t * (yb - y) ** 2,
            f=Frac(x * ti, ONE_X), g=-yb),
        "m6": dict(f=-xb, g=Frac(y * (1 - t * y) * ti, ONE_Y)),
        "m7": dict(f=-xb, g=-1 + y * ti - y * y),
        "m8": dict(f=-xb + ti, g=-yb - y),
        "m9": dict(f=-xb, g=Frac((y - t) * ti, ONE_Y)),
    }
    out = {}
    for name, e in tbl.items():
        d = {k: Frac.coerce(v) for k, v in e.items()}
        if "I0" in d and "J0" not in d:
            d["J0"] = d["I0"].swap()
        out[name] = d
    return out


_KNOWN = None


def known_invariants(model) -> dict:
    """{'I0', 'J0' (finite group only), 'f', 'g'} for the companion of ``model``."""
    global _KNOWN
    if _KNOWN is None:
        _KNOWN = _table_entries()
    m = get_model(model)
    if m.name not in _KNOWN:
        raise InvariantError(f"no tabulated invariants for {m.name}")
    return dict(_KNOWN[m.name])


def rational_pair(model) -> InvariantPair:
    m = get_model(model)
    k = known_invariants(m)
    if "I0" not in k:
        raise InvariantError(f"{m.name} has no rational invariants (infinite group)")
    return InvariantPair("I0,J0", k["I0"], k["J0"], m.companion, None, (2, 2), m.name)


def exact_quotient(N: TSeries, steps: StepSet) -> TSeries:
    """P with N = K P exactly, for N a polynomial in t (raises if K does not divide N)."""
    if N.order is not None:
        raise InvariantError("exact quotient needs an exact numerator")
    if N.is_zero():
        return N
    q = (N.truncate(N.end() + 2) / kernel(steps)).truncate(N.end() + 1)
    P = TSeries(q.coeffs, q.val, None, q.ram)
    if not (N - kernel(steps) * P).is_zero():
        raise InvariantError("the kernel does not divide the numerator")
    return P


def decoupling_h(model) -> Frac:
    """h with xy = f(x) + g(y) + h K for the companion kernel."""
    m = get_model(model)
    k = known_invariants(m)
    N = Frac(x * y) - k["f"] - k["g"]
    return Frac(exact_quotient(N.num, m.companion), N.den)


def build_I1J1(model, order: int) -> InvariantPair:
    """Quadrant-based pair from the companion quadrant series."""
    m = get_model(model)
    comp = m.companion
    csp = splits(comp)
    k = known_invariants(m)
    Qs = _companion_quadrant(m.name, order + 3)
    Qx0, Q0y, Q00 = at_y0(Qs), at_x0(Qs), coefficient_series(Qs, 0, 0)
    sw = 1 if SW in comp else 0
    I1 = Frac(t * laurent(BiLaurent.x() * csp.H_minus) * Qx0) - k["f"]
    J1 = Frac(-t * laurent(BiLaurent.y() * csp.V_minus) * Q0y + t * Q00 * sw) + k["g"]
    h = decoupling_h(m)
    cert = h - Frac(x * y * Qs)
    return InvariantPair("I1,J1", I1, J1, comp, cert, (2, 2), m.name)


# decoupling in the three-quadrant cone

DECOUPLING_MODELS = ("kreweras", "reverse-kreweras", "double-kreweras", "m6")


def decoupling_table(model) -> dict:
    """F, G, H with y = (tV0 + 2txV+ - 1) G(y) + F(x) + K H."""
    m = get_model(model)
    ti = t ** -1
    tbl = {
        "kreweras": dict(F=ti - 2 * x, G=ti, H=TSeries.zero()),
        "reverse-kreweras": dict(F=-xb * xb + xb * ti - x, G=yb * ti, H=xb * yb * (x - y) * ti),
        "double-kreweras": dict(F=Frac((1 + 2 * t) * ti - (1 + x + xb) * laurent(ONE_X), ONE_X),
                                G=Frac(ti, ONE_Y), H=Frac((x - y) * ti, ONE_X * ONE_Y)),
        "m6": dict(F=ti - 2 * x - 2 * xb, G=Frac((1 - y) * ti, ONE_Y), H=Frac(-2 * y * ti, ONE_Y)),
    }
    if m.name not in tbl:
        raise InvariantError(f"no decoupling for {m.name}")
    return {k: Frac.coerce(v) for k, v in tbl[m.name].items()}


def decoupling_residual(model) -> TSeries:
    """Numerator of y - mixed G - F - K H; exact."""
    m = get_model(model)
    d = decoupling_table(m)
    lhs = Frac(y) - Frac(mixed_term(m.companion)) * d["G"] - d["F"] - Frac(kernel(m.companion)) * d["H"]
    return lhs.num


def _H_minus_at(m, value_map):
    sp = splits(m.steps)
    return sp.H_minus.exponent_map(value_map)


def F_from_formula(model) -> Frac:
    """F(x) = xbar^2 + K(xbar, xbar) / (t H-(xbar))."""
    m = get_model(model)
    sp = splits(m.steps)
    S = m.steps.poly()
    K_bar = 1 - t * laurent(S.exponent_map(lambda i, j: (-(i + j), 0)))
    Hm_bar = sp.H_minus.exponent_map(lambda i, j: (-i, 0))
    return Frac(xb * xb) + Frac(K_bar * t ** -1, Hm_bar)


def G_from_formula(model) -> Frac:
    """t G(y) = (1 + H-(ybar)) / (y H+(ybar)) - 1."""
    m = get_model(model)
    sp = splits(m.steps)
    Hm = sp.H_minus.exponent_map(lambda i, j: (0, -i))
    Hp = sp.H_plus.exponent_map(lambda i, j: (0, -i))
    return (Frac(laurent(1 + Hm) * t ** -1, BiLaurent.y() * Hp) - Frac(t ** -1))


def classic_f(model) -> Frac:
    """f(x) = g(x) = (x^2 + K(x, x) / (t H-(x))) / 2."""
    m = get_model(model)
    sp = splits(m.steps)
    S = m.steps.poly()
    K_diag = 1 - t * laurent(S.exponent_map(lambda i, j: (i + j, 0)))
    return (Frac(x * x) + Frac(K_diag * t ** -1, sp.H_minus)) * Frac(TSeries.const(Fraction(1, 2)))


def decoupling_checks(model, order: int = 10, pole_bound=(2, 2)) -> list:
    m = get_model(model)
    reports = []
    res = decoupling_residual(m)
    reports.append(CheckReport("table-decoupling", m.name, order,
                               "pass" if res.is_zero() else "fail", res.first_nonzero(), "exact identity"))
    d = decoupling_table(m)
    rF = F_from_formula(m).residual(d["F"])
    reports.append(CheckReport("F-formula", m.name, order, "pass" if rF.is_zero() else "fail",
                               rF.first_nonzero(), "exact identity"))
    rG = G_from_formula(m).residual(d["G"])
    reports.append(CheckReport("G-formula", m.name, order, "pass" if rG.is_zero() else "fail",
                               rG.first_nonzero(), "exact identity"))
    # divisibility of the expression by the companion kernel
    expr = Frac(y) - Frac(mixed_term(m.companion)) * d["G"] - d["F"]
    r = divisibility_report("decoupling-divisible", expr, m.companion, pole_bound, order)
    r.model = m.name
    reports.append(r)
    f = classic_f(m)
    classic = Frac(x * y) - f - f.swap()
    r = divisibility_report("classic-divisible", classic, m.steps, pole_bound, order)
    r.model = m.name
    reports.append(r)
    reports.append(_factor_report("decoupling-xyK-factor", m.name, expr, m.companion))
    reports.append(_factor_report("classic-xyK-factor", m.name, classic, m.steps))
    return reports


def has_xyK_factor(F: Frac, steps: StepSet) -> bool:
    """Does the polynomial numerator of F contain the factor x y K(x, y)?

    K is taken with its denominator cleared, so x y K is a polynomial in x, y.
    """
    num = Frac.coerce(F).num
    if num.order is not None:
        raise InvariantError("an exact numerator is needed")
    if num.is_zero():
        return True
    lo_x = min(c.min_x() for c in num.coeffs)
    lo_y = min(c.min_y() for c in num.coeffs)
    N = num.map_coeffs(lambda c: c.shift(-lo_x, -lo_y))
    Kp = kernel(steps).map_coeffs(lambda c: c.shift(1, 1))
    if any(c.min_x() < 0 or c.min_y() < 0 for c in Kp.coeffs):
        raise InvariantError("x y K is not a polynomial for these steps")
    # N = (x y K) P  <=>  N / (x y) = K P
    try:
        P = exact_quotient(N.map_coeffs(lambda c: c.shift(-1, -1)), steps)
    except InvariantError:
        return False
    return all(c.min_x() >= 0 and c.min_y() >= 0 for c in P.coeffs)


def _factor_report(name, model, F, steps):
    ok = has_xyK_factor(F, steps)
    return CheckReport(name, model, 0, "pass" if ok else "fail", None,
                       "numerator divisible by x y K as a polynomial")


# three-quadrant pair

@dataclass
class ThreeQuadrantPair:
    pair: InvariantPair
    R: Frac
    S: Frac
    R_at_1_alt: TSeries = field(default=None)


def build_three_quadrant_pair(model, order: int, pole_bound=(2, 2)) -> ThreeQuadrantPair:
    """(R(x)^2, Delta(y) S(y)^2) with the explicit certificate."""
    m = get_model(model)
    comp = m.companion
    csp = splits(comp)
    d = decoupling_table(m)
    md = model_data(m.name, order + 4)
    s_ind = 1 if STEP_S in comp else 0
    R = Frac(2 * t * laurent(BiLaurent.x() * csp.H_minus) * md.Ux0 + t * md.D0 * s_ind) - d["F"]
    S = Frac(y * md.D) + d["G"]
    I = R * R
    J = Frac(delta(comp)) * S * S
    mixed = Frac(mixed_term(comp))
    cert = (Frac(-4 * t * laurent(BiLaurent.x() * csp.V_plus)) * S * S
            + (d["H"] - Frac(2 * x * y * md.U)) * (mixed * S + R))
    pair = InvariantPair("I,J three-quadrant", I, J, comp, cert, tuple(pole_bound), m.name)
    # R(1) = -(1 - |S| t) (C(1,1) + 1/(t H-(1)))
    hm1 = splits(m.steps).H_minus.eval(x=1).constant()
    alt = -(1 - len(m.steps) * t) * (md.C11 + (t ** -1).scale(1 / hm1))
    return ThreeQuadrantPair(pair, R, S, alt)


def invariant_lemma_check(I: Frac, J: Frac, steps: StepSet, order: int):
    """(is_constant, A): the ratio (I - J)/K must be a multiple of xy coefficientwise."""
    I, J = Frac.coerce(I), Frac.coerce(J)
    H = divide_by_kernel((I - J).num, steps, order)
    for c in H.coeffs:
        for (i, j), _ in c.items():
            if i < 1 or j < 1:
                return False, None
    # then I and J are constant; recover the common value
    A = I.num.scale(1 / I.den.eval(x=1, y=1).constant()) if I.den.is_constant() else None
    if A is None:
        return True, None
    A = A.truncate_t(order + 1)
    if not A.is_scalar():
        return False, None
    return True, A


def kreweras_trivial_pair(order: int):
    """(I - 4 I1, J - 4 J1) for Kreweras steps, and the closed-form constant."""
    tq = build_three_quadrant_pair("kreweras", order)
    p1 = build_I1J1("kreweras", order)
    It = tq.pair.I - p1.I * Frac(TSeries.const(4))
    Jt = tq.pair.J - p1.J * Frac(TSeries.const(4))
    return It, Jt, tq.pair.steps


# pair registry used by acceptance and the CLI

def square_lemma_checks() -> list:
    """The discriminant identity for each catalog model, on S and on its companion if small."""
    out = []
    for name, m in CATALOG.items():
        sets = [("S", m.steps)]
        if m.companion.is_small():
            sets.append(("companion", m.companion))
        bad = None
        for label, steps in sets:
            r = square_lemma_residual(steps)
            if not r.is_zero():
                bad = (label, r.first_nonzero())
                break
        out.append(CheckReport("square-lemma", name, 0, "pass" if bad is None else "fail",
                               None if bad is None else bad[1],
                               "exact polynomial identity on " + ", ".join(l for l, _ in sets)))
    return out


def random_pair(model, order: int, rng: random.Random) -> InvariantPair:
    """A random combination of catalog pairs, used for closure tests."""
    m = get_model(model)
    base = [build_I1J1(m, order)]
    if "I0" in known_invariants(m):
        p0 = rational_pair(m)
        cert0 = Frac(divide_by_kernel(p0.difference().num, m.companion, order + 2), p0.difference().den)
        base.append(InvariantPair("I0,J0", p0.I, p0.J, p0.steps, cert0, (2, 2), m.name))
    pick = rng.choice(base)
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    const = trivial_pair(TSeries.const(Fraction(rng.randint(-3, 3), rng.randint(1, 3))), pick.steps)
    return pick.scale(c) + const

"""Series data for a model and residuals of its functional equations.

Every residual is computed from walk counts, so a zero residual to order N
certifies the equation coefficient by coefficient up to t^N.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .enumeration import (at_x0, at_y0, c_minus, coefficient_series, generating_series,
                          series_A, split_UD, SplitSeries)
from .laurent import BiLaurent, X as LX, Y as LY, XB as LXB, YB as LYB
from .models import (SW, S as STEP_S, Model, StepSet, delta, get_model, kernel,
                     mixed_term, splits)
from .series import TSeries, T, laurent

t = T()
x = laurent(LX)
y = laurent(LY)
xb = laurent(LXB)
yb = laurent(LYB)


def lp(p: BiLaurent) -> TSeries:
    return laurent(p)


class ModelData:
    """Three-quadrant series of a catalog model and quadrant series of its companion.

    ``order`` is the number of known t-coefficients (t^0 .. t^(order-1)).
    With ``series='A'`` (simple and diagonal models) the symmetrized series A
    replaces C.
    """

    def __init__(self, model, order: int, series: str = "C"):
        self.model: Model = get_model(model)
        self.order = order
        self.kind = series
        self.steps: StepSet = self.model.steps
        self.comp: StepSet = self.model.companion

    @cached_property
    def C(self) -> TSeries:
        if self.kind == "A":
            return series_A(self.model.name, self.order)
        return generating_series(self.model.name, "three-quadrant", self.order)

    @cached_property
    def split(self) -> SplitSeries:
        kind = {"symmetric": "symmetric", "half": "half", "asymmetric": "asymmetric"}[self.model.split]
        return split_UD(self.C, kind)

    @property
    def U(self):
        return self.split.U

    @property
    def D(self):
        return self.split.D

    @property
    def L(self):
        return self.split.L

    @cached_property
    def Ux0(self):
        return at_y0(self.U)

    @cached_property
    def U0y(self):
        return at_x0(self.U)

    @cached_property
    def U00(self):
        return coefficient_series(self.U, 0, 0)

    @cached_property
    def D0(self):
        return coefficient_series(self.D, 0, 0)

    @cached_property
    def Cm(self):
        """C-(x) = sum_{k>0} c(-k,0) x^k."""
        return c_minus(self.C)

    @cached_property
    def Cm_bar(self):
        """C-(xbar)."""
        return c_minus(self.C, reflected=True)

    @cached_property
    def C00(self):
        return coefficient_series(self.C, 0, 0)

    @cached_property
    def C11(self):
        return self.C.eval_x(1).eval_y(1)

    # companion quadrant data
    @cached_property
    def Q(self):
        return _companion_quadrant(self.model.name, self.order)

    @cached_property
    def Qx0(self):
        return at_y0(self.Q)

    @cached_property
    def Q0y(self):
        return at_x0(self.Q)

    @cached_property
    def Q00(self):
        return coefficient_series(self.Q, 0, 0)

    @cached_property
    def Q01(self):
        return coefficient_series(self.Q, 0, 1)

    @cached_property
    def K(self):
        return kernel(self.steps)

    @cached_property
    def Kc(self):
        return kernel(self.comp)

    @cached_property
    def sp(self):
        return splits(self.steps)

    @cached_property
    def csp(self):
        return splits(self.comp)

    @cached_property
    def Delta(self):
        return delta(self.comp)


@lru_cache(maxsize=32)
def _companion_quadrant(name: str, order: int) -> TSeries:
    from .enumeration import assemble_series, count_walks
    comp = get_model(name).companion
    return assemble_series(count_walks(comp, "quadrant", order - 1), order)


@lru_cache(maxsize=64)
def model_data(model, order: int, series: str = "C") -> ModelData:
    return ModelData(model, order, series)


def quadrant_data(steps: StepSet, order: int):
    """(Q, Q(x,0), Q(0,y), Q00) for quadrant walks with the given steps."""
    from .enumeration import assemble_series, count_walks
    Qs = assemble_series(count_walks(steps, "quadrant", order - 1), order)
    return Qs, at_y0(Qs), at_x0(Qs), coefficient_series(Qs, 0, 0)


def _ind(flag: bool) -> int:
    return 1 if flag else 0


# residuals: each returns lhs - rhs

def residual_eqfunc_gen(d: ModelData) -> TSeries:
    """K C = 1 - t ybar H-(x) C-(xbar) - t xbar H-(y) C-(ybar) - t xbar ybar C00 [SW in S]."""
    sp = d.sp
    Hm_y = sp.H_minus.swap()
    rhs = (1 - t * yb * lp(sp.H_minus) * d.Cm_bar - t * xb * lp(Hm_y) * d.Cm_bar.swap()
           - t * xb * yb * d.C00 * _ind(SW in d.steps))
    return d.K * d.C - rhs


def residual_eqU(d: ModelData, initial: TSeries | None = None) -> TSeries:
    """2xy K U = y + y(tV0 + 2txV+ - 1) D(y) - 2tx H-(x) U(x,0) - t D0 [S in companion]."""
    csp = d.csp
    init = y if initial is None else initial
    rhs = (init + y * mixed_term(d.comp) * d.D - 2 * t * lp(LX * csp.H_minus) * d.Ux0
           - t * d.D0 * _ind(STEP_S in d.comp))
    return 2 * x * y * d.Kc * d.U - rhs


def residual_eqD2(d: ModelData) -> TSeries:
    """(1 - t V0(y)) D(y) = 1 - t ybar D0 [SW in S] + 2t V-(y) U(0,y) - 2t ybar U00 [S in S]."""
    csp = d.csp
    rhs = (1 - t * yb * d.D0 * _ind(SW in d.steps) + 2 * t * lp(csp.V_minus) * d.U0y
           - 2 * t * yb * d.U00 * _ind(STEP_S in d.steps))
    return (1 - t * lp(csp.V_zero)) * d.D - rhs


def residual_eqU2(d: ModelData) -> TSeries:
    """(1 - t S(xbar, xy)) x U = t x V+(y) D - t ybar H-(xbar) U(x,0) - t V-(y) U(0,y) + t ybar U00 [S in S]."""
    csp = d.csp
    Hm_xbar = d.sp.H_minus.exponent_map(lambda i, j: (-i, j))
    rhs = (t * x * lp(csp.V_plus) * d.D - t * yb * lp(Hm_xbar) * d.Ux0 - t * lp(csp.V_minus) * d.U0y
           + t * yb * d.U00 * _ind(STEP_S in d.steps))
    return d.Kc * x * d.U - rhs


def residual_quadrant(steps: StepSet, order: int) -> TSeries:
    """xy K Q = xy - t x H-(x) Q(x,0) - t y V-(y) Q(0,y) + t Q00 [SW in steps]."""
    Qs, Qx0, Q0y, Q00 = quadrant_data(steps, order)
    sp = splits(steps)
    rhs = (x * y - t * lp(LX * sp.H_minus) * Qx0 - t * lp(LY * sp.V_minus) * Q0y
           + t * Q00 * _ind(SW in steps))
    return x * y * kernel(steps) * Qs - rhs


def residual_diag_D(d: ModelData) -> TSeries:
    """(1 - t(ybar + y)) D = 1 - t ybar D0 + 2t ybar U(0,y) - 2t ybar U00 (diagonal model)."""
    rhs = 1 - t * yb * d.D0 + 2 * t * yb * d.U0y - 2 * t * yb * d.U00
    return (1 - t * (yb + y)) * d.D - rhs


def residual_diag_U(d: ModelData) -> TSeries:
    """(1 - t(y + ybar + xbar ybar + xy)) x U = txyD - t ybar (1+x) U(x,0) - t ybar U(0,y) + t ybar U00."""
    rhs = (t * x * y * d.D - t * yb * (1 + x) * d.Ux0 - t * yb * d.U0y + t * yb * d.U00)
    return (1 - t * (y + yb + xb * yb + x * y)) * x * d.U - rhs


def residual_scarecrow(d: ModelData) -> TSeries:
    """2xy K U = y + y(ty + 2tx(1+xy) - 1) D - 2t(1 + xbar) U(x,0) + 2t(xy - xbar)(U(0,y) - U00)."""
    Kc = 1 - t * (x + xb * yb + y + xb * xb * yb + x * x * y)
    rhs = (y + y * (t * y + 2 * t * x * (1 + x * y) - 1) * d.D - 2 * t * (1 + xb) * d.Ux0
           + 2 * t * (x * y - xb) * (d.U0y - d.U00))
    return 2 * x * y * Kc * d.U - rhs


def residuals_gessel_asymmetric(d: ModelData) -> dict:
    """The three equations for U, D, L in the asymmetric split of Gessel walks."""
    L = d.L
    Lx0 = at_y0(L)
    L0y = at_x0(L)
    L00 = coefficient_series(L, 0, 0)
    r1 = (1 - t * (x + xb + y + yb)) * x * d.U - (t * x * d.D - t * x * yb * d.Ux0 - t * d.U0y)
    r2 = (1 - t * (y + yb)) * d.D - (1 - t * yb * d.D0 + t * d.U0y + t * yb * (L0y - L00))
    r3 = (1 - t * (y + yb + x * y + xb * yb)) * x * L - (
        t * x * y * d.D - t * yb * (1 + x) * Lx0 - t * yb * (L0y - L00))
    return {"U": r1, "D": r2, "L": r3}


def residual_A_simple(d: ModelData) -> TSeries:
    """(1 - t(x+xbar+y+ybar)) A = (2 + xbar^2 + ybar^2)/3 - t ybar A-(xbar) - t xbar A-(ybar)."""
    A = d.C
    rhs = (2 + xb * xb + yb * yb).scale(Fraction(1, 3)) - t * yb * d.Cm_bar - t * xb * d.Cm_bar.swap()
    return (1 - t * (x + xb + y + yb)) * A - rhs


def residual_A_diag(d: ModelData) -> TSeries:
    """(1 - t(x+xbar)(y+ybar)) A = (2+xbar^2+ybar^2)/3 - t ybar (x+xbar) A-(xbar) - t xbar (y+ybar) A-(ybar) - t xbar ybar A00."""
    A = d.C
    rhs = ((2 + xb * xb + yb * yb).scale(Fraction(1, 3)) - t * yb * (x + xb) * d.Cm_bar
           - t * xb * (y + yb) * d.Cm_bar.swap() - t * xb * yb * d.C00)
    return (1 - t * (x + xb) * (y + yb)) * A - rhs


def residual_eqU_A(d: ModelData) -> TSeries:
    """U equation for A: same as for C with initial term 2y(1 + x^2)/3 (simple) or 2y(1+x)/3 (diagonal)."""
    if d.model.name == "simple":
        init = (y * (1 + x * x)).scale(Fraction(2, 3))
    else:
        init = (y * (1 + x)).scale(Fraction(2, 3))
    return residual_eqU(d, initial=init)


@dataclass
class CheckReport:
    check: str
    model: str
    order: int
    status: str
    first_failure: tuple | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        ff = None
        if self.first_failure is not None:
            n, i, j = self.first_failure
            ff = {"n": str(n), "i": i, "j": j}
        out = {"check": self.check, "model": self.model, "order": self.order,
               "status": self.status, "first_failure": ff}
        if self.detail:
            out["detail"] = self.detail
        return out


def report_zero(check: str, model: str, order: int, residual: TSeries, detail: str = "") -> CheckReport:
    """Pass iff ``residual`` vanishes through t^order."""
    r = residual.truncate_t(order + 1)
    known = r.t_order()
    if known is not None and known < order + 1:
        return CheckReport(check, model, order, "fail", None,
                           f"residual known only below t^{known}; insufficient truncation")
    if r.is_zero():
        return CheckReport(check, model, order, "pass", None, detail)
    return CheckReport(check, model, order, "fail", r.first_nonzero(), detail)


def funceq_checks(model, order: int) -> list:
    """All functional equation checks for a catalog model, through t^order."""
    m = get_model(model)
    reports = []
    if m.name in ("gessel", "gessel-reflected"):
        reports.append(report_zero("eqfunc-qu", m.name, order, residual_quadrant(m.steps, order + 1)))
        return reports
    d = model_data(m.name, order + 2)
    if m.name == "scarecrow":
        reports.append(report_zero("eqU-scarecrow", m.name, order, residual_scarecrow(d)))
        return reports
    if m.name == "gessel-asymmetric":
        for key, r in residuals_gessel_asymmetric(d).items():
            reports.append(report_zero(f"eq-{key}-asymmetric", m.name, order, r))
        return reports
    reports.append(report_zero("eqfunc-gen", m.name, order, residual_eqfunc_gen(d)))
    reports.append(report_zero("eq-U", m.name, order, residual_eqU(d)))
    if m.split == "half":
        reports.append(report_zero("eq-D-diag", m.name, order, residual_diag_D(d)))
        reports.append(report_zero("eq-xU-diag", m.name, order, residual_diag_U(d)))
    else:
        reports.append(report_zero("eqD2", m.name, order, residual_eqD2(d)))
        reports.append(report_zero("eqU2", m.name, order, residual_eqU2(d)))
    if m.companion.is_small():
        reports.append(report_zero("eqfunc-qu", m.name, order, residual_quadrant(m.companion, order + 1)))
    if m.name in ("simple", "diagonal"):
        a = model_data(m.name, order + 2, "A")
        res = residual_A_simple(a) if m.name == "simple" else residual_A_diag(a)
        reports.append(report_zero("A-eq", m.name, order, res))
        reports.append(report_zero("eqU-A", m.name, order, residual_eqU_A(a)))
    return reports

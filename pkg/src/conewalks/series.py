"""Truncated Puiseux series in t with bivariate Laurent polynomial coefficients.

A series is stored in the variable s = t^(1/ram).  ``coeffs[k]`` is the
coefficient of s^(val+k); every exponent below ``order`` is known, and
exponents past the end of ``coeffs`` but below ``order`` are zero.  An
``order`` of None marks an exact, finitely supported series (for instance a
kernel 1 - t*S(x, y)).
"""
from __future__ import annotations

import math
from fractions import Fraction

from gmpy2 import mpq

from .laurent import BiLaurent, q_str, to_q


class TruncationError(ValueError):
    """Raised when a request goes past the known part of a series."""


class NotInvertible(ZeroDivisionError):
    pass


def _min_order(*orders):
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


def _acc_product(acc: dict, a: dict, b: dict) -> None:
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            v = acc.get(key)
            acc[key] = c1 * c2 if v is None else v + c1 * c2


def _freeze(acc: dict) -> BiLaurent:
    return BiLaurent({k: v for k, v in acc.items() if v}, _trusted=True)


def _conv(A: list, B: list, count: int) -> list:
    la, lb = len(A), len(B)
    out = []
    for n in range(count):
        acc: dict = {}
        for k in range(max(0, n - lb + 1), min(n, la - 1) + 1):
            a = A[k].terms
            if a:
                b = B[n - k].terms
                if b:
                    _acc_product(acc, a, b)
        out.append(_freeze(acc))
    return out


class TSeries:
    __slots__ = ("ram", "val", "order", "coeffs")

    def __init__(self, coeffs=(), val: int = 0, order: int | None = None, ram: int = 1):
        coeffs = [BiLaurent.coerce(c) for c in coeffs]
        if order is not None:
            keep = max(0, order - val)
            coeffs = coeffs[:keep]
        lead = 0
        while lead < len(coeffs) and coeffs[lead].is_zero():
            lead += 1
        coeffs = coeffs[lead:]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            val = order if order is not None else 0
        else:
            val += lead
        self.ram = int(ram)
        self.val = int(val)
        self.order = order
        self.coeffs = coeffs

    # constructors
    @classmethod
    def zero(cls, order=None, ram=1) -> TSeries:
        return cls([], 0, order, ram)

    @classmethod
    def const(cls, c, order=None) -> TSeries:
        return cls([BiLaurent.coerce(c)], 0, order)

    @classmethod
    def monomial(cls, n: int = 1, c=1, order=None, ram: int = 1) -> TSeries:
        """c * s^n where s = t^(1/ram); c may be a BiLaurent."""
        return cls([BiLaurent.coerce(c)], n, order, ram)

    @classmethod
    def t(cls, k=1) -> TSeries:
        k = Fraction(k)
        return cls([BiLaurent.const(1)], k.numerator, None, k.denominator)

    @classmethod
    def from_dict(cls, data: dict, order=None, ram: int = 1) -> TSeries:
        """Build from {s-exponent: coefficient}."""
        if not data:
            return cls.zero(order, ram)
        lo = min(data)
        hi = max(data)
        coeffs = [BiLaurent.coerce(data.get(e, 0)) for e in range(lo, hi + 1)]
        return cls(coeffs, lo, order, ram)

    @classmethod
    def coerce(cls, value) -> TSeries:
        if isinstance(value, TSeries):
            return value
        return cls.const(value)

    # basic accessors
    @property
    def is_exact(self) -> bool:
        return self.order is None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def end(self) -> int:
        """One past the last stored exponent."""
        return self.val + len(self.coeffs)

    def coeff_s(self, e: int) -> BiLaurent:
        if self.order is not None and e >= self.order:
            raise TruncationError(f"s^{e} is beyond truncation order {self.order}")
        k = e - self.val
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return BiLaurent()

    def coeff_t(self, n) -> BiLaurent:
        e = Fraction(n) * self.ram
        if e.denominator != 1:
            return BiLaurent()
        return self.coeff_s(int(e))

    def coeff(self, i: int, j: int, n) -> mpq:
        return self.coeff_t(n).coeff(i, j)

    def leading(self) -> BiLaurent:
        if not self.coeffs:
            raise NotInvertible("series is zero to its truncation order")
        return self.coeffs[0]

    def t_val(self) -> Fraction:
        return Fraction(self.val, self.ram)

    def t_order(self):
        return None if self.order is None else Fraction(self.order, self.ram)

    def items(self):
        for k, c in enumerate(self.coeffs):
            if c:
                yield self.val + k, c

    # ramification
    def lift(self, k: int) -> TSeries:
        if k == 1:
            return self
        data = {e * k: c for e, c in self.items()}
        order = None if self.order is None else self.order * k
        return TSeries.from_dict(data, order, self.ram * k)

    def restrict(self) -> TSeries:
        """Reduce the ramification index as far as the support allows."""
        g = self.ram
        for e, _ in self.items():
            g = math.gcd(g, e)
            if g == 1:
                return self
        if g <= 1:
            return self
        data = {e // g: c for e, c in self.items()}
        order = None if self.order is None else -(-self.order // g)
        return TSeries.from_dict(data, order, self.ram // g)

    @staticmethod
    def align(a: TSeries, b: TSeries):
        if a.ram == b.ram:
            return a, b
        r = math.lcm(a.ram, b.ram)
        return a.lift(r // a.ram), b.lift(r // b.ram)

    # arithmetic
    def __add__(self, other) -> TSeries:
        other = _coerce_like(other)
        a, b = TSeries.align(self, other)
        order = _min_order(a.order, b.order)
        data: dict = {}
        for e, c in a.items():
            if order is None or e < order:
                data[e] = c
        for e, c in b.items():
            if order is None or e < order:
                data[e] = data[e] + c if e in data else c
        return TSeries.from_dict(data, order, a.ram)

    __radd__ = __add__

    def __neg__(self) -> TSeries:
        return TSeries([-c for c in self.coeffs], self.val, self.order, self.ram)

    def __sub__(self, other) -> TSeries:
        return self + (-_coerce_like(other))

    def __rsub__(self, other) -> TSeries:
        return _coerce_like(other) - self

    def scale(self, c) -> TSeries:
        if isinstance(c, BiLaurent):
            return TSeries([k * c for k in self.coeffs], self.val, self.order, self.ram)
        c = to_q(c)
        return TSeries([k.scale(c) for k in self.coeffs], self.val, self.order, self.ram)

    def __mul__(self, other) -> TSeries:
        if not isinstance(other, TSeries):
            if isinstance(other, BiLaurent):
                return self.scale(other)
            return self.scale(other)
        a, b = TSeries.align(self, other)
        if (a.order is None and not a.coeffs) or (b.order is None and not b.coeffs):
            return TSeries.zero(None, a.ram)
        val = a.val + b.val
        orders = []
        if a.order is not None:
            orders.append(a.order + b.val)
        if b.order is not None:
            orders.append(b.order + a.val)
        order = min(orders) if orders else None
        if order is None:
            count = len(a.coeffs) + len(b.coeffs) - 1 if a.coeffs and b.coeffs else 0
        else:
            count = max(0, order - val)
        return TSeries(_conv(a.coeffs, b.coeffs, count), val, order, a.ram)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TSeries:
        if isinstance(other, TSeries):
            if other.order is None and self.order is not None and not (
                    len(other.coeffs) == 1 and other.coeffs[0].is_monomial()):
                return self * other.invert(max(1, self.order - self.val))
            return self * other.invert()
        if isinstance(other, BiLaurent):
            return TSeries([c / other for c in self.coeffs], self.val, self.order, self.ram)
        return self.scale(1 / to_q(other))

    def __rtruediv__(self, other) -> TSeries:
        return _coerce_like(other) / self

    def __pow__(self, k: int) -> TSeries:
        if k < 0:
            return self.invert() ** (-k)
        result = TSeries.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_t(self, k) -> TSeries:
        """Multiply by t^k."""
        e = Fraction(k) * self.ram
        s = self
        if e.denominator != 1:
            s = self.lift(e.denominator)
            e = e * e.denominator
        e = int(e)
        order = None if s.order is None else s.order + e
        return TSeries(s.coeffs, s.val + e, order, s.ram)

    def truncate(self, order: int) -> TSeries:
        """Truncate to s-order ``order`` (never raising precision)."""
        new = order if self.order is None else min(order, self.order)
        return TSeries(self.coeffs, self.val, new, self.ram)

    def truncate_t(self, n) -> TSeries:
        e = Fraction(n) * self.ram
        return self.truncate(math.ceil(e))

    def with_order(self, order):
        """Declare an exact series known only up to ``order`` (s-units)."""
        return self.truncate(order)

    def _normalized(self, order):
        """Split as s^val * m * (1 + u) with m the leading monomial."""
        lead = self.leading()
        if not lead.is_monomial():
            raise NotInvertible(f"leading coefficient {lead} is not a monomial")
        if order is None:
            if self.order is None:
                raise TruncationError("an order is needed to expand an exact series")
            rel = self.order - self.val
        else:
            rel = order if self.order is None else min(order, self.order - self.val)
        norm = [c / lead for c in self.coeffs[:rel]]
        return lead, rel, norm

    def invert(self, rel_order: int | None = None) -> TSeries:
        """Multiplicative inverse; ``rel_order`` caps the relative precision."""
        if self.order is None and len(self.coeffs) == 1 and self.coeffs[0].is_monomial():
            return TSeries([self.coeffs[0] ** -1], -self.val, None, self.ram)
        lead, rel, a = self._normalized(rel_order)
        b = [BiLaurent.const(1)]
        for n in range(1, rel):
            acc: dict = {}
            for k in range(1, min(n, len(a) - 1) + 1):
                if a[k].terms and b[n - k].terms:
                    _acc_product(acc, a[k].terms, b[n - k].terms)
            b.append(-_freeze(acc))
        inv = lead ** -1
        return TSeries([c * inv for c in b], -self.val, -self.val + rel, self.ram)

    def sqrt(self, rel_order: int | None = None) -> TSeries:
        """Square root with leading term sqrt(c) m s^(val/2); c must be a rational square."""
        lead, rel, a = self._normalized(rel_order)
        ((i, j), c), = lead.items()
        if i % 2 or j % 2:
            raise NotInvertible(f"leading monomial {lead} is not a square")
        root_c = _rational_sqrt(c)
        s = self
        val = s.val
        ram = s.ram
        if val % 2:
            s = s.lift(2)
            val, ram = s.val, s.ram
        b = [BiLaurent.const(1)]
        for n in range(1, rel):
            acc: dict = {}
            for k in range(1, n):
                if b[k].terms and b[n - k].terms:
                    _acc_product(acc, b[k].terms, b[n - k].terms)
            un = a[n] if n < len(a) else BiLaurent()
            b.append((un - _freeze(acc)).scale(mpq(1, 2)))
        m = BiLaurent.monomial(i // 2, j // 2, root_c)
        step = ram // self.ram  # 1, or 2 after lifting
        coeffs = []
        for c_ in b:
            coeffs.append(c_ * m)
            coeffs.extend([BiLaurent()] * (step - 1))
        return TSeries(coeffs, val // 2, val // 2 + rel * step, ram)

    # coefficient maps and substitutions
    def map_coeffs(self, fn) -> TSeries:
        return TSeries([fn(c) for c in self.coeffs], self.val, self.order, self.ram)

    def eval_x(self, value) -> TSeries:
        return self.map_coeffs(lambda c: c.eval(x=value))

    def eval_y(self, value) -> TSeries:
        return self.map_coeffs(lambda c: c.eval(y=value))

    def swap(self) -> TSeries:
        return self.map_coeffs(BiLaurent.swap)

    def x_part(self, i: int) -> TSeries:
        return self.map_coeffs(lambda c: c.x_part(i))

    def y_part(self, j: int) -> TSeries:
        return self.map_coeffs(lambda c: c.y_part(j))

    def x_range(self):
        lo = [c.min_x() for c in self.coeffs if c]
        hi = [c.max_x() for c in self.coeffs if c]
        return (min(lo), max(hi)) if lo else (0, 0)

    def subs_x(self, X: TSeries, pole_bound: int | None = None) -> TSeries:
        """Substitute a series X (free of x) for x."""
        return _substitute(self, X, pole_bound, "x")

    def subs_y(self, Y: TSeries, pole_bound: int | None = None) -> TSeries:
        return _substitute(self.swap(), Y.swap(), pole_bound, "x").swap()

    def pole_orders(self):
        """Largest pole orders at x = 0 and y = 0 over the known coefficients."""
        px = max((c.x_pole_order() for c in self.coeffs), default=0)
        py = max((c.y_pole_order() for c in self.coeffs), default=0)
        return px, py

    def first_nonzero(self):
        """(n, i, j) of the first nonzero coefficient, or None."""
        if not self.coeffs:
            return None
        e = self.val
        c = self.coeffs[0]
        (i, j), _ = c.sorted_items()[0]
        n = Fraction(e, self.ram)
        return (int(n) if n.denominator == 1 else n, i, j)

    def is_scalar(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    def scalar_coeffs(self) -> list:
        """Rational coefficients from s^val up to the order (scalar series only)."""
        if self.order is None:
            return [c.constant() for c in self.coeffs]
        return [self.coeff_s(e).constant() for e in range(self.val, self.order)]

    # comparison and serialization
    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return (self.ram, self.val, self.order, self.coeffs) == (
            other.ram, other.val, other.order, other.coeffs)

    __hash__ = None

    def agrees(self, other, order=None) -> bool:
        """True when self - other vanishes to the common (or given) t-order."""
        diff = self - _coerce_like(other)
        if order is not None:
            diff = diff.truncate_t(order)
        return diff.is_zero()

    def to_json(self) -> dict:
        return {
            "ram": self.ram,
            "val": self.val,
            "order": self.order,
            "coeffs": [
                {"n": e, "terms": [{"i": i, "j": j, "q": q_str(c)} for (i, j), c in coef.sorted_items()]}
                for e, coef in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> TSeries:
        entries = {}
        for item in data["coeffs"]:
            entries[int(item["n"])] = BiLaurent({(t["i"], t["j"]): to_q(t["q"]) for t in item["terms"]})
        return cls.from_dict(entries, data.get("order"), data.get("ram", 1))

    def __repr__(self) -> str:
        terms = []
        for e, c in self.items():
            if len(terms) >= 6:
                terms.append("...")
                break
            expo = Fraction(e, self.ram)
            terms.append(f"({c})*t^{expo}")
        tail = "" if self.order is None else f" + O(t^{Fraction(self.order, self.ram)})"
        return "TSeries(" + (" + ".join(terms) or "0") + tail + ")"


def _coerce_like(value) -> TSeries:
    if isinstance(value, TSeries):
        return value
    return TSeries.const(value)


def _rational_sqrt(c: mpq) -> mpq:
    c = mpq(c)
    if c < 0:
        raise NotInvertible(f"leading coefficient {c} is negative")
    p, q = int(c.numerator), int(c.denominator)
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise NotInvertible(f"leading coefficient {c} is not a rational square")
    return mpq(rp, rq)


def _substitute(F: TSeries, X: TSeries, pole_bound, var) -> TSeries:
    if any(c and (c.min_x() != 0 or c.max_x() != 0) for c in X.coeffs):
        raise ValueError("substituted series must not involve the variable it replaces")
    F, X = TSeries.align(F, X)
    lo, hi = F.x_range()
    if pole_bound is not None:
        lo = min(lo, -pole_bound)
    if F.order is not None:
        if X.val < 0:
            raise TruncationError("cannot substitute a series with a pole into a truncated series")
        cap = F.order + min(0, lo) * X.val
    else:
        cap = None
    total = TSeries.zero(cap, F.ram)
    powers = {0: TSeries.const(1)}
    inv = None
    for i in range(lo, hi + 1):
        part = F.x_part(i)
        if not part.coeffs:
            continue
        if i not in powers:
            if i > 0:
                k = max(p for p in powers if p >= 0)
                while k < i:
                    powers[k + 1] = powers[k] * X
                    k += 1
            else:
                if inv is None:
                    inv = X.invert(None if X.order is not None else (cap - X.val if cap is not None else None))
                    powers[-1] = inv
                k = min(p for p in powers if p <= 0)
                while k > i:
                    powers[k - 1] = powers[k] * inv
                    k -= 1
        total = total + part * powers[i]
    return total


def T(k=1) -> TSeries:
    """The exact monomial t^k."""
    return TSeries.t(k)


def const(c) -> TSeries:
    return TSeries.const(c)


def lx(k: int = 1) -> TSeries:
    return TSeries.const(BiLaurent.x(k))


def ly(k: int = 1) -> TSeries:
    return TSeries.const(BiLaurent.y(k))


def laurent(p: BiLaurent) -> TSeries:
    return TSeries.const(p)


def ts_poly(terms: dict) -> TSeries:
    """Exact series from {t-exponent: coefficient}."""
    return TSeries.from_dict({int(k): BiLaurent.coerce(v) for k, v in terms.items()})

"""Sparse bivariate Laurent polynomials in x, y with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from gmpy2 import mpq

Q = mpq


def to_q(value) -> mpq:
    """Coerce an int, Fraction, mpq or 'p/q' string to an exact rational."""
    if isinstance(value, str):
        return mpq(Fraction(value))
    return mpq(value)


def q_str(value) -> str:
    value = mpq(value)
    return f"{value.numerator}/{value.denominator}"


class BiLaurent:
    """Finite sum of c * x^i * y^j with i, j in Z.

    Instances are treated as immutable; ``terms`` maps (i, j) to a nonzero mpq.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None, *, _trusted: bool = False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for key, c in terms.items():
                c = to_q(c)
                if c:
                    clean[(int(key[0]), int(key[1]))] = c
            self.terms = clean

    # constructors
    @classmethod
    def const(cls, c) -> BiLaurent:
        return cls.monomial(0, 0, c)

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> BiLaurent:
        c = to_q(c)
        return cls({(i, j): c}, _trusted=True) if c else cls()

    @classmethod
    def x(cls, k: int = 1) -> BiLaurent:
        return cls.monomial(k, 0)

    @classmethod
    def y(cls, k: int = 1) -> BiLaurent:
        return cls.monomial(0, k)

    @classmethod
    def coerce(cls, value) -> BiLaurent:
        if isinstance(value, BiLaurent):
            return value
        return cls.const(value)

    # predicates and accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def coeff(self, i: int, j: int) -> mpq:
        return self.terms.get((i, j), mpq(0))

    def constant(self) -> mpq:
        return self.coeff(0, 0)

    def min_x(self) -> int | None:
        return min((i for i, _ in self.terms), default=None)

    def max_x(self) -> int | None:
        return max((i for i, _ in self.terms), default=None)

    def min_y(self) -> int | None:
        return min((j for _, j in self.terms), default=None)

    def max_y(self) -> int | None:
        return max((j for _, j in self.terms), default=None)

    def x_pole_order(self) -> int:
        m = self.min_x()
        return 0 if m is None or m >= 0 else -m

    def y_pole_order(self) -> int:
        m = self.min_y()
        return 0 if m is None or m >= 0 else -m

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> list:
        return sorted(self.terms.items())

    # arithmetic
    def __add__(self, other) -> BiLaurent:
        other = BiLaurent.coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            if v is None:
                out[key] = c
            else:
                v = v + c
                if v:
                    out[key] = v
                else:
                    del out[key]
        return BiLaurent(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> BiLaurent:
        return BiLaurent({k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> BiLaurent:
        return self + (-BiLaurent.coerce(other))

    def __rsub__(self, other) -> BiLaurent:
        return BiLaurent.coerce(other) - self

    def scale(self, c) -> BiLaurent:
        c = to_q(c)
        if not c:
            return BiLaurent()
        return BiLaurent({k: v * c for k, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other) -> BiLaurent:
        if not isinstance(other, BiLaurent):
            return self.scale(other)
        if len(other.terms) == 1:
            ((a, b), c), = other.terms.items()
            return self.shift(a, b).scale(c)
        if len(self.terms) == 1:
            return other * self
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiLaurent({k: v for k, v in out.items() if v}, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BiLaurent:
        if isinstance(other, BiLaurent):
            if not other.is_monomial():
                raise ZeroDivisionError("only division by a monomial stays Laurent")
            ((a, b), c), = other.terms.items()
            return self.shift(-a, -b).scale(1 / c)
        return self.scale(1 / to_q(other))

    def __pow__(self, k: int) -> BiLaurent:
        if k < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("negative power of a non-monomial")
            ((a, b), c), = self.terms.items()
            return BiLaurent.monomial(a * k, b * k, c ** k)
        result = BiLaurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, a: int, b: int) -> BiLaurent:
        """Multiply by x^a y^b."""
        if a == 0 and b == 0:
            return self
        return BiLaurent({(i + a, j + b): c for (i, j), c in self.terms.items()}, _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurent):
            try:
                other = BiLaurent.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # substitutions
    def swap(self) -> BiLaurent:
        return BiLaurent({(j, i): c for (i, j), c in self.terms.items()}, _trusted=True)

    def exponent_map(self, fn) -> BiLaurent:
        """Apply (i, j) -> fn(i, j) to every exponent; fn must be injective on the support."""
        out: dict = {}
        for (i, j), c in self.terms.items():
            key = fn(i, j)
            out[key] = out.get(key, 0) + c
        return BiLaurent({k: v for k, v in out.items() if v}, _trusted=True)

    def eval(self, x=None, y=None) -> BiLaurent:
        """Specialize x and/or y to nonzero rational values."""
        xv = None if x is None else to_q(x)
        yv = None if y is None else to_q(y)
        out: dict = {}
        for (i, j), c in self.terms.items():
            if xv is not None:
                c = c * xv ** i
                i = 0
            if yv is not None:
                c = c * yv ** j
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return BiLaurent({k: v for k, v in out.items() if v}, _trusted=True)

    def x_part(self, i: int) -> BiLaurent:
        """Coefficient of x^i, as a Laurent polynomial in y."""
        return BiLaurent({(0, j): c for (a, j), c in self.terms.items() if a == i}, _trusted=True)

    def y_part(self, j: int) -> BiLaurent:
        return BiLaurent({(i, 0): c for (i, b), c in self.terms.items() if b == j}, _trusted=True)

    def __repr__(self) -> str:
        return f"BiLaurent({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_items():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            coef = str(c)
            if mono:
                body = "*".join(mono)
                parts.append(body if c == 1 else (f"-{body}" if c == -1 else f"{coef}*{body}"))
            else:
                parts.append(coef)
        return " + ".join(parts).replace("+ -", "- ")


def laurent_sum(items: Iterable[BiLaurent]) -> BiLaurent:
    out: dict = {}
    for p in items:
        for key, c in p.terms.items():
            out[key] = out.get(key, 0) + c
    return BiLaurent({k: v for k, v in out.items() if v}, _trusted=True)


X = BiLaurent.x()
Y = BiLaurent.y()
XB = BiLaurent.x(-1)
YB = BiLaurent.y(-1)
ONE = BiLaurent.const(1)
ZERO = BiLaurent()

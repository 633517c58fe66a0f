"""Small expression trees over named series, evaluated exactly.

Closed forms are written with Python operators on ``Expr`` leaves and then
evaluated against bindings::

    V = leaf("V")
    e = (1 - V**3) ** Fraction(3, 2) / V**2
    e.evaluate({"V": series_V(20)}, order=18)

Half-integer powers are square roots followed by an integer power.
"""
from __future__ import annotations

from fractions import Fraction

from .laurent import BiLaurent
from .series import NotInvertible, TSeries, TruncationError


class ExprError(ArithmeticError):
    """Evaluation failure, carrying the path of the failing sub-expression."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} (at {path})")
        self.path = path


class Expr:
    op = "?"

    def __init__(self, *args):
        self.args = args

    # construction
    def __add__(self, other):
        return Node("add", self, wrap(other))

    def __radd__(self, other):
        return Node("add", wrap(other), self)

    def __sub__(self, other):
        return Node("sub", self, wrap(other))

    def __rsub__(self, other):
        return Node("sub", wrap(other), self)

    def __mul__(self, other):
        return Node("mul", self, wrap(other))

    def __rmul__(self, other):
        return Node("mul", wrap(other), self)

    def __truediv__(self, other):
        return Node("div", self, wrap(other))

    def __rtruediv__(self, other):
        return Node("div", wrap(other), self)

    def __neg__(self):
        return Node("sub", Const(0), self)

    def __pow__(self, k):
        k = Fraction(k)
        if k.denominator == 1:
            return Node("pow", self, int(k))
        if k.denominator == 2:
            return Node("pow", Node("sqrt", self), int(k.numerator))
        raise ValueError("only integer and half-integer powers are supported")

    def sqrt(self):
        return Node("sqrt", self)

    def leaves(self) -> set:
        out = set()
        for a in self.args:
            if isinstance(a, Expr):
                out |= a.leaves()
        return out

    def evaluate(self, bindings: dict, order: int | None = None) -> TSeries:
        """Evaluate exactly; ``order`` truncates the result at t^order (exclusive)."""
        missing = self.leaves() - set(bindings)
        if missing:
            raise ExprError(f"unbound leaves {sorted(missing)}", str(self))
        value = self._eval(bindings, "root")
        if order is not None:
            value = value.truncate_t(order)
        return value

    def _eval(self, bindings, path):
        raise NotImplementedError


class Leaf(Expr):
    op = "leaf"

    def __init__(self, name: str):
        super().__init__()
        self.name = name

    def leaves(self):
        return {self.name}

    def _eval(self, bindings, path):
        v = bindings[self.name]
        if isinstance(v, BiLaurent):
            return TSeries.const(v)
        return TSeries.coerce(v)

    def __str__(self):
        return self.name


class Const(Expr):
    op = "const"

    def __init__(self, value):
        super().__init__()
        self.value = value

    def _eval(self, bindings, path):
        if isinstance(self.value, TSeries):
            return self.value
        return TSeries.const(BiLaurent.coerce(self.value))

    def __str__(self):
        return str(self.value)


_SYM = {"add": "+", "sub": "-", "mul": "*", "div": "/"}


class Node(Expr):
    def __init__(self, op: str, *args):
        super().__init__(*args)
        self.op = op

    def _eval(self, bindings, path):
        here = f"{path}/{self.op}"
        if self.op in _SYM:
            a = self.args[0]._eval(bindings, here + "[0]")
            b = self.args[1]._eval(bindings, here + "[1]")
            try:
                if self.op == "add":
                    return a + b
                if self.op == "sub":
                    return a - b
                if self.op == "mul":
                    return a * b
                if b.is_zero():
                    raise NotInvertible("division by zero")
                return a / b
            except (NotInvertible, TruncationError) as exc:
                raise ExprError(str(exc), here) from exc
        a = self.args[0]._eval(bindings, here + "[0]")
        try:
            if self.op == "pow":
                return a ** self.args[1]
            if self.op == "sqrt":
                if a.is_zero():
                    return a
                return a.sqrt()
        except (NotInvertible, TruncationError) as exc:
            raise ExprError(str(exc), here) from exc
        raise ExprError(f"unknown node {self.op}", here)

    def __str__(self):
        if self.op in _SYM:
            return f"({self.args[0]} {_SYM[self.op]} {self.args[1]})"
        if self.op == "pow":
            return f"({self.args[0]})^{self.args[1]}"
        return f"sqrt({self.args[0]})"


def wrap(value) -> Expr:
    if isinstance(value, Expr):
        return value
    return Const(value)


def leaf(name: str) -> Leaf:
    return Leaf(name)


def sqrt(e) -> Expr:
    return wrap(e).sqrt()


def leaves(*names: str):
    return tuple(Leaf(n) for n in names)

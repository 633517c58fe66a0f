"""Function-style entry points to the exact series arithmetic.

The arithmetic itself lives in ``laurent`` (coefficients) and ``series``
(truncated t-series); these wrappers give it a flat, named interface.
"""
from __future__ import annotations

from .expr import Expr
from .laurent import BiLaurent, q_str, to_q
from .series import NotInvertible, TruncationError, TSeries

__all__ = ["BiLaurent", "TSeries", "NotInvertible", "TruncationError", "to_q", "q_str",
           "ts_mul", "ts_add", "ts_invert", "ts_sqrt", "ts_eval_expr", "ts_coeff"]


def ts_add(a: TSeries, b: TSeries) -> TSeries:
    return TSeries.coerce(a) + TSeries.coerce(b)


def ts_mul(a: TSeries, b: TSeries) -> TSeries:
    return TSeries.coerce(a) * TSeries.coerce(b)


def ts_invert(a: TSeries, rel_order: int | None = None) -> TSeries:
    """Inverse; exact inputs need ``rel_order`` (number of terms to produce)."""
    return TSeries.coerce(a).invert(rel_order)


def ts_sqrt(a: TSeries, rel_order: int | None = None) -> TSeries:
    return TSeries.coerce(a).sqrt(rel_order)


def ts_eval_expr(e: Expr, bindings: dict, order: int) -> TSeries:
    return e.evaluate(bindings, order)


def ts_coeff(a: TSeries, i: int, j: int, n):
    """Coefficient of x^i y^j t^n (n may be a fraction for ramified series)."""
    return a.coeff(i, j, n)

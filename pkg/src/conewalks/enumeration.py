"""Exact enumeration of lattice walks confined to a region, and the series built from counts.

Counting is a forward dynamic program over integer grids stored in numpy object
arrays, so every count is an exact Python integer.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from gmpy2 import mpq

from .laurent import BiLaurent, q_str, to_q
from .models import Model, StepSet, get_model
from .series import TSeries

REGIONS = ("three-quadrant", "quadrant", "full-plane")


class EnumerationError(ValueError):
    pass


def in_region(region: str, i: int, j: int) -> bool:
    if region == "three-quadrant":
        return i >= 0 or j >= 0
    if region == "quadrant":
        return i >= 0 and j >= 0
    if region == "full-plane":
        return True
    raise EnumerationError(f"unknown region {region!r}")


def step_allowed(region: str, p, q) -> bool:
    """A step p -> q is allowed when q lies in the region.

    In the three-quadrant cone the two diagonal jumps between (0,-1) and
    (-1,0), which cut across the missing quadrant, are forbidden as well.
    """
    if not in_region(region, *q):
        return False
    if region == "three-quadrant" and {tuple(p), tuple(q)} == {(0, -1), (-1, 0)}:
        return False
    return True


def _region_mask(region: str, radius: int) -> np.ndarray:
    idx = np.arange(-radius, radius + 1)
    ii, jj = np.meshgrid(idx, idx, indexing="ij")
    if region == "three-quadrant":
        return (ii >= 0) | (jj >= 0)
    if region == "quadrant":
        return (ii >= 0) & (jj >= 0)
    if region == "full-plane":
        return np.ones_like(ii, dtype=bool)
    raise EnumerationError(f"unknown region {region!r}")


@dataclass
class CountTable:
    """Counts c(n; i, j) for 0 <= n <= nmax.

    Layers are stored as integer grids of half-width ``radius`` centred at the
    origin and divided by ``scale`` on access (``scale`` clears the
    denominators of fractional start weights).  When layers are not kept, only
    the totals and the requested target sequences are available.
    """

    steps: StepSet
    region: str
    starts: tuple
    nmax: int
    radius: int
    scale: int
    layers: list | None
    totals: list
    targets: dict = field(default_factory=dict)
    model_name: str = ""

    def count(self, n: int, i: int, j: int):
        if not 0 <= n <= self.nmax:
            raise EnumerationError(f"n={n} outside 0..{self.nmax}")
        if (i, j) in self.targets:
            raw = self.targets[(i, j)][n]
        elif self.layers is None:
            raise EnumerationError("layers were not kept; request the endpoint as a target")
        else:
            r = self.radius
            if abs(i) > r or abs(j) > r:
                return 0
            raw = self.layers[n][i + r, j + r]
        return _scaled(raw, self.scale)

    def sequence(self, i: int, j: int) -> list:
        return [self.count(n, i, j) for n in range(self.nmax + 1)]

    def total(self, n: int):
        return _scaled(self.totals[n], self.scale)

    def total_sequence(self) -> list:
        return [self.total(n) for n in range(self.nmax + 1)]

    def nonzero(self, n: int):
        """Yield (i, j, count) for the nonzero counts of length n."""
        if self.layers is None:
            raise EnumerationError("layers were not kept")
        r = self.radius
        layer = self.layers[n]
        for a, b in zip(*np.nonzero(layer)):
            yield int(a) - r, int(b) - r, _scaled(layer[a, b], self.scale)

    def to_rows(self) -> list:
        rows = []
        for n in range(self.nmax + 1):
            for i, j, c in sorted(self.nonzero(n)):
                rows.append((n, i, j, c))
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "i", "j", "count"])
        for n, i, j, c in self.to_rows():
            writer.writerow([n, i, j, _fmt_count(c)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "model": self.model_name,
            "steps": sorted(list(s) for s in self.steps.steps),
            "region": self.region,
            "starts": [{"i": p[0], "j": p[1], "weight": q_str(w)} for p, w in self.starts],
            "nmax": self.nmax,
            "rows": [{"n": n, "i": i, "j": j, "count": _fmt_count(c)} for n, i, j, c in self.to_rows()],
        }


def _scaled(raw, scale):
    raw = int(raw)
    if scale == 1:
        return raw
    value = mpq(raw, scale)
    return int(value) if value.denominator == 1 else value


def _fmt_count(c) -> str:
    if isinstance(c, int):
        return str(c)
    return q_str(c)


def _normalize_starts(starts, region):
    if starts is None:
        starts = [((0, 0), 1)]
    out = []
    for item in starts:
        if len(item) == 2 and isinstance(item[0], (tuple, list)):
            (i, j), w = item
        else:
            i, j = item[0], item[1]
            w = item[2] if len(item) > 2 else 1
        w = to_q(w)
        if not in_region(region, i, j):
            raise EnumerationError(f"start point {(i, j)} is outside the region {region}")
        out.append(((int(i), int(j)), w))
    return tuple(out)


def count_walks(model, region: str = "three-quadrant", nmax: int = 10, starts=None,
                keep_layers: bool = True, targets=()) -> CountTable:
    """Count walks of length 0..nmax staying in ``region``.

    ``model`` is a catalog name, a Model or a StepSet.  ``starts`` is a list of
    ((i, j), weight) pairs, default a single start at the origin with weight 1.
    """
    if isinstance(model, StepSet):
        steps, name = model, ""
    else:
        m = get_model(model)
        steps, name = m.steps, m.name
    if region not in REGIONS:
        raise EnumerationError(f"unknown region {region!r}; expected one of {REGIONS}")
    if nmax < 0:
        raise EnumerationError("nmax must be nonnegative")
    starts = _normalize_starts(starts, region)
    scale = math.lcm(*[int(w.denominator) for _, w in starts])
    reach = max(max(abs(a), abs(b)) for a, b in steps.steps)
    offset = max(max(abs(i), abs(j)) for (i, j), _ in starts)
    radius = offset + reach * nmax
    size = 2 * radius + 1
    mask = _region_mask(region, radius)
    grid = np.zeros((size, size), dtype=object)
    for (i, j), w in starts:
        grid[i + radius, j + radius] += int(w * scale)
    targets = tuple(tuple(p) for p in targets)
    target_seqs = {p: [] for p in targets}
    layers = [] if keep_layers else None
    totals = []

    def record(g, width):
        lo, hi = radius - width, radius + width + 1
        window = g[lo:hi, lo:hi]
        totals.append(int(window.sum()))
        for p in targets:
            i, j = p
            target_seqs[p].append(int(g[i + radius, j + radius]) if abs(i) <= radius and abs(j) <= radius else 0)
        if layers is not None:
            layers.append(g.copy())

    record(grid, offset)
    for n in range(1, nmax + 1):
        width = min(radius, offset + reach * n)
        prev = offset + reach * (n - 1)
        new = np.zeros((size, size), dtype=object)
        lo, hi = radius - width, radius + width + 1
        for a, b in steps.steps:
            src = grid[radius - prev:radius + prev + 1, radius - prev:radius + prev + 1]
            new[radius - prev + a:radius + prev + 1 + a, radius - prev + b:radius + prev + 1 + b] += src
        if region == "three-quadrant" and radius >= 1:
            # no jump across the corner of the missing quadrant
            if (-1, 1) in steps.steps:
                new[radius - 1, radius] -= grid[radius, radius - 1]
            if (1, -1) in steps.steps:
                new[radius, radius - 1] -= grid[radius - 1, radius]
        sub = new[lo:hi, lo:hi]
        sub[~mask[lo:hi, lo:hi]] = 0
        grid = new
        record(grid, width)
    return CountTable(steps, region, starts, nmax, radius, scale, layers, totals, target_seqs, name)


@lru_cache(maxsize=64)
def _cached_table(model_name: str, region: str, nmax: int, starts: tuple, keep_layers: bool, targets: tuple):
    return count_walks(model_name, region, nmax, list(starts), keep_layers, targets)


def cached_count(model, region="three-quadrant", nmax=10, starts=None, keep_layers=True, targets=()):
    """Memoized count_walks for catalog models."""
    name = get_model(model).name
    key = tuple(((int(i), int(j)), str(to_q(w))) for (i, j), w in _normalize_starts(starts, region))
    return _cached_table(name, region, nmax, key, keep_layers, tuple(tuple(p) for p in targets))


def brute_force_count(steps: StepSet, region: str, n: int, start=(0, 0)) -> dict:
    """Enumerate every walk of length n explicitly and tally endpoints (small n only)."""
    tally: dict = {}

    def walk(p, remaining):
        if remaining == 0:
            tally[p] = tally.get(p, 0) + 1
            return
        for a, b in steps.steps:
            q = (p[0] + a, p[1] + b)
            if step_allowed(region, p, q):
                walk(q, remaining - 1)

    walk(tuple(start), n)
    return tally


# series assembled from counts

def assemble_series(table: CountTable, order: int | None = None) -> TSeries:
    """C(x, y; t) = sum over n < order of c(n; i, j) x^i y^j t^n."""
    avail = table.nmax + 1
    order = avail if order is None else min(order, avail)
    coeffs = []
    for n in range(order):
        coeffs.append(BiLaurent({(i, j): to_q(c) for i, j, c in table.nonzero(n)}, _trusted=True))
    return TSeries(coeffs, 0, order)


def generating_series(model, region="three-quadrant", order: int = 10, starts=None) -> TSeries:
    table = cached_count(model, region, order - 1, starts)
    return assemble_series(table, order)


@dataclass
class SplitSeries:
    """C = xbar U(xbar, xy) + D(xy) + ybar L(ybar, xy), with L = U for symmetric models."""

    U: TSeries
    D: TSeries
    L: TSeries
    kind: str

    def recompose(self) -> TSeries:
        return recompose(self.U, self.D, self.L, self.kind)


class SplitError(EnumerationError):
    pass


def split_UD(C: TSeries, kind: str = "symmetric") -> SplitSeries:
    """Split a three-quadrant series along the diagonal.

    kind 'symmetric' and 'asymmetric' use C = xbar U(xbar, xy) + D(xy) + ybar L(ybar, xy);
    kind 'half' uses C = xbar^2 U(xbar^2, xy) + D(xy) + ybar^2 U(ybar^2, xy).
    For the symmetric kinds the lower part must mirror the upper one.
    """
    ucs, dcs, lcs = [], [], []
    for c in C.coeffs:
        u, d, l = {}, {}, {}
        for (i, j), q in c.items():
            if i == j:
                d[(0, i)] = q
            elif j > i:
                if kind == "half":
                    if (j - i) % 2:
                        raise SplitError(f"odd offset term at {(i, j)} in a half split")
                    u[((j - i - 2) // 2, j)] = q
                else:
                    u[(j - i - 1, j)] = q
            else:
                if kind == "half":
                    if (i - j) % 2:
                        raise SplitError(f"odd offset term at {(i, j)} in a half split")
                    l[((i - j - 2) // 2, i)] = q
                else:
                    l[(i - j - 1, i)] = q
        ucs.append(BiLaurent(u, _trusted=True))
        dcs.append(BiLaurent(d, _trusted=True))
        lcs.append(BiLaurent(l, _trusted=True))
    U = TSeries(ucs, C.val, C.order, C.ram)
    D = TSeries(dcs, C.val, C.order, C.ram)
    L = TSeries(lcs, C.val, C.order, C.ram)
    if kind in ("symmetric", "half") and not (U - L).is_zero():
        n, i, j = (U - L).first_nonzero()
        raise SplitError(f"split failed: series is not symmetric (first mismatch t^{n} x^{i} y^{j})")
    if kind not in ("symmetric", "half", "asymmetric"):
        raise SplitError(f"unknown split kind {kind!r}")
    return SplitSeries(U, D, L, kind)


def recompose(U: TSeries, D: TSeries, L: TSeries, kind: str) -> TSeries:
    if kind == "half":
        upper = U.map_coeffs(lambda c: c.exponent_map(lambda a, b: (b - 2 * a - 2, b)))
        lower = L.map_coeffs(lambda c: c.exponent_map(lambda a, b: (b, b - 2 * a - 2)))
    else:
        upper = U.map_coeffs(lambda c: c.exponent_map(lambda a, b: (b - a - 1, b)))
        lower = L.map_coeffs(lambda c: c.exponent_map(lambda a, b: (b, b - a - 1)))
    diag = D.map_coeffs(lambda c: c.exponent_map(lambda a, b: (b, b)))
    return upper + diag + lower


# boundary specializations

def at_x0(F: TSeries) -> TSeries:
    """F(0, y): coefficient of x^0 (F must have no negative powers of x)."""
    lo, _ = F.x_range()
    if lo < 0:
        raise EnumerationError("F has negative powers of x; F(0, y) is undefined")
    return F.x_part(0)


def at_y0(F: TSeries) -> TSeries:
    return at_x0(F.swap()).swap()


def c_minus(C: TSeries, reflected: bool = False) -> TSeries:
    """C-(x) = sum over k > 0 of c(-k, 0) x^k; with reflected=True, C-(xbar)."""
    def pick(c: BiLaurent):
        terms = {}
        for (i, j), q in c.items():
            if j == 0 and i < 0:
                terms[(i if reflected else -i, 0)] = q
        return BiLaurent(terms, _trusted=True)
    return C.map_coeffs(pick)


def coefficient_series(F: TSeries, i: int, j: int) -> TSeries:
    """The scalar series [x^i y^j] F."""
    return F.map_coeffs(lambda c: BiLaurent.const(c.coeff(i, j)))


def at_one(F: TSeries) -> TSeries:
    return F.eval_x(1).eval_y(1)


def boundary_series(selector: str, C: TSeries | None = None, split: SplitSeries | None = None,
                    Qs: TSeries | None = None) -> TSeries:
    """Named specializations of C, its split parts or a quadrant series."""
    table = {
        "C-(x)": lambda: c_minus(C),
        "C-(xbar)": lambda: c_minus(C, reflected=True),
        "C00": lambda: coefficient_series(C, 0, 0),
        "C(1,1)": lambda: at_one(C),
        "U(x,0)": lambda: at_y0(split.U),
        "U(0,y)": lambda: at_x0(split.U),
        "U00": lambda: coefficient_series(split.U, 0, 0),
        "D(y)": lambda: split.D,
        "D0": lambda: coefficient_series(split.D, 0, 0),
        "Q(x,0)": lambda: at_y0(Qs),
        "Q(0,y)": lambda: at_x0(Qs),
        "Q00": lambda: coefficient_series(Qs, 0, 0),
        "Q01": lambda: coefficient_series(Qs, 0, 1),
        "Q(1,1)": lambda: at_one(Qs),
    }
    if selector not in table:
        raise EnumerationError(f"unknown selector {selector!r}; known: {', '.join(table)}")
    try:
        return table[selector]()
    except AttributeError as exc:
        raise EnumerationError(f"selector {selector!r} needs more input ({exc})") from None


# the symmetrized series A of the simple and diagonal models

A_STARTS = (((0, 0), Fraction(2, 3)), ((-2, 0), Fraction(1, 3)), ((0, -2), Fraction(1, 3)))


def series_A(model, order: int, route: str = "walks") -> TSeries:
    """A = C - (Q - xbar^2 Q(xbar, y) - ybar^2 Q(x, ybar)) / 3 for the simple or diagonal model.

    route 'walks' counts weighted walks from (0,0), (-2,0), (0,-2) in the
    three-quadrant cone; route 'quadrant' uses the formula with the quadrant
    series Q of the same model.
    """
    m = get_model(model)
    if m.name not in ("simple", "diagonal"):
        raise EnumerationError("A is defined for the simple and diagonal models")
    if route == "walks":
        table = cached_count(m.name, "three-quadrant", order - 1, starts=list(A_STARTS))
        return assemble_series(table, order)
    if route == "quadrant":
        C = generating_series(m.name, "three-quadrant", order)
        Qs = generating_series(m.name, "quadrant", order)
        Qxb = Qs.map_coeffs(lambda c: c.exponent_map(lambda i, j: (-i, j))).map_coeffs(
            lambda c: c.shift(-2, 0))
        Qyb = Qs.map_coeffs(lambda c: c.exponent_map(lambda i, j: (i, -j))).map_coeffs(
            lambda c: c.shift(0, -2))
        return C - (Qs - Qxb - Qyb).scale(Fraction(1, 3))
    raise EnumerationError(f"unknown route {route!r}")


def series_json(F: TSeries) -> str:
    return json.dumps(F.to_json())

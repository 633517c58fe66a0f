"""Step sets, the model catalog, companion models, kernels and discriminants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import BiLaurent, laurent_sum
from .series import TSeries, T, laurent

E, W, N, S = (1, 0), (-1, 0), (0, 1), (0, -1)
NE, NW, SW, SE = (1, 1), (-1, 1), (-1, -1), (1, -1)

ARROWS = {E: "→", W: "←", N: "↑", S: "↓", NE: "↗", NW: "↖", SW: "↙", SE: "↘"}


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class StepSet:
    steps: frozenset

    @classmethod
    def of(cls, steps) -> StepSet:
        steps = frozenset((int(a), int(b)) for a, b in steps)
        if not steps:
            raise ModelError("empty step set")
        if (0, 0) in steps:
            raise ModelError("the zero step is not allowed")
        return cls(steps)

    def __iter__(self):
        return iter(sorted(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __contains__(self, step) -> bool:
        return tuple(step) in self.steps

    def is_small(self) -> bool:
        return all(abs(a) <= 1 and abs(b) <= 1 for a, b in self.steps)

    def is_symmetric(self) -> bool:
        return all((b, a) in self.steps for a, b in self.steps)

    def poly(self) -> BiLaurent:
        """The step polynomial S(x, y)."""
        return laurent_sum(BiLaurent.monomial(a, b) for a, b in self.steps)

    def arrows(self) -> str:
        return "".join(ARROWS.get(s, str(s)) for s in sorted(self.steps))

    def mirrored(self) -> StepSet:
        return StepSet.of((b, a) for a, b in self.steps)


@dataclass(frozen=True)
class Splits:
    """S = ybar*H-(x) + H0(x) + y*H+(x) = xbar*V-(y) + V0(y) + x*V+(y)."""

    H_minus: BiLaurent
    H_zero: BiLaurent
    H_plus: BiLaurent
    V_minus: BiLaurent
    V_zero: BiLaurent
    V_plus: BiLaurent


def splits(steps: StepSet) -> Splits:
    if not steps.is_small():
        raise ModelError("splits are defined for small steps only")
    h = {k: BiLaurent() for k in (-1, 0, 1)}
    v = {k: BiLaurent() for k in (-1, 0, 1)}
    for a, b in steps.steps:
        h[b] = h[b] + BiLaurent.x(a)
        v[a] = v[a] + BiLaurent.y(b)
    return Splits(h[-1], h[0], h[1], v[-1], v[0], v[1])


def companion_steps(steps: StepSet, kind: str = "standard") -> StepSet:
    """Steps of S(xbar, x*y), or of S(sqrt(xbar), sqrt(x)*y) for kind='half'."""
    out = []
    for i, j in steps.steps:
        if kind == "standard":
            out.append((j - i, j))
        elif kind == "half":
            if (j - i) % 2:
                raise ModelError("half-step companion needs i + j even for every step")
            out.append(((j - i) // 2, j))
        else:
            raise ModelError(f"unknown companion kind {kind!r}")
    return StepSet.of(out)


@dataclass(frozen=True)
class Model:
    name: str
    steps: StepSet
    split: str = "symmetric"  # symmetric | half | asymmetric
    label: str = ""
    aliases: tuple = field(default_factory=tuple)

    @property
    def companion_kind(self) -> str:
        return "half" if self.split == "half" else "standard"

    @property
    def companion(self) -> StepSet:
        return companion_steps(self.steps, self.companion_kind)

    def kernel(self) -> TSeries:
        return kernel(self.steps)

    def companion_kernel(self) -> TSeries:
        return kernel(self.companion)


def _m(name, steps, split="symmetric", label="", aliases=()):
    return Model(name, StepSet.of(steps), split, label, tuple(aliases))


CATALOG = {
    m.name: m
    for m in [
        _m("kreweras", [NE, W, S], label="Kreweras", aliases=("K",)),
        _m("reverse-kreweras", [E, N, SW], label="reverse Kreweras", aliases=("RK",)),
        _m("double-kreweras", [NE, W, S, E, N, SW], label="double Kreweras", aliases=("DK",)),
        _m("simple", [E, W, N, S], label="simple walks", aliases=("SIMPLE",)),
        _m("diagonal", [NE, NW, SW, SE], split="half", label="diagonal walks", aliases=("DIAG",)),
        _m("m6", [E, N, W, S, NE], label="model 6", aliases=("DA",)),
        _m("m7", [S, NE, W, SW], label="model 7"),
        _m("m8", [NE, N, SW, E], label="model 8"),
        _m("m9", [S, W, N, SW, E], label="model 9"),
        _m("gessel", [E, W, NE, SW], label="Gessel walks"),
        _m("gessel-reflected", [N, NE, S, SW], label="reflected Gessel walks"),
        _m("scarecrow", [NE, NW, W, S, SE], label="scarecrow model"),
        _m("gessel-asymmetric", [E, W, NE, SW], split="asymmetric",
           label="Gessel walks, asymmetric split"),
    ]
}

# the symmetric models studied in the cone, with their companions
CONE_MODELS = ["kreweras", "reverse-kreweras", "double-kreweras", "simple", "diagonal",
          "m6", "m7", "m8", "m9"]
FINITE_GROUP = ["kreweras", "reverse-kreweras", "double-kreweras", "simple", "diagonal"]
INFINITE_GROUP = ["m6", "m7", "m8", "m9"]

_ALIASES = {}
for _model in CATALOG.values():
    for _a in _model.aliases:
        _ALIASES[_a.lower()] = _model.name


def get_model(name) -> Model:
    if isinstance(name, Model):
        return name
    key = str(name).strip()
    if key in CATALOG:
        return CATALOG[key]
    alias = _ALIASES.get(key.lower())
    if alias:
        return CATALOG[alias]
    raise ModelError(f"unknown model {name!r}; known: {', '.join(CATALOG)}")


def model_names() -> list:
    return list(CATALOG)


def kernel(steps: StepSet) -> TSeries:
    """1 - t*S(x, y) as an exact series."""
    return 1 - T() * laurent(steps.poly())


def delta(steps: StepSet) -> TSeries:
    """Discriminant (1 - t*V0(y))^2 - 4 t^2 V-(y) V+(y) in y."""
    sp = splits(steps)
    t = T()
    return (1 - t * laurent(sp.V_zero)) ** 2 - 4 * t * t * laurent(sp.V_minus * sp.V_plus)


def mixed_term(steps: StepSet) -> TSeries:
    """t*V0(y) + 2*t*x*V+(y) - 1."""
    sp = splits(steps)
    t = T()
    return t * laurent(sp.V_zero) + 2 * t * laurent(BiLaurent.x() * sp.V_plus) - 1


def square_lemma_residual(steps: StepSet) -> TSeries:
    """(tV0 + 2txV+ - 1)^2 - (Delta(y) - 4 t x V+(y) K(x, y)); exact, so zero means proven."""
    sp = splits(steps)
    t = T()
    lhs = mixed_term(steps) ** 2
    rhs = delta(steps) - 4 * t * laurent(BiLaurent.x() * sp.V_plus) * kernel(steps)
    return lhs - rhs


def model_info(name) -> dict:
    m = get_model(name)
    info = {
        "name": m.name,
        "label": m.label,
        "steps": sorted(list(s) for s in m.steps.steps),
        "arrows": m.steps.arrows(),
        "symmetric": m.steps.is_symmetric(),
        "split": m.split,
        "companion": sorted(list(s) for s in m.companion.steps),
        "companion_small": m.companion.is_small(),
    }
    return info


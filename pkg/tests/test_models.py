import pytest

from conewalks.laurent import BiLaurent
from conewalks.models import (CATALOG, ModelError, StepSet, companion_steps, delta, get_model,
                              square_lemma_residual, splits)
from conewalks.series import T, laurent

x, y = BiLaurent.x(), BiLaurent.y()
xb, yb = BiLaurent.x(-1), BiLaurent.y(-1)
t = T()


def steps(*pts):
    return StepSet.of(pts)


def test_kreweras_companion_is_reverse_kreweras():
    assert get_model("kreweras").companion == get_model("reverse-kreweras").steps


def test_double_kreweras_is_fixed():
    dk = get_model("double-kreweras")
    assert dk.companion == dk.steps


def test_diagonal_half_companion():
    assert get_model("diagonal").companion == steps((1, 1), (0, 1), (-1, -1), (0, -1))


def test_companion_is_an_involution_on_kreweras():
    k = get_model("kreweras").steps
    assert companion_steps(companion_steps(k)) == k


def test_half_companion_needs_even_offsets():
    with pytest.raises(ModelError):
        companion_steps(get_model("simple").steps, "half")


def test_splits_read_off_monomials():
    sp = splits(get_model("reverse-kreweras").steps)
    # reverse Kreweras x + y + xbar ybar: rows by power of y
    assert sp.H_minus == xb
    assert sp.H_zero == x
    assert sp.H_plus == BiLaurent.const(1)
    sp = splits(get_model("kreweras").steps)
    assert (sp.H_minus, sp.H_zero, sp.H_plus) == (BiLaurent.const(1), xb, x)


def test_m6_companion_vertical_split():
    sp = splits(get_model("m6").companion)
    assert sp.V_plus == BiLaurent.const(1) + y


@pytest.mark.parametrize("name", list(CATALOG))
def test_splits_recompose(name):
    S = get_model(name).steps
    sp = splits(S)
    assert yb * sp.H_minus + sp.H_zero + y * sp.H_plus == S.poly()
    assert xb * sp.V_minus + sp.V_zero + x * sp.V_plus == S.poly()


def test_kreweras_companion_delta():
    want = (1 - t * laurent(y)) ** 2 - 4 * t * t * laurent(yb)
    assert (delta(get_model("reverse-kreweras").steps) - want).is_zero()


def test_da_companion_delta():
    want = (1 - t * laurent(y)) ** 2 - 4 * t * t * laurent(yb * (1 + y) * (1 + y))
    assert (delta(get_model("m6").companion) - want).is_zero()


@pytest.mark.parametrize("name", list(CATALOG))
def test_square_lemma_identity(name):
    # exact polynomial identity, both on the model and on its companion
    m = get_model(name)
    assert square_lemma_residual(m.steps).is_zero()
    if m.companion.is_small():
        assert square_lemma_residual(m.companion).is_zero()


def test_catalog_step_sets():
    assert len(CATALOG) == 13
    assert get_model("kreweras").steps == steps((1, 1), (-1, 0), (0, -1))
    assert get_model("simple").steps == steps((1, 0), (-1, 0), (0, 1), (0, -1))
    assert len(get_model("double-kreweras").steps) == 6
    assert get_model("K") is get_model("kreweras")


def test_symmetry_flags():
    for name in ("kreweras", "reverse-kreweras", "double-kreweras", "simple", "diagonal", "m6"):
        assert get_model(name).steps.is_symmetric()
    assert not get_model("gessel").steps.is_symmetric()


def test_bad_step_sets():
    with pytest.raises(ModelError):
        get_model("no-such-model")
    with pytest.raises(ModelError):
        StepSet.of([])
    with pytest.raises(ModelError):
        StepSet.of([(0, 0), (1, 0)])
    with pytest.raises(ModelError):
        splits(steps((2, 0), (-1, 0)))

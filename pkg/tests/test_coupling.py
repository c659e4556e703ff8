import random

import pytest

from sonj.coupling import (
    CouplingLabels,
    SqrtRational,
    Triad,
    UndefinedBySelectionRules,
    c_alpha,
    canonical_representative,
    dim,
    g_reduced,
    i_alpha,
    selection_ok,
    sixj,
    sixj_squared,
    symmetry_orbit,
    threej_squared,
)
from sonj.poly import PolyN, RatFuncN, ratfunc_eval
from sonj.rational import Rat

n = PolyN.var()


def test_dim():
    assert dim(0) == RatFuncN.const(1)
    assert dim(1) == RatFuncN.from_poly(n)
    assert dim(2) == (n - 1) * (n + 2) / 2
    for l in range(8):
        assert dim(l, 3) == 2 * l + 1
        assert dim(l, 2) == (1 if l == 0 else 2)
        assert dim(l, 5) == ratfunc_eval(dim(l), 5)


def test_selection():
    assert selection_ok((1, 1, 2))
    assert not selection_ok((1, 1, 1))    # odd perimeter
    assert not selection_ok((1, 1, 4))    # triangle violated
    assert selection_ok(Triad(0, 0, 0))


def test_threej_squared_selection_zero():
    assert threej_squared((1, 1, 1)) == RatFuncN.const(0)
    assert threej_squared((1, 1, 4), n=5) == 0


def test_threej_squared_values():
    # (1,1,2): 2(n-1)/(n(n+2)) * 1/d2... fixed spot values at n=3 from the
    # classical symbol: (1 1 2; 0 0 0)^2 = 2/15
    assert threej_squared((1, 1, 2), n=3) == Rat(2, 15)
    assert threej_squared((0, 0, 0)) == RatFuncN.const(1)
    assert threej_squared((0, 2, 2), n=3) == Rat(1, 5)  # 1/d2 at n=3


def test_threej_shift_is_dimension_shift():
    for t in ((1, 1, 2), (2, 2, 2), (1, 2, 3), (2, 3, 3)):
        base = threej_squared(t)
        shifted = threej_squared(t, shift=2)
        for nval in (3, 5, 8):
            assert ratfunc_eval(shifted, nval) == ratfunc_eval(base, nval + 2)
        assert threej_squared(t, shift=2, n=5) == ratfunc_eval(base, 7)


def test_threej_mode_consistency():
    for t in ((1, 1, 2), (2, 2, 2), (1, 2, 3), (3, 3, 4), (2, 4, 4)):
        sym = threej_squared(t)
        for nval in range(2, 9):
            assert threej_squared(t, n=nval) == ratfunc_eval(sym, nval)


def test_g_reduced_symmetry_and_modes():
    for j1, j2, j3, m in ((2, 2, 2, 1), (4, 3, 3, 2), (2, 4, 2, 0), (3, 3, 2, 2)):
        sym = g_reduced(j1, j2, j3, m)
        assert sym == g_reduced(j1, j3, j2, m)
        for nval in (3, 5, 7):
            assert g_reduced(j1, j2, j3, m, nval) == ratfunc_eval(sym, nval)
    assert g_reduced(1, 2, 2, 0) == RatFuncN.const(0)  # odd parity


def test_i_alpha_spot_values():
    assert i_alpha(CouplingLabels(1, 1, 2, 1, 1, 2), 3) == Rat(2, 3375)
    assert i_alpha(CouplingLabels(2, 2, 2, 2, 2, 2), 3) == Rat(-6, 42875)


def test_i_alpha_symbolic_spot():
    got = i_alpha(CouplingLabels(1, 1, 2, 1, 1, 2))
    assert got == 4 * (n - 2) / ((n - 1) * n**3 * (n + 2) ** 3)
    got = i_alpha(CouplingLabels(2, 2, 2, 2, 2, 2))
    want = (
        64 * (n - 2) * (n**2 + 4 * n - 24)
        / ((n - 1) ** 5 * (n + 2) ** 3 * (n + 4) ** 3)
    )
    assert got == want


def test_i_alpha_mode_consistency():
    for t in ((1, 1, 2, 1, 1, 2), (1, 2, 3, 2, 3, 2), (2, 2, 2, 2, 2, 2),
              (1, 2, 3, 4, 3, 2), (2, 2, 4, 2, 2, 4)):
        sym = i_alpha(CouplingLabels(*t))
        for nval in range(2, 9):
            assert i_alpha(CouplingLabels(*t), nval) == ratfunc_eval(sym, nval)


def test_i_alpha_selection_zero():
    assert i_alpha(CouplingLabels(1, 1, 1, 1, 1, 1)) == RatFuncN.const(0)
    assert i_alpha(CouplingLabels(1, 1, 2, 1, 1, 4), 5) == 0


def test_i_alpha_rejects_bad_n():
    with pytest.raises(ValueError):
        i_alpha(CouplingLabels(1, 1, 2, 1, 1, 2), 1)
    with pytest.raises(ValueError):
        dim(1, 0)


def test_c_alpha_is_product_of_dims_times_i():
    for t in ((1, 1, 2, 1, 1, 2), (2, 2, 2, 2, 2, 2), (1, 2, 3, 2, 3, 2)):
        lab = CouplingLabels(*t)
        want = i_alpha(lab)
        for l in t:
            want = want * dim(l)
        assert c_alpha(lab) == want
        assert c_alpha(lab, 4) == ratfunc_eval(want, 4)


def test_l4_zero_closed_form():
    # with the opposite column closed by a zero label, the integral collapses
    # to the 3j-square over the two spectator dimensions
    for l1, l2, l3 in ((1, 1, 2), (2, 2, 2), (1, 2, 3), (2, 3, 3)):
        lab = CouplingLabels(l1, l2, l3, 0, l3, l2)
        assert i_alpha(lab) == threej_squared((l1, l2, l3)) / (dim(l2) * dim(l3))


def test_sixj_footnote_identity():
    for l1, l2, l3 in ((1, 1, 2), (2, 2, 2), (1, 2, 3)):
        lab = CouplingLabels(l1, l2, l3, 0, l3, l2)
        for nval in (3, 5, 8):
            val = sixj(lab, nval)
            assert val.sign == 1
            assert val.radicand == 1 / (dim(l2, nval) * dim(l3, nval))


def test_sixj_values_and_modes():
    val = sixj(CouplingLabels(1, 1, 2, 1, 1, 2), 3)
    assert val.exact() == Rat(1, 30)
    sq = sixj_squared(CouplingLabels(1, 1, 2, 1, 1, 2))
    assert ratfunc_eval(sq, 3) == Rat(1, 900)
    assert sixj_squared(CouplingLabels(1, 1, 2, 1, 1, 2), 3) == Rat(1, 900)


def test_sixj_undefined_exits():
    with pytest.raises(UndefinedBySelectionRules):
        sixj(CouplingLabels(1, 1, 1, 1, 1, 1), 3)
    with pytest.raises(ValueError):
        sixj(CouplingLabels(1, 1, 2, 1, 1, 2), None)


def test_sqrt_rational_invariants():
    assert SqrtRational.zero().sign == 0
    with pytest.raises(ValueError):
        SqrtRational(1, Rat(0))
    with pytest.raises(ValueError):
        SqrtRational(2, Rat(1))
    v = SqrtRational(-1, Rat(4, 9))
    assert v.exact() == Rat(-2, 3)
    assert abs(float(v) + 2 / 3) < 1e-15


def test_symmetry_orbit_structure():
    rng = random.Random(5)
    for _ in range(40):
        t = tuple(rng.randrange(5) for _ in range(6))
        orbit = symmetry_orbit(t)
        assert 24 % len(orbit) == 0
        rep = canonical_representative(t)
        for member in orbit:
            assert symmetry_orbit(member) == orbit
            assert canonical_representative(member) == rep
        assert rep == min(o.astuple() for o in orbit)


def test_symmetry_invariance_symbolic():
    for t in ((1, 1, 2, 1, 3, 2), (1, 2, 3, 2, 3, 4), (2, 2, 2, 2, 2, 4)):
        ref = i_alpha(CouplingLabels(*t))
        for member in symmetry_orbit(t):
            assert i_alpha(member) == ref

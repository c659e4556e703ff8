import random

import mpmath
import pytest

from sonj.gammaalg import (
    GammaKey,
    GammaProduct,
    GammaResidueError,
    gp_from_factorial_shift,
    gp_reduce,
)
from sonj.poly import PolyN, RatFuncN
from sonj.rational import HALF, Rat
from sonj.poly import ratfunc_eval

n = PolyN.var()


def test_key_validation():
    GammaKey(1, -3)
    GammaKey(HALF, Rat(1, 2))
    GammaKey(0, Rat(1, 2))
    with pytest.raises(ValueError):
        GammaKey(2, 0)
    with pytest.raises(ValueError):
        GammaKey(1, Rat(1, 3))


def test_factor_merging():
    gp = GammaProduct(factors=((GammaKey(1, 0), 1), (GammaKey(1, 0), -1)))
    assert gp.factors == ()
    gp = GammaProduct.gamma(1, 1) * GammaProduct.gamma(1, 1, -1)
    assert gp == GammaProduct.identity()


def test_simple_telescopes():
    # Gamma(n+1)/Gamma(n) = n
    gp = gp_from_factorial_shift(0, 1, 1)
    assert gp_reduce(gp) == RatFuncN.from_poly(n)
    # Gamma(n+3)/Gamma(n) = n(n+1)(n+2)
    gp = gp_from_factorial_shift(0, 1, 3)
    assert gp_reduce(gp) == RatFuncN.from_poly(n * (n + 1) * (n + 2))
    # Gamma(n/2+1)/Gamma(n/2) = n/2
    gp = gp_from_factorial_shift(0, HALF, 1)
    assert gp_reduce(gp) == n / 2
    # Gamma(n)/Gamma(n+1) * Gamma(n)/Gamma(n-1) = (n-1)/n
    gp = gp_from_factorial_shift(0, 1, 1) ** -1 * gp_from_factorial_shift(-1, 1, 1)
    assert gp_reduce(gp) == (n - 1) / n


def test_constant_gammas_are_factorials():
    gp = GammaProduct.gamma(0, 5)  # Gamma(5) = 24
    assert gp_reduce(gp) == RatFuncN.const(24)
    # Gamma(7/2)/Gamma(1/2) = (1/2)(3/2)(5/2)
    gp = GammaProduct.gamma(0, Rat(7, 2)) * GammaProduct.gamma(0, Rat(1, 2), -1)
    assert gp_reduce(gp) == RatFuncN.const(Rat(15, 8))


def test_residue_error():
    with pytest.raises(GammaResidueError) as exc:
        gp_reduce(GammaProduct.gamma(1, 0))
    assert exc.value.residue == ((GammaKey(1, 0), 1),)
    # half-integer constants must cancel among themselves (sqrt pi survives)
    with pytest.raises(GammaResidueError):
        gp_reduce(GammaProduct.gamma(0, Rat(1, 2)))
    # non-positive integer argument gammas cannot be evaluated
    with pytest.raises(GammaResidueError):
        gp_reduce(GammaProduct.gamma(0, 0) * GammaProduct.gamma(0, 1, -1))


def rand_balanced(rng):
    """Random product whose exponents cancel within each (a, b mod 1) class."""
    gp = GammaProduct.identity()
    for a, frac in ((Rat(1), 0), (Rat(1), HALF), (HALF, 0), (HALF, HALF)):
        for _ in range(rng.randrange(3)):
            b1 = frac + rng.randrange(-3, 6)
            b2 = frac + rng.randrange(-3, 6)
            e = rng.randrange(1, 3)
            gp *= GammaProduct.gamma(a, b1, e) * GammaProduct.gamma(a, b2, -e)
    return gp


def test_reduce_is_multiplicative():
    rng = random.Random(21)
    for _ in range(100):
        x, y = rand_balanced(rng), rand_balanced(rng)
        assert gp_reduce(x * y) == gp_reduce(x) * gp_reduce(y)


def test_reduce_order_invariant():
    rng = random.Random(22)
    for _ in range(50):
        parts = [rand_balanced(rng) for _ in range(4)]
        prod1 = GammaProduct.identity()
        for p in parts:
            prod1 *= p
        rng.shuffle(parts)
        prod2 = GammaProduct.identity()
        for p in parts:
            prod2 *= p
        assert gp_reduce(prod1) == gp_reduce(prod2)


def mp_value(gp, nval):
    with mpmath.workdps(60):
        v = mpmath.mpf(1)
        for k, e in gp.factors:
            v *= mpmath.gamma(mpmath.mpf(str(k.a)) * nval + mpmath.mpf(str(k.b))) ** e
        pref = ratfunc_eval(gp.prefactor, nval)
        v *= mpmath.mpf(int(pref.numerator)) / mpmath.mpf(int(pref.denominator))
        return v


def test_numeric_cross_check():
    rng = random.Random(23)
    for _ in range(40):
        gp = rand_balanced(rng)
        f = gp_reduce(gp)
        # points past every pole of the reduced form (offsets reach -3)
        for nval in (11, 13, 17):
            exact = ratfunc_eval(f, nval)
            with mpmath.workdps(60):
                want = mp_value(gp, nval)
                got = mpmath.mpf(int(exact.numerator)) / mpmath.mpf(int(exact.denominator))
                assert abs(got - want) <= mpmath.mpf(10) ** -20 * (1 + abs(want))

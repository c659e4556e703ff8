import json
import math
import random

import pytest

from sonj.poly import (
    PoleError,
    PolyN,
    RatFuncN,
    ZeroDenominatorError,
    factor_for_display,
    format_factored,
    pochhammer_poly,
    poly_gcd,
    ratfunc_eval,
    ratfunc_normalize,
)
from sonj.rational import Rat, as_rat

n = PolyN.var()


def rand_poly(rng, maxdeg=5, span=8):
    deg = rng.randrange(maxdeg + 1)
    return PolyN([Rat(rng.randrange(-span, span + 1)) for _ in range(deg + 1)])


def test_poly_basics():
    p = (n - 1) * (n + 2)
    assert p.coeffs == (as_rat(-2), as_rat(1), as_rat(1))
    assert p.degree == 2
    assert p(3) == 10
    assert (p - p).is_zero()
    assert PolyN.const(0).degree == -1


def test_poly_divmod_identity():
    rng = random.Random(11)
    for _ in range(200):
        a = rand_poly(rng)
        b = rand_poly(rng)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_poly_gcd_divides_both():
    rng = random.Random(12)
    for _ in range(100):
        g = rand_poly(rng, maxdeg=2)
        a = rand_poly(rng, maxdeg=3) * g
        b = rand_poly(rng, maxdeg=3) * g
        if a.is_zero() or b.is_zero():
            continue
        d = poly_gcd(a, b)
        assert (a % d).is_zero() and (b % d).is_zero()
        if not g.is_zero():
            assert (d % g.monic()).is_zero()


def test_pochhammer_poly():
    # (n+1)(n+2)(n+3) and the half-step ladder (n/2)(n/2+1)
    assert pochhammer_poly(1, 3) == (n + 1) * (n + 2) * (n + 3)
    assert pochhammer_poly(0, 2, Rat(1, 2)) == PolyN.linear(Rat(1, 2), 0) * PolyN.linear(
        Rat(1, 2), 1
    )
    assert pochhammer_poly(5, 0) == PolyN.const(1)


def canonical_ok(f):
    # coprime over Q, integer coefficients with coprime contents,
    # positive denominator leading coefficient
    if f.num.is_zero():
        return f.den == PolyN.const(1)
    if poly_gcd(f.num, f.den).degree > 0:
        return False
    cn, cd = f.num.content(), f.den.content()
    ints = all(c.denominator == 1 for c in f.num.coeffs + f.den.coeffs)
    return ints and math.gcd(int(cn.numerator), int(cd.numerator)) == 1 and f.den.leading() > 0


def test_ratfunc_canonical_form():
    rng = random.Random(13)
    for _ in range(200):
        a, b = rand_poly(rng), rand_poly(rng)
        if b.is_zero():
            continue
        f = ratfunc_normalize(a, b)
        assert canonical_ok(f)
        # same value at a non-pole sample point
        for x in (2, 3, Rat(7, 2)):
            if b(x):
                assert ratfunc_eval(f, x) == a(x) / b(x)


def test_ratfunc_arithmetic():
    f = (n - 2) / ((n - 1) * n)
    g = 1 / (n * (n + 1))
    h = f * g / f
    assert h == g
    assert f + g == ((n - 2) * (n + 1) + (n - 1)) / ((n - 1) * n * (n + 1))
    assert f - f == RatFuncN.const(0)
    assert f**0 == RatFuncN.const(1)
    assert f**-2 == ((n - 1) * n) ** 2 / (n - 2) ** 2


def test_ratfunc_normalize_sign_and_content():
    f = ratfunc_normalize(PolyN([Rat(2)]), PolyN([Rat(0), Rat(-4)]))
    assert f == ratfunc_normalize(PolyN.const(-1), 2 * n)
    assert f.den.leading() > 0
    # non-integer inputs are rescaled, not rejected
    g = ratfunc_normalize(PolyN([Rat(1, 2)]), n + 1)
    assert g.num == PolyN.const(1) and g.den == 2 * (n + 1)


def test_zero_denominator_and_pole():
    with pytest.raises(ZeroDenominatorError):
        ratfunc_normalize(n, PolyN())
    f = 1 / (n - 3)
    with pytest.raises(PoleError):
        ratfunc_eval(f, 3)
    assert ratfunc_eval(f, 5) == Rat(1, 2)


def test_json_round_trip():
    rng = random.Random(14)
    for _ in range(50):
        a, b = rand_poly(rng), rand_poly(rng)
        if b.is_zero():
            continue
        f = ratfunc_normalize(a, b)
        blob = json.dumps(f.to_json())
        assert RatFuncN.from_json(json.loads(blob)) == f


def test_factor_for_display_reconstructs():
    rng = random.Random(15)
    for _ in range(60):
        p = rand_poly(rng, maxdeg=4)
        if p.is_zero():
            continue
        prod = PolyN.const(1)
        for f, e in factor_for_display(p):
            prod = prod * f**e
        assert prod == p


def test_format_factored_examples():
    f = 4 * (n - 2) / ((n - 1) * n**3 * (n + 2) ** 3)
    assert format_factored(f) == "4*(n - 2)/((n - 1)*n^3*(n + 2)^3)"
    assert format_factored(RatFuncN.const(0)) == "0"
    assert format_factored(RatFuncN.const(1)) == "1"
    g = (n**2 + 4 * n - 24) / (n + 4)
    assert format_factored(g) == "(n^2 + 4*n - 24)/(n + 4)"

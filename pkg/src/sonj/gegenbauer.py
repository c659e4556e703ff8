"""Exact Gegenbauer polynomial machinery.

Coefficients come from the standard three-term recurrence at an exact
rational order.  The module also houses the addition-theorem coefficient
a(n, l, m), the recurrence-iteration coefficient b(n, j, k, m) and the exact
weighted integrals used by the verification oracles.  Polynomials of
negative degree are identically zero by convention, and the zero value is
returned rather than an error being raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import kernel
from .gammaalg import GammaKey, GammaProduct, gp_reduce
from .poly import PolyN, RatFuncN, ratfunc_normalize
from .rational import HALF, ONE, Rat, ZERO, as_rat, factorial, is_integer, poch, to_int

__all__ = [
    "GegenbauerPoly",
    "PiRational",
    "gegenbauer_coeffs",
    "addition_coeff_a",
    "reduction_coeff_b",
    "weight_integral",
    "triple_product_integral_exact",
]


@dataclass(frozen=True)
class GegenbauerPoly:
    """C_j^lambda as an exact coefficient list in x (ascending)."""

    degree: int
    order: object
    coeffs: tuple

    def __call__(self, x):
        return kernel.eval_(list(self.coeffs), as_rat(x))


@lru_cache(maxsize=None)
def _geg_coeffs(j, lam):
    if j < 0:
        return ()
    if j == 0:
        return (ONE,)
    if j == 1:
        return (ZERO, 2 * lam)
    prev2 = _geg_coeffs(j - 2, lam)
    prev1 = _geg_coeffs(j - 1, lam)
    # j C_j = 2 x (j - 1 + lam) C_{j-1} - (j - 2 + 2 lam) C_{j-2}
    t1 = kernel.scale([ZERO] + list(prev1), 2 * (j - 1 + lam))
    t2 = kernel.scale(list(prev2), j - 2 + 2 * lam)
    return tuple(kernel.scale(kernel.sub(t1, t2), Rat(1, j)))


def gegenbauer_coeffs(j, lam):
    """C_j^lam by the three-term recurrence; zero for negative degree."""
    lam = as_rat(lam)
    return GegenbauerPoly(j, lam, _geg_coeffs(j, lam))


@dataclass(frozen=True)
class PiRational:
    """coeff * pi**pi_power, exactly."""

    coeff: object
    pi_power: int = 0

    def __post_init__(self):
        if self.pi_power not in (0, 1):
            raise ValueError("pi_power must be 0 or 1")

    def is_zero(self):
        return not self.coeff

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.pi_power != other.pi_power:
            raise ValueError("cannot add different pi powers")
        return PiRational(self.coeff + other.coeff, self.pi_power)

    def __mul__(self, s):
        if isinstance(s, PiRational):
            return PiRational(self.coeff * s.coeff, self.pi_power + s.pi_power)
        return PiRational(self.coeff * as_rat(s), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            if other.is_zero():
                raise ZeroDivisionError("division by zero PiRational")
            return PiRational(
                self.coeff / other.coeff, self.pi_power - other.pi_power
            )
        return PiRational(self.coeff / as_rat(other), self.pi_power)

    def __float__(self):
        return float(self.coeff) * math.pi**self.pi_power


def _fixed_or_symbolic(gp, n):
    f = gp_reduce(gp)
    if n is None:
        return f
    return f(n)


def addition_coeff_a(l, m, n=None):
    """Coefficient a(n, l, m) of the Gegenbauer addition theorem.

    Symbolic (n=None) returns a RatFuncN; fixed integer n evaluates it.
    Requires 0 <= m <= l.
    """
    if not 0 <= m <= l:
        raise ValueError("need 0 <= m <= l")
    pref = ratfunc_normalize(
        PolyN.linear(1, 2 * m - 3) * PolyN.const(Rat(4**m) * factorial(l - m)),
        PolyN.const(1),
    )
    gp = GammaProduct(
        prefactor=pref,
        factors=(
            (GammaKey(1, -3), 1),            # (n-4)!
            (GammaKey(1, l + m - 2), -1),    # 1 / (l+m+n-3)!
            (GammaKey(HALF, m - 1), 2),      # Gamma^2(m + n/2 - 1)
            (GammaKey(HALF, -1), -2),        # 1 / Gamma^2(n/2 - 1)
        ),
    )
    return _fixed_or_symbolic(gp, n)


def reduction_coeff_b(j, k, m, n=None):
    """Coefficient b(n, j, k, m) from iterating the order-raising recurrence."""
    if not 0 <= k <= min(m, j // 2):
        raise ValueError("need 0 <= k <= min(m, j//2)")
    pref = ratfunc_normalize(
        PolyN.linear(HALF, j + m - 2 * k - 1)
        * PolyN.const(factorial(m) / (factorial(k) * factorial(m - k))),
        PolyN.const(1),
    )
    gp = GammaProduct(
        prefactor=pref,
        factors=(
            (GammaKey(HALF, m - 1), 1),
            (GammaKey(HALF, j - k - 1), 1),
            (GammaKey(HALF, -1), -1),
            (GammaKey(HALF, j + m - k), -1),
        ),
    )
    return _fixed_or_symbolic(gp, n)


def weight_integral(xpow, p):
    """Exact integral of x**xpow * (1 - x^2)**p over [-1, 1].

    p is a non-negative integer or half-integer.  The value is rational for
    integer p and a rational multiple of pi for half-integer p; it is
    computed through rising-factorial recurrences, never floating point.
    """
    if xpow < 0:
        raise ValueError("xpow must be >= 0")
    p = as_rat(p)
    if p < 0 or p.denominator not in (1, 2):
        raise ValueError("p must be a non-negative integer or half-integer")
    if xpow % 2 == 1:
        return PiRational(ZERO, 0 if is_integer(p) else 1)
    s = xpow // 2
    if is_integer(p):
        pi = to_int(p)
        # B(s + 1/2, p + 1) = p! / (s + 1/2)_(p+1)
        return PiRational(factorial(pi) / poch(Rat(2 * s + 1, 2), pi + 1), 0)
    t = to_int(p - HALF)
    coeff = poch(HALF, s) * poch(HALF, t + 1) / factorial(s + t + 1)
    return PiRational(coeff, 1)


def triple_product_integral_exact(j1, j2, j3, m, n):
    """Exact theta-integral of three Gegenbauer polynomials.

    Integrates C_{j1}^{(n-2)/2} C_{j2-m}^{m+(n-2)/2} C_{j3-m}^{m+(n-2)/2}
    against sin^{2m+n-2} theta over [0, pi] at fixed integer n >= 3, by
    expanding the polynomials and integrating term by term in x = cos theta.
    Zero (by the negative-degree convention) when j2 < m or j3 < m.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    p = Rat(2 * m + n - 3, 2)
    if j2 < m or j3 < m:
        return PiRational(ZERO, 0 if is_integer(p) else 1)
    lam1 = Rat(n - 2, 2)
    lam23 = m + lam1
    prod = kernel.mul(
        list(_geg_coeffs(j1, lam1)),
        kernel.mul(
            list(_geg_coeffs(j2 - m, lam23)), list(_geg_coeffs(j3 - m, lam23))
        ),
    )
    total = PiRational(ZERO, 0 if is_integer(p) else 1)
    for k, c in enumerate(prod):
        if not c or k % 2 == 1:
            continue
        total = total + weight_integral(k, p) * c
    return total

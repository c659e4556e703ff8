"""Exact rational scalar backend.

All exact values in this package are arbitrary-precision rationals.  When
gmpy2 is installed its ``mpq`` type is used (roughly an order of magnitude
faster on the polynomial workloads); otherwise we fall back to the stdlib
``fractions.Fraction``.  Both expose ``.numerator``/``.denominator`` and
identical arithmetic semantics, so the rest of the package is agnostic.

Set the environment variable ``SONJ_PURE_RATIONAL=1`` to force the
Fraction backend (useful for benchmarking, see ``benchmarks/``).
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

if os.environ.get("SONJ_PURE_RATIONAL") == "1":
    Rat = Fraction
    RATIONAL_BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as Rat  # type: ignore[no-redef]

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on environment
        Rat = Fraction
        RATIONAL_BACKEND = "fractions"

ZERO = Rat(0)
ONE = Rat(1)
HALF = Rat(1, 2)


def as_rat(x):
    """Coerce an int, Fraction, mpq or 'p/q' string to the active backend."""
    if isinstance(x, str):
        return Rat(Fraction(x))
    return Rat(x)


def is_integer(q) -> bool:
    return q.denominator == 1


def is_half_integer(q) -> bool:
    """True for odd multiples of 1/2 (integers excluded)."""
    return q.denominator == 2


def to_int(q) -> int:
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def factorial(k: int):
    return Rat(math.factorial(k))


def poch(x, k: int):
    """Rising factorial x (x+1) ... (x+k-1) of an exact rational x."""
    out = ONE
    x = as_rat(x)
    for i in range(k):
        out *= x + i
    return out


def binomial(a: int, b: int):
    return Rat(math.comb(a, b))


def sqrt_exact(q):
    """Exact square root of a non-negative rational, or None if irrational."""
    num = int(q.numerator)
    den = int(q.denominator)
    if num < 0:
        raise ValueError("negative radicand")
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Rat(rn, rd)

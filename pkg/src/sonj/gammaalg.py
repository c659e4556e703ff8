"""Symbolic products of gamma factors with arguments affine in n.

A ``GammaProduct`` is a rational-function prefactor times a product of
factors Gamma(a*n + b)^e with a in {0, 1/2, 1} and b an integer or
half-integer.  Every formula assembled in this package has the property
that its gamma content cancels completely: within each class of arguments
(same a, same fractional part of b) the exponents sum to zero, so the
whole product telescopes into rising factorials and reduces to a rational
function of n.  ``gp_reduce`` performs that reduction; a product that does
not cancel is a construction bug and raises ``GammaResidueError``.

Gamma(1/2) (i.e. sqrt(pi)) is deliberately an ordinary factor with key
(a=0, b=1/2); its net exponent must reach zero through pairings with the
other half-integer constant gammas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .poly import PolyN, RatFuncN, pochhammer_poly, ratfunc_normalize
from .rational import HALF, ONE, Rat, ZERO, as_rat, to_int

__all__ = [
    "GammaKey",
    "GammaProduct",
    "GammaResidueError",
    "gp_from_factorial_shift",
    "gp_mul",
    "gp_pow",
    "gp_reduce",
]

_ALLOWED_A = (ZERO, HALF, ONE)

_RF_ONE = RatFuncN.from_poly(PolyN.const(1))


class GammaResidueError(ValueError):
    """A gamma product failed to cancel; carries the surviving factors."""

    def __init__(self, residue):
        self.residue = tuple(residue)
        super().__init__(
            "uncancelled gamma factors: "
            + " * ".join(f"Gamma({_key_str(k)})^{e}" for k, e in self.residue)
        )


@dataclass(frozen=True)
class GammaKey:
    """Argument a*n + b of a gamma factor."""

    a: object
    b: object

    def __post_init__(self):
        a = as_rat(self.a)
        b = as_rat(self.b)
        if a not in _ALLOWED_A:
            raise ValueError(f"unsupported gamma coefficient a = {a}")
        if b.denominator not in (1, 2):
            raise ValueError(f"unsupported gamma offset b = {b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


def _key_str(k):
    if not k.a:
        return str(k.b)
    head = "n" if k.a == 1 else "n/2"
    if not k.b:
        return head
    return f"{head}{'+' if k.b > 0 else '-'}{abs(k.b)}"


class GammaProduct:
    """prefactor * prod Gamma(a*n + b)^e, exponents merged canonically."""

    __slots__ = ("prefactor", "factors")

    def __init__(self, prefactor=_RF_ONE, factors=()):
        merged = {}
        for key, e in factors:
            if not isinstance(key, GammaKey):
                key = GammaKey(*key)
            e = int(e)
            if not e:
                continue
            new = merged.get(key, 0) + e
            if new:
                merged[key] = new
            elif key in merged:
                del merged[key]
        object.__setattr__(self, "prefactor", prefactor)
        object.__setattr__(
            self, "factors", tuple(sorted(merged.items(), key=lambda kv: (kv[0].a, kv[0].b)))
        )

    def __setattr__(self, *a):
        raise AttributeError("GammaProduct is immutable")

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_prefactor(cls, r):
        if not isinstance(r, RatFuncN):
            r = ratfunc_normalize(PolyN.const(as_rat(r)), PolyN.const(1))
        return cls(prefactor=r)

    @classmethod
    def gamma(cls, a, b, exponent=1):
        return cls(factors=((GammaKey(a, b), exponent),))

    def __mul__(self, other):
        if not isinstance(other, GammaProduct):
            return NotImplemented
        return GammaProduct(
            self.prefactor * other.prefactor, self.factors + other.factors
        )

    def __pow__(self, k):
        k = int(k)
        return GammaProduct(
            self.prefactor**k, tuple((key, e * k) for key, e in self.factors)
        )

    def __eq__(self, other):
        if not isinstance(other, GammaProduct):
            return NotImplemented
        return self.prefactor == other.prefactor and self.factors == other.factors

    def __hash__(self):
        return hash((self.prefactor, self.factors))

    def reduce(self):
        return gp_reduce(self)

    def __repr__(self):
        parts = [f"Gamma({_key_str(k)})^{e}" if e != 1 else f"Gamma({_key_str(k)})"
                 for k, e in self.factors]
        parts.append(f"<{self.prefactor}>")
        return " * ".join(parts)


def gp_from_factorial_shift(base_b, a, shift):
    """Gamma(a*n + base_b + shift) / Gamma(a*n + base_b), unreduced."""
    shift = int(shift)
    if shift == 0:
        return GammaProduct.identity()
    base_b = as_rat(base_b)
    return GammaProduct(
        factors=(
            (GammaKey(a, base_b + shift), 1),
            (GammaKey(a, base_b), -1),
        )
    )


def gp_mul(x, y):
    return x * y


def gp_pow(x, k):
    return x**k


def _telescope(a, offsets):
    """Collapse sum-zero gamma exponents on an integer-offset ladder.

    offsets is a sorted list of (b, e).  Returns the list of (linear factor
    a*n + t, exponent) produced by repeatedly applying Gamma(x+1) = x Gamma(x):
    each unit step t in [b_i, b_{i+1}) contributes (a*n + t) to the power of
    minus the cumulative exponent below it.
    """
    out = []
    running = 0
    for i in range(len(offsets) - 1):
        running += offsets[i][1]
        if not running:
            continue
        b = offsets[i][0]
        while b < offsets[i + 1][0]:
            out.append((b, -running))
            b += 1
    return out


def gp_reduce(x):
    """Cancel all gamma content of x down to a RatFuncN.

    Factors are grouped by (a, b mod 1); each group must have exponents
    summing to zero (the constant integer-argument group instead evaluates
    to exact factorials).  Raises GammaResidueError otherwise.
    """
    result = x.prefactor
    groups = {}
    for key, e in x.factors:
        frac = key.b - math.floor(key.b)
        groups.setdefault((key.a, frac), []).append((key.b, e))
    residue = []
    num = PolyN.const(1)
    den = PolyN.const(1)
    const = ONE
    for (a, frac), offs in sorted(groups.items()):
        offs.sort()
        if not a and not frac:
            # integer-argument gammas evaluate to exact factorials
            bad = [(GammaKey(a, b), e) for b, e in offs if b <= 0]
            if bad:
                residue.extend(bad)
            else:
                for b, e in offs:
                    const *= Rat(math.factorial(to_int(b) - 1)) ** e
            continue
        if sum(e for _, e in offs) != 0:
            residue.extend((GammaKey(a, b), e) for b, e in offs)
            continue
        for t, e in _telescope(a, offs):
            if not a:
                # constant half-integer ladder: plain rational steps
                const *= t**e if e > 0 else ONE / (t ** (-e))
                continue
            lin = PolyN.linear(a, t)
            if e > 0:
                num = num * lin**e
            else:
                den = den * lin ** (-e)
    if residue:
        raise GammaResidueError(residue)
    return result * ratfunc_normalize(num, den) * RatFuncN.const(const)

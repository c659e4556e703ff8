"""Polynomials and canonical rational functions in the dimension variable n.

``PolyN`` is a dense univariate polynomial over exact rationals (ascending
coefficients).  ``RatFuncN`` is a quotient of two integer-coefficient
polynomials in canonical form, so that two equal rational functions are
structurally identical:

  * num and den are coprime over the rationals,
  * both have integer coefficients with gcd(content(num), content(den)) = 1,
  * den has positive leading coefficient.

Degrees stay modest here (a few tens), so plain Euclidean gcd with monic
normalization is entirely adequate.
"""

from __future__ import annotations

import math

from . import kernel
from .rational import ONE, Rat, ZERO, as_rat, to_int

__all__ = [
    "PolyN",
    "RatFuncN",
    "ZeroDenominatorError",
    "PoleError",
    "poly_gcd",
    "pochhammer_poly",
    "ratfunc_normalize",
    "ratfunc_eval",
    "factor_for_display",
    "poly_to_json",
    "poly_from_json",
]


class ZeroDenominatorError(ZeroDivisionError):
    """Rational function constructed with a zero denominator."""


class PoleError(ZeroDivisionError):
    """Rational function evaluated at a pole."""


def _coerce_coeffs(coeffs):
    return tuple(as_rat(c) for c in coeffs)


class PolyN:
    """Immutable dense polynomial in n over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(_coerce_coeffs(coeffs))
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("PolyN is immutable")

    @classmethod
    def _raw(cls, trimmed):
        p = cls.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(trimmed))
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    @classmethod
    def linear(cls, a, b):
        """The polynomial a*n + b."""
        return cls((b, a))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatFuncN):
            return other == self
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyN", self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return PolyN._raw(kernel.add(list(self.coeffs), list(other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return PolyN._raw(kernel.neg(list(self.coeffs)))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return PolyN._raw(kernel.sub(list(self.coeffs), list(other.coeffs)))

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return PolyN._raw(kernel.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = PolyN.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        q, r = kernel.divmod_(list(self.coeffs), list(other.coeffs))
        return PolyN._raw(q), PolyN._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, RatFuncN):
            return RatFuncN.from_poly(self) / other
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return ratfunc_normalize(self, other)

    def __rtruediv__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return ratfunc_normalize(other, self)

    def __call__(self, at):
        return kernel.eval_(list(self.coeffs), as_rat(at))

    def monic(self):
        return PolyN._raw(kernel.monic(list(self.coeffs)))

    def content(self):
        """Positive rational c with self/c primitive integer; 0 for zero."""
        if not self.coeffs:
            return ZERO
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, int(c.numerator))
            d = int(c.denominator)
            den_lcm = den_lcm // math.gcd(den_lcm, d) * d
        return Rat(num_gcd, den_lcm)

    def primitive(self):
        """(content-with-sign, primitive integer polynomial with lead > 0)."""
        if not self.coeffs:
            return ZERO, PolyN()
        c = self.content()
        if self.leading() < 0:
            c = -c
        return c, PolyN._raw(kernel.scale(list(self.coeffs), 1 / c))

    def __repr__(self):
        return f"PolyN({_poly_str(self)})"

    def __str__(self):
        return _poly_str(self)


def _as_poly(x):
    if isinstance(x, PolyN):
        return x
    if isinstance(x, (int, str)) or hasattr(x, "denominator"):
        return PolyN((as_rat(x),))
    return None


def _term_str(c, k, head):
    if k == 0:
        body = str(abs(c))
    else:
        v = "n" if k == 1 else f"n^{k}"
        body = v if abs(c) == 1 else f"{abs(c)}*{v}"
    if head:
        return body if c > 0 else f"-{body}"
    return f" + {body}" if c > 0 else f" - {body}"


def _poly_str(p):
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        parts.append(_term_str(c, k, head=not parts))
    return "".join(parts)


def poly_gcd(p, q):
    """Monic gcd of two polynomials; poly_gcd(p, 0) is monic p."""
    return PolyN._raw(kernel.gcd_monic(list(p.coeffs), list(q.coeffs)))


def pochhammer_poly(b, k, a=1):
    """Rising-factorial polynomial prod_{i=0}^{k-1} (a*n + b + i).

    This is the ratio Gamma(a*n + b + k) / Gamma(a*n + b) written as a
    polynomial in n; degree k, the empty product for k = 0.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    a = as_rat(a)
    b = as_rat(b)
    out = [ONE]
    for i in range(k):
        out = kernel.mul(out, [b + i, a])
    return PolyN._raw(out)


class RatFuncN:
    """Canonical-form rational function of n; see the module docstring."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFuncN is immutable")

    @classmethod
    def from_poly(cls, p):
        return ratfunc_normalize(_as_poly(p), PolyN.const(1))

    @classmethod
    def const(cls, c):
        return cls.from_poly(PolyN.const(c))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def as_rat(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero():
            return ZERO
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        return hash(("RatFuncN", self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return ratfunc_normalize(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFuncN(-self.num, self.den)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        # cross-cancel before multiplying to keep the final gcd small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.degree == 0 else self.num // g1
        d2 = other.den if g1.degree == 0 else other.den // g1
        n2 = other.num if g2.degree == 0 else other.num // g2
        d1 = self.den if g2.degree == 0 else self.den // g2
        return ratfunc_normalize(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return self * RatFuncN(other.den, other.num)

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("integer powers only")
        if k < 0:
            if self.is_zero():
                raise ZeroDenominatorError("inverse of zero")
            return ratfunc_normalize(self.den, self.num) ** (-k)
        return ratfunc_normalize(self.num**k, self.den**k)

    def __call__(self, at):
        return ratfunc_eval(self, at)

    def __repr__(self):
        return f"RatFuncN({self})"

    def __str__(self):
        return format_factored(self)

    def to_json(self):
        return {
            "num": poly_to_json(self.num),
            "den": poly_to_json(self.den),
            "factored": format_factored(self),
        }

    @classmethod
    def from_json(cls, obj):
        return ratfunc_normalize(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def _as_ratfunc(x):
    if isinstance(x, RatFuncN):
        return x
    p = _as_poly(x)
    if p is None:
        return None
    return RatFuncN.from_poly(p)


def ratfunc_normalize(num, den):
    """Canonical coprime form of num/den; raises on a zero denominator."""
    num = _as_poly(num)
    den = _as_poly(den)
    if den.is_zero():
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero():
        return RatFuncN(PolyN(), PolyN.const(1))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num // g
        den = den // g
    cn, num = num.primitive()
    cd, den = den.primitive()
    # absorb the scalar cn/cd into num, keeping coprime integer contents
    s = cn / cd
    num = PolyN._raw(kernel.scale(list(num.coeffs), Rat(s.numerator)))
    den = PolyN._raw(kernel.scale(list(den.coeffs), Rat(s.denominator)))
    return RatFuncN(num, den)


def ratfunc_eval(f, at):
    """Exact value of f at a rational point; a pole is an error."""
    at = as_rat(at)
    d = f.den(at)
    if not d:
        raise PoleError(f"pole at n = {at}")
    return f.num(at) / d


# -- factorization for display -------------------------------------------------


def _divisors(x, cap=100000):
    """Divisors of |x| by trial division (best effort for huge cofactors)."""
    x = abs(int(x))
    if x == 0:
        return []
    factors = {}
    for p in (2, 3, 5):
        while x % p == 0:
            factors[p] = factors.get(p, 0) + 1
            x //= p
    d = 7
    while d * d <= x and d <= 1_000_003:
        while x % d == 0:
            factors[d] = factors.get(d, 0) + 1
            x //= d
        d += 2
    if x > 1:
        # leftover treated as prime; a composite leftover only costs us
        # missed root candidates, never correctness
        factors[x] = factors.get(x, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
        if len(divs) > cap:
            divs = divs[:cap]
    return sorted(divs)


def _rational_roots(p):
    """Rational roots (with multiplicity) of a primitive integer PolyN."""
    roots = []
    coeffs = list(p.coeffs)
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(ZERO)
        coeffs = coeffs[1:]
    while len(coeffs) > 1:
        a0 = coeffs[0]
        lead = coeffs[-1]
        found = None
        for qd in _divisors(lead):
            for pn in _divisors(a0):
                for r in (Rat(pn, qd), Rat(-pn, qd)):
                    if not kernel.eval_(coeffs, r):
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        # deflate by (qd*n - pn), keeping integer coefficients
        lin = [-found.numerator, found.denominator]
        q, rem = kernel.divmod_(coeffs, lin)
        assert not rem
        roots.append(found)
        coeffs = q
    return roots, PolyN(coeffs)


def factor_for_display(p):
    """Best-effort factorization of p over the integers.

    Returns a list of (factor, exponent) pairs whose product equals p
    exactly.  The first entry is the constant content when it is not 1;
    linear factors are primitive with positive leading coefficient; any
    remaining part without rational roots is left whole.
    """
    if p.is_zero():
        return [(PolyN(), 1)]
    c, prim = p.primitive()
    roots, rest = _rational_roots(prim)
    rest_c, rest_prim = rest.primitive()
    counts = {}
    for r in roots:
        counts[r] = counts.get(r, 0) + 1
    lin_factors = []
    product = rest_prim
    for r, e in sorted(counts.items(), reverse=True):
        lin = PolyN((-r.numerator, r.denominator))
        lin_factors.append((lin, e))
        product = product * lin**e
    # deflation by primitive linears keeps everything primitive (Gauss),
    # so the product must reproduce prim up to the collected scalar
    cc, product_prim = product.primitive()
    assert product_prim == prim, "factorization does not reproduce the input"
    c = c / cc
    out = []
    if c != 1:
        out.append((PolyN.const(c), 1))
    out.extend(lin_factors)
    if rest_prim.degree >= 1:
        out.append((rest_prim, 1))
    if not out:
        out.append((PolyN.const(1), 1))
    return out


def _factor_str(factors):
    parts = []
    for f, e in factors:
        if f.degree <= 0:
            s = str(f.coeffs[0] if f.coeffs else 0)
            if "/" in s or s.startswith("-"):
                s = f"({s})"
        elif f.degree == 1 and f.coeffs[1] == 1 and not f.coeffs[0]:
            s = "n"
        else:
            s = f"({_poly_str(f)})"
        if e != 1:
            s += f"^{e}"
        parts.append(s)
    return "*".join(parts) if parts else "1"


def format_factored(f):
    """Human-readable factored form of a RatFuncN, e.g. 4*(n - 2)/((n - 1)*n^3)."""
    if f.num.is_zero():
        return "0"
    num_s = _factor_str(factor_for_display(f.num))
    if f.den.degree == 0 and f.den.coeffs[0] == 1:
        return num_s
    den_f = factor_for_display(f.den)
    den_s = _factor_str(den_f)
    if len(den_f) > 1 or den_f[0][1] != 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def poly_to_json(p):
    """JSON form: array of base-10 coefficient strings, ascending degree."""
    return [str(c) for c in p.coeffs]


def poly_from_json(arr):
    return PolyN(tuple(as_rat(s) for s in arr))

"""Selection rules, 3j-symbol squares, the tetrahedral group integral and
derived 6j-symbols for the symmetric (class-one) representations of SO(n).

Everything is exact.  In symbolic mode (n=None) results are canonical
rational functions of the dimension n, valid for all n >= 2 by analytic
continuation; at fixed integer n they are exact rationals.  All symbolic
work routes through the gamma-product algebra; a direct fixed-n evaluation
path using plain factorial arithmetic exists for n >= 5, where every
factorial argument is non-negative (below that, (n-3)! and friends are
undefined even though the reduced rational function is perfectly finite, so
small n is handled by evaluating the symbolic form).

Sign convention: only squares of 3j-symbols are intrinsically defined here;
individual 3j values are taken with the classical SO(3) phase (-1)^J times
the positive square root, which makes the extracted 6j-symbols agree with
the standard Racah 6j at n = 3 and reproduces the known closed form at
l4 = 0.  With this choice the extraction phase (-1)^(l4+l5+l6) combines
with the four 3j phases to (+1) for every admissible label set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gammaalg import GammaKey, GammaProduct, gp_reduce
from .gegenbauer import addition_coeff_a, reduction_coeff_b
from .poly import PolyN, RatFuncN, pochhammer_poly, ratfunc_normalize
from .rational import HALF, ONE, Rat, ZERO, factorial, poch, sqrt_exact

__all__ = [
    "Triad",
    "CouplingLabels",
    "SqrtRational",
    "UndefinedBySelectionRules",
    "selection_ok",
    "dim",
    "threej_squared",
    "g_reduced",
    "i_alpha",
    "sixj",
    "sixj_squared",
    "c_alpha",
    "symmetry_orbit",
]

_RF_ZERO = RatFuncN.from_poly(PolyN())
_RF_ONE = RatFuncN.from_poly(PolyN.const(1))


class UndefinedBySelectionRules(ValueError):
    """6j extraction requested for labels where the inversion is undefined."""


@dataclass(frozen=True)
class Triad:
    """Three representation labels coupled to the identity."""

    l1: int
    l2: int
    l3: int

    def __post_init__(self):
        for l in (self.l1, self.l2, self.l3):
            if not isinstance(l, int) or l < 0:
                raise ValueError("labels must be non-negative integers")

    @property
    def perimeter(self):
        return self.l1 + self.l2 + self.l3

    @property
    def J(self):
        return Rat(self.perimeter, 2)

    @property
    def admissible(self):
        if self.perimeter % 2:
            return False
        return abs(self.l1 - self.l2) <= self.l3 <= self.l1 + self.l2

    def astuple(self):
        return (self.l1, self.l2, self.l3)


def _as_triad(t):
    return t if isinstance(t, Triad) else Triad(*t)


def selection_ok(t):
    """True iff the perimeter is even and the triangle inequality holds."""
    return _as_triad(t).admissible


@dataclass(frozen=True)
class CouplingLabels:
    """The six labels of the tetrahedral coupling integral."""

    l1: int
    l2: int
    l3: int
    l4: int
    l5: int
    l6: int

    def __post_init__(self):
        for l in self.astuple():
            if not isinstance(l, int) or l < 0:
                raise ValueError("labels must be non-negative integers")

    def astuple(self):
        return (self.l1, self.l2, self.l3, self.l4, self.l5, self.l6)

    def triads(self):
        return (
            Triad(self.l1, self.l2, self.l3),
            Triad(self.l1, self.l5, self.l6),
            Triad(self.l4, self.l2, self.l6),
            Triad(self.l3, self.l4, self.l5),
        )

    def all_triads_ok(self):
        return all(t.admissible for t in self.triads())


@dataclass(frozen=True)
class SqrtRational:
    """sign * sqrt(radicand) with an exact non-negative rational radicand."""

    sign: int
    radicand: object

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")
        if (self.sign == 0) != (not self.radicand):
            raise ValueError("sign is 0 iff radicand is 0")

    @classmethod
    def zero(cls):
        return cls(0, ZERO)

    def square(self):
        return self.radicand

    def exact(self):
        """The exact rational value, if the radicand is a perfect square."""
        r = sqrt_exact(self.radicand)
        return None if r is None else self.sign * r

    def __float__(self):
        return self.sign * float(self.radicand) ** 0.5


# -- symbolic core -------------------------------------------------------------


@lru_cache(maxsize=None)
def _dim_sym(l):
    if l == 0:
        return _RF_ONE
    num = PolyN.linear(1, 2 * l - 2) * pochhammer_poly(-1, l - 1)
    return ratfunc_normalize(num, PolyN.const(factorial(l)))


@lru_cache(maxsize=None)
def _threej_sym(l1, l2, l3, shift):
    t = Triad(l1, l2, l3)
    if not t.admissible:
        return _RF_ZERO
    J = (l1 + l2 + l3) // 2
    s = shift
    h = Rat(s, 2)
    pref = ONE
    factors = [
        (GammaKey(1, J + s - 2), 1),     # (J+n-3)!
        (GammaKey(1, s - 2), -1),        # 1/(n-3)!
        (GammaKey(HALF, h), -2),         # 1/Gamma^2(n/2)
        (GammaKey(HALF, h + J), -1),     # 1/Gamma(J+n/2)
        (GammaKey(1, s - 1), 3),         # (n-2)!^3
    ]
    for l in (l1, l2, l3):
        pref *= Rat(factorial(l), 2 * factorial(J - l))
        factors.append((GammaKey(HALF, h + J - l - 1), 1))
        factors.append((GammaKey(1, l + s - 2), -1))
    gp = GammaProduct(
        prefactor=RatFuncN.const(pref), factors=tuple(factors)
    )
    return gp_reduce(gp)


@lru_cache(maxsize=None)
def _a_sym(l, m):
    return addition_coeff_a(l, m)


@lru_cache(maxsize=None)
def _b_sym(j, k, m):
    return reduction_coeff_b(j, k, m)


@lru_cache(maxsize=None)
def _g_sym(j1, j2, j3, m):
    if j2 < m or j3 < m or (j1 + j2 + j3) % 2:
        return _RF_ZERO
    if j2 > j3:
        j2, j3 = j3, j2
    total = _RF_ZERO
    for k in range(min(m, j1 // 2) + 1):
        t3 = _threej_sym(*sorted((j1 - 2 * k, j2 - m, j3 - m)), 2 * m)
        if t3.is_zero():
            continue
        # each (...+2m+n-3)!/(2m+n-3)! pairs with one power of the
        # normalization's 1/(2m+n-3)!^3 into a rising factorial
        fact = ratfunc_normalize(
            pochhammer_poly(2 * m - 2, j1 - 2 * k)
            * pochhammer_poly(2 * m - 2, j2 - m)
            * pochhammer_poly(2 * m - 2, j3 - m),
            PolyN.const(
                factorial(j1 - 2 * k) * factorial(j2 - m) * factorial(j3 - m)
            ),
        )
        term = _b_sym(j1, k, m) * fact * t3
        total = total + (term if k % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def _i_sym(labels):
    lab = CouplingLabels(*labels)
    if not lab.all_triads_ok():
        return _RF_ZERO
    l1, l2, l3, l4, l5, l6 = labels
    pref = _RF_ONE
    for l in labels:
        pref = pref * ratfunc_normalize(
            PolyN.const(factorial(l)), pochhammer_poly(-2, l)
        )
    total = _RF_ZERO
    for m in range(min(l4, l5, l6) + 1):
        w = ratfunc_normalize(pochhammer_poly(-3, m), PolyN.const(factorial(m)))
        w = w * ratfunc_normalize(PolyN.linear(1, -3), PolyN.linear(1, 2 * m - 3)) ** 2
        w = (
            w
            * ratfunc_normalize(
                pochhammer_poly(-HALF, m, HALF), pochhammer_poly(0, m, HALF)
            )
            ** 3
        )
        w = w * _a_sym(l4, m) * _a_sym(l5, m) * _a_sym(l6, m)
        w = w * _g_sym(l1, l5, l6, m) * _g_sym(l2, l4, l6, m) * _g_sym(l3, l4, l5, m)
        total = total + w
    return pref * total


# -- direct fixed-n path (n >= 5) ----------------------------------------------


def _gamma_fixed(x):
    """Gamma(x) at a positive integer or half-integer: (coeff, sqrt-pi power)."""
    if x <= 0:
        raise ValueError(f"gamma argument {x} not positive")
    if x.denominator == 1:
        return factorial(int(x.numerator) - 1), 0
    k = int((x - HALF).numerator)  # x = k + 1/2
    return poch(HALF, k), 1


def _gprod_fixed(pos, neg):
    """Product of Gamma factors over a quotient; sqrt-pi powers must cancel."""
    c = ONE
    h = 0
    for x in pos:
        v, p = _gamma_fixed(x)
        c *= v
        h += p
    for x in neg:
        v, p = _gamma_fixed(x)
        c /= v
        h -= p
    if h:
        raise ValueError("sqrt(pi) content did not cancel")
    return c


def _threej2_direct(l1, l2, l3, n):
    t = Triad(l1, l2, l3)
    if not t.admissible:
        return ZERO
    J = (l1 + l2 + l3) // 2
    nh = Rat(n, 2)
    pos = [Rat(J + n - 2)]
    neg = [Rat(n - 2), nh, nh, nh + J]
    c = ONE
    for l in (l1, l2, l3):
        c *= Rat(factorial(l), 2 * factorial(J - l))
        pos.append(nh + J - l - 1)
        neg.append(Rat(l + n - 2))
        pos.append(Rat(n - 1))
    return c * _gprod_fixed(pos, neg)


def _a_direct(l, m, n):
    nh = Rat(n, 2)
    return (
        Rat(4**m)
        * factorial(l - m)
        * (2 * m + n - 3)
        * _gprod_fixed(
            [Rat(n - 3), nh + m - 1, nh + m - 1],
            [Rat(l + m + n - 2), nh - 1, nh - 1],
        )
    )


def _b_direct(j, k, m, n):
    nh = Rat(n, 2)
    return (
        factorial(m)
        / (factorial(k) * factorial(m - k))
        * (nh + j + m - 2 * k - 1)
        * _gprod_fixed([nh + m - 1, nh + j - k - 1], [nh - 1, nh + j + m - k])
    )


def _g_direct(j1, j2, j3, m, n):
    if j2 < m or j3 < m or (j1 + j2 + j3) % 2:
        return ZERO
    base = factorial(2 * m + n - 3)
    total = ZERO
    for k in range(min(m, j1 // 2) + 1):
        t3 = _threej2_direct(j1 - 2 * k, j2 - m, j3 - m, n + 2 * m)
        if not t3:
            continue
        term = (
            _b_direct(j1, k, m, n)
            * factorial(j1 - 2 * k + 2 * m + n - 3)
            * factorial(j2 + m + n - 3)
            * factorial(j3 + m + n - 3)
            / (
                factorial(j1 - 2 * k)
                * factorial(j2 - m)
                * factorial(j3 - m)
                * base**3
            )
            * t3
        )
        total += term if k % 2 == 0 else -term
    return total


def _i_direct(labels, n):
    lab = CouplingLabels(*labels)
    if not lab.all_triads_ok():
        return ZERO
    l1, l2, l3, l4, l5, l6 = labels
    pref = ONE
    for l in labels:
        pref *= Rat(factorial(l) * factorial(n - 3), factorial(l + n - 3))
    total = ZERO
    for m in range(min(l4, l5, l6) + 1):
        w = Rat(factorial(m + n - 4), factorial(m) * factorial(n - 4))
        w *= Rat(n - 3, 2 * m + n - 3) ** 2
        w *= (poch(Rat(n - 1, 2), m) / poch(Rat(n, 2), m)) ** 3
        w *= _a_direct(l4, m, n) * _a_direct(l5, m, n) * _a_direct(l6, m, n)
        w *= (
            _g_direct(l1, l5, l6, m, n)
            * _g_direct(l2, l4, l6, m, n)
            * _g_direct(l3, l4, l5, m, n)
        )
        total += w
    return pref * total


# -- public operations ---------------------------------------------------------


def _check_n(n):
    if n is not None and (not isinstance(n, int) or n < 2):
        raise ValueError("n must be an integer >= 2 (or None for symbolic)")


def dim(l, n=None):
    """Dimension of the l-th symmetric representation of SO(n).

    Symbolic mode returns a polynomial in n (as a RatFuncN); at fixed n the
    exact integer is returned as a rational (at n = 2 this is the analytic
    continuation: 1 for l = 0, 2 otherwise).
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    _check_n(n)
    d = _dim_sym(l)
    return d if n is None else d(n)


def threej_squared(t, shift=0, n=None):
    """Square of the class-one 3j-symbol of SO(n + shift); 0 if not selected.

    shift must be a non-negative even integer; it realizes the 3j-symbols
    of the shifted group SO(n + 2m) that appear inside the reduced
    theta-integrals.
    """
    t = _as_triad(t)
    if shift % 2 or shift < 0:
        raise ValueError("shift must be even and >= 0")
    _check_n(n)
    if n is None:
        return _threej_sym(*sorted(t.astuple()), shift)
    if n + shift < 2:
        raise ValueError("n + shift must be >= 2")
    if n >= 5:
        return _threej2_direct(*t.astuple(), n + shift)
    return _threej_sym(*sorted(t.astuple()), shift)(n)


def g_reduced(j1, j2, j3, m, n=None):
    """Reduced triple Gegenbauer integral, normalized by the pure sine moment.

    This is the theta-integral of C_{j1}^{(n-2)/2} C_{j2-m}^{m+(n-2)/2}
    C_{j3-m}^{m+(n-2)/2} sin^{2m+n-2}, divided by the integral of
    sin^{2m+n-2} alone, evaluated through the single-sum closed form; the
    result is a rational function of n.
    """
    if min(j1, j2, j3, m) < 0:
        raise ValueError("labels must be non-negative")
    _check_n(n)
    if n is None:
        return _g_sym(j1, j2, j3, m)
    if n >= 5:
        return _g_direct(j1, j2, j3, m, n)
    return _g_sym(j1, j2, j3, m)(n)


def i_alpha(labels, n=None):
    """The tetrahedral coupling integral over three copies of SO(n).

    Zero unless all four triads pass the selection rules (checked before
    any heavy work).  Symbolic mode returns the canonical rational function
    of n; fixed n >= 5 may use direct factorial arithmetic, n in {2, 3, 4}
    evaluates the symbolic form (analytic continuation).
    """
    lab = _as_labels(labels)
    _check_n(n)
    if not lab.all_triads_ok():
        return _RF_ZERO if n is None else ZERO
    if n is None:
        return _i_sym(lab.astuple())
    if n >= 5:
        return _i_direct(lab.astuple(), n)
    return _i_sym(lab.astuple())(n)


def _as_labels(labels):
    if isinstance(labels, CouplingLabels):
        return labels
    return CouplingLabels(*labels)


def sixj_squared(labels, n=None):
    """Square of the 6j-symbol extracted from the coupling integral."""
    lab = _as_labels(labels)
    _check_n(n)
    triads = lab.triads()
    if not all(t.admissible for t in triads):
        raise UndefinedBySelectionRules(
            f"triads of {lab.astuple()} do not all pass the selection rules"
        )
    i_val = i_alpha(lab, n)
    prod = _RF_ONE if n is None else ONE
    for t in triads:
        prod = prod * threej_squared(t, 0, n)
    if not prod:
        raise UndefinedBySelectionRules(
            "a 3j-symbol vanishes; the 6j cannot be extracted here"
        )
    return i_val * i_val / prod


def sixj(labels, n):
    """The 6j-symbol at fixed n, as an exact sign times square root.

    The four 3j phases combine with the extraction phase to +1 for every
    admissible label set (see the module docstring), so the sign is that of
    the coupling integral itself.
    """
    if n is None:
        raise ValueError("sixj needs a fixed integer n; use sixj_squared for symbolic")
    lab = _as_labels(labels)
    sq = sixj_squared(lab, n)
    if not sq:
        return SqrtRational.zero()
    i_val = i_alpha(lab, n)
    return SqrtRational(1 if i_val > 0 else -1, sq)


def c_alpha(labels, n=None):
    """Full topology weight: the product of the six dimensions times i_alpha."""
    lab = _as_labels(labels)
    _check_n(n)
    val = i_alpha(lab, n)
    for l in lab.astuple():
        val = val * dim(l, n)
    return val


# -- symmetries ----------------------------------------------------------------

_COLUMN_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_FLIP_PAIRS = ((0, 1), (0, 2), (1, 2))


def _apply(labels, perm, flips):
    cols = [
        [labels[0], labels[3]],
        [labels[1], labels[4]],
        [labels[2], labels[5]],
    ]
    cols = [cols[p] for p in perm]
    for f in flips:
        cols[f] = cols[f][::-1]
    return (cols[0][0], cols[1][0], cols[2][0], cols[0][1], cols[1][1], cols[2][1])


def symmetry_orbit(labels):
    """Orbit under the tetrahedral 6j symmetries (column permutations and
    pairwise upper/lower exchanges); its size always divides 24."""
    lab = _as_labels(labels)
    out = set()
    for perm in _COLUMN_PERMS:
        for flips in ((), (0, 1), (0, 2), (1, 2)):
            out.add(_apply(lab.astuple(), perm, flips))
    return frozenset(CouplingLabels(*t) for t in out)


def canonical_representative(labels):
    """Lexicographically smallest member of the symmetry orbit."""
    return min(t.astuple() for t in symmetry_orbit(labels))

"""Independent verification paths for the coupling module.

Nothing here touches the gamma-product reduction machinery: the exact
routes use only Gegenbauer coefficient lists, Beta-function moments and the
classical closed forms for SO(3)/SU(2) recoupling, so a disagreement with
the coupling module points at a real bug on one side or the other.  The
floating-point quadrature is a smoke test on top of the exact oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coupling import CouplingLabels, SqrtRational, Triad
from .gegenbauer import triple_product_integral_exact, weight_integral
from .rational import Rat, ZERO, sqrt_exact

__all__ = [
    "QuadratureSpec",
    "ResolutionTooLow",
    "threej_squared_by_integration",
    "g_by_integration",
    "wigner_threej_squared",
    "racah_sixj",
    "i_by_eq2_so3",
    "i_by_quadrature_n3",
]


class ResolutionTooLow(ValueError):
    """Quadrature resolution below the polynomial-exactness bound."""


def _as_triad(t):
    return t if isinstance(t, Triad) else Triad(*t)


def _as_labels(labels):
    if isinstance(labels, CouplingLabels):
        return labels
    return CouplingLabels(*labels)


def threej_squared_by_integration(t, n):
    """3j-square via the single-angle zonal integral at fixed integer n >= 3.

    Product of three normalized zonal functions integrated over the group,
    reduced to one polar integral of three Gegenbauer polynomials; computed
    exactly from coefficient lists, with the pi content cancelling between
    the sine moment and its normalization.
    """
    t = _as_triad(t)
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3")
    pref = Rat(1)
    for l in t.astuple():
        pref *= Rat(
            math.factorial(l) * math.factorial(n - 3), math.factorial(l + n - 3)
        )
    norm = weight_integral(0, Rat(n - 3, 2))
    integral = triple_product_integral_exact(*t.astuple(), 0, n)
    return pref * (integral / norm).coeff


def g_by_integration(j1, j2, j3, m, n):
    """Normalized reduced integral by direct term-by-term integration."""
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3")
    norm = weight_integral(0, Rat(2 * m + n - 3, 2))
    integral = triple_product_integral_exact(j1, j2, j3, m, n)
    return (integral / norm).coeff


def wigner_threej_squared(l1, l2, l3):
    """Square of the SO(3) 3j-symbol with zero projections, closed form."""
    t = Triad(l1, l2, l3)
    if not t.admissible:
        return ZERO
    J = t.perimeter // 2
    f = math.factorial
    val = Rat(
        f(2 * J - 2 * l1) * f(2 * J - 2 * l2) * f(2 * J - 2 * l3), f(2 * J + 1)
    )
    val *= Rat(f(J), f(J - l1) * f(J - l2) * f(J - l3)) ** 2
    return val


def _triangle_coeff(a, b, c):
    f = math.factorial
    return Rat(f(a + b - c) * f(a - b + c) * f(-a + b + c), f(a + b + c + 1))


def racah_sixj(j1, j2, j3, j4, j5, j6):
    """Standard SU(2)/SO(3) 6j-symbol for integer labels, Racah's single sum."""
    triads = ((j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j3, j4, j5))
    for a, b, c in triads:
        if not abs(a - b) <= c <= a + b:
            return SqrtRational.zero()
    f = math.factorial
    rad = Rat(1)
    for tr in triads:
        rad *= _triangle_coeff(*tr)
    t_lo = max(sum(tr) for tr in triads)
    t_hi = min(
        j1 + j2 + j4 + j5,
        j2 + j3 + j5 + j6,
        j3 + j1 + j6 + j4,
    )
    s = Rat(0)
    for t in range(t_lo, t_hi + 1):
        term = Rat(
            f(t + 1),
            f(t - j1 - j2 - j3)
            * f(t - j1 - j5 - j6)
            * f(t - j4 - j2 - j6)
            * f(t - j3 - j4 - j5)
            * f(j1 + j2 + j4 + j5 - t)
            * f(j2 + j3 + j5 + j6 - t)
            * f(j3 + j1 + j6 + j4 - t),
        )
        s += term if t % 2 == 0 else -term
    if not s:
        return SqrtRational.zero()
    return SqrtRational(1 if s > 0 else -1, rad * s * s)


def i_by_eq2_so3(labels):
    """The n = 3 coupling integral assembled from the classical closed forms.

    The standard-convention 3j phases combine with the 6j extraction phase
    so that the integral equals the positive square root of the product of
    the four 3j-squares times the Racah 6j; the result is convention-free
    and exactly rational.
    """
    lab = _as_labels(labels)
    if not lab.all_triads_ok():
        return ZERO
    prod = Rat(1)
    for t in lab.triads():
        prod *= wigner_threej_squared(*t.astuple())
    sj = racah_sixj(*lab.astuple())
    if sj.sign == 0 or not prod:
        return ZERO
    root = sqrt_exact(prod * sj.radicand)
    assert root is not None, "3j/6j product is not a perfect square"
    return sj.sign * root


@dataclass(frozen=True)
class QuadratureSpec:
    """Product rule: Gauss-Legendre in each cosine, uniform in each azimuth."""

    points_per_angle: int


def i_by_quadrature_n3(labels, spec):
    """Floating-point check of the n = 3 integral on the three-sphere product.

    Gauss-Legendre nodes in the three polar cosines and a uniform rule in
    the two independent azimuth differences; both rules are exact for the
    trigonometric-polynomial integrand once points_per_angle is at least
    2*lmax + 1, so the returned error estimate (difference against a finer
    rule) is at rounding level.  Returns (value, error_estimate).
    """
    lab = _as_labels(labels)
    lmax = max(lab.astuple())
    npts = spec.points_per_angle
    if npts < lmax + 1:
        raise ResolutionTooLow(
            f"{npts} points per angle for lmax={lmax}; need at least {lmax + 1}"
        )
    coarse = _quad_value(lab, npts)
    fine = _quad_value(lab, npts + 2)
    err = abs(fine - coarse) + 1e-15 * (1.0 + abs(fine))
    return fine, err


def _legendre(l, x):
    c = np.zeros(l + 1)
    c[l] = 1.0
    return np.polynomial.legendre.legval(x, c)


def _quad_value(lab, npts):
    l1, l2, l3, l4, l5, l6 = lab.astuple()
    # polar part: Gauss rule exact up to degree 2*npts - 1 >= 3*lmax
    need = max(l1 + l5 + l6, l2 + l4 + l6, l3 + l4 + l5)
    gauss_n = max(npts, (need + 2) // 2 + 1)
    x, w = np.polynomial.legendre.leggauss(gauss_n)
    m = npts if npts % 2 else npts + 1  # uniform rule, exact for degree < m
    phi = 2.0 * np.pi * np.arange(m) / m

    c1 = x[:, None, None, None, None]
    c2 = x[None, :, None, None, None]
    c3 = x[None, None, :, None, None]
    p2 = phi[None, None, None, :, None]
    p3 = phi[None, None, None, None, :]
    s1 = np.sqrt(1.0 - c1 * c1)
    s2 = np.sqrt(1.0 - c2 * c2)
    s3 = np.sqrt(1.0 - c3 * c3)

    e23 = c2 * c3 + s2 * s3 * np.cos(p2 - p3)
    e31 = c3 * c1 + s3 * s1 * np.cos(p3)   # phi1 fixed to 0 by symmetry
    e12 = c1 * c2 + s1 * s2 * np.cos(p2)

    integrand = (
        _legendre(l1, c1)
        * _legendre(l2, c2)
        * _legendre(l3, c3)
        * _legendre(l4, e23)
        * _legendre(l5, e31)
        * _legendre(l6, e12)
    )
    weighted = integrand * (w[:, None, None, None, None]
                            * w[None, :, None, None, None]
                            * w[None, None, :, None, None])
    total = math.fsum(weighted.ravel())
    # measure: (dOmega/4pi)^3 with one azimuth integrated out analytically
    return total * (2.0 * np.pi) * (2.0 * np.pi / m) ** 2 / (4.0 * np.pi) ** 3

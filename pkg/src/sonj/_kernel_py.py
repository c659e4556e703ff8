"""Dense univariate polynomial kernels, pure-Python backend.

A polynomial is a plain list of exact rational coefficients in ascending
degree with no trailing zero; the zero polynomial is the empty list.  These
loops dominate the symbolic runtime, so there is a drop-in compiled twin in
``_kernel_c.pyx`` with identical semantics (see ``sonj.kernel``).
"""

from __future__ import annotations

from .rational import Rat

_ZERO = Rat(0)
_ONE = Rat(1)


def trim(c):
    i = len(c)
    while i and not c[i - 1]:
        i -= 1
    return c[:i]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


def neg(a):
    return [-x for x in a]


def sub(a, b):
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return trim(out)


def scale(a, s):
    if not s:
        return []
    return [x * s for x in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return trim(out)


def divmod_(a, b):
    """Quotient and remainder over the rationals; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[db]
    q = [_ZERO] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = r[i + db]
        if not c:
            continue
        c = c / lead
        q[i] = c
        for j in range(db + 1):
            r[i + j] = r[i + j] - c * b[j]
    return trim(q), trim(r[:db])


def eval_(c, x):
    acc = _ZERO
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def monic(a):
    if not a:
        return []
    lead = a[-1]
    if lead == _ONE:
        return list(a)
    return [x / lead for x in a]


def gcd_monic(a, b):
    """Monic gcd via the Euclidean algorithm; gcd(a, 0) = monic a."""
    a = list(a)
    b = list(b)
    while b:
        # monic remainders keep the coefficient sizes in check
        b = monic(b)
        a, b = b, divmod_(a, b)[1]
    return monic(a)

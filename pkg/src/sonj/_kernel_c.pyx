# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense univariate polynomial kernels, compiled backend.

Semantics are identical to ``sonj._kernel_py``; coefficients are exact
rational Python objects (gmpy2.mpq or Fraction), so the win here is loop
and indexing overhead, not scalar arithmetic.
"""

from sonj.rational import Rat

_ZERO = Rat(0)
_ONE = Rat(1)


def trim(list c):
    cdef Py_ssize_t i = len(c)
    while i and not c[i - 1]:
        i -= 1
    return c[:i]


def add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


def neg(list a):
    return [-x for x in a]


def sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a) + [_ZERO] * (len(b) - len(a))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return trim(out)


def scale(list a, s):
    if not s:
        return []
    return [x * s for x in a]


def mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [_ZERO] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return trim(out)


def divmod_(list a, list b):
    cdef Py_ssize_t i, j, db
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    lead = b[db]
    cdef list q = [_ZERO] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = r[i + db]
        if not c:
            continue
        c = c / lead
        q[i] = c
        for j in range(db + 1):
            r[i + j] = r[i + j] - c * b[j]
    return trim(q), trim(r[:db])


def eval_(list c, x):
    cdef Py_ssize_t i
    acc = _ZERO
    for i in range(len(c) - 1, -1, -1):
        acc = acc * x + c[i]
    return acc


def monic(list a):
    if len(a) == 0:
        return []
    lead = a[len(a) - 1]
    if lead == _ONE:
        return list(a)
    return [x / lead for x in a]


def gcd_monic(list a, list b):
    a = list(a)
    b = list(b)
    while b:
        b = monic(b)
        a, b = b, divmod_(a, b)[1]
    return monic(a)

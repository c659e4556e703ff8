"""Tabulated closed forms for the coupling integral and topology weight.

One entry per symmetry-orbit representative with all labels <= 4, giving
the exact rational function of n for the tetrahedral integral I and for
the full weight c (dimensions included).  These serve as independently
tabulated regression anchors for the ``verify`` suites and the acceptance
tests; they are valid for every n >= 2.
"""

from __future__ import annotations

from functools import lru_cache

from .poly import PolyN


@lru_cache(maxsize=1)
def reference_table():
    """dict: label tuple -> (I expression, c expression), both RatFuncN."""
    n = PolyN.var()
    return {
        (1, 1, 2, 1, 1, 2): (
            4 * (n - 2) / ((n - 1) * n**3 * (n + 2) ** 3),
            (n - 2) * (n - 1) * n / (n + 2),
        ),
        (1, 1, 2, 1, 3, 2): (
            24 / ((n - 1) ** 2 * n * (n + 2) ** 3 * (n + 4)),
            (n - 1) * n**3 / (n + 2),
        ),
        (1, 1, 2, 2, 2, 1): (
            8 * (n - 2) / ((n - 1) ** 2 * n**2 * (n + 2) ** 3),
            (n - 2) * (n - 1) * n / 1,
        ),
        (1, 1, 2, 2, 2, 3): (
            48 * (n - 2) / ((n - 1) ** 3 * n * (n + 2) ** 3 * (n + 4) ** 2),
            (n - 2) * (n - 1) * n**2 / (n + 4),
        ),
        (1, 1, 2, 2, 4, 3): (
            288 / ((n - 1) ** 3 * n * (n + 2) ** 2 * (n + 4) ** 2 * (n + 6)),
            (n - 1) * n**3 * (n + 1) / (2 * (n + 4)),
        ),
        (1, 1, 2, 3, 3, 2): (
            72 * (n - 2) * (n + 1) / ((n - 1) ** 3 * n**2 * (n + 2) ** 3 * (n + 4) ** 2),
            (n - 2) * (n - 1) * n**2 * (n + 1) / (2 * (n + 2)),
        ),
        (1, 1, 2, 3, 3, 4): (
            864 * (n - 2) / ((n - 1) ** 3 * n**3 * (n + 2) * (n + 4) ** 2 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n**2 * (n + 1) / (2 * (n + 6)),
        ),
        (1, 1, 2, 4, 4, 3): (
            1152 * (n - 2) / ((n - 1) ** 3 * n**3 * (n + 1) * (n + 4) ** 2 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 2) / (6 * (n + 4)),
        ),
        (1, 2, 3, 1, 2, 3): (
            72 * (n - 2) / ((n - 1) ** 3 * n * (n + 2) ** 3 * (n + 4) ** 3),
            (n - 2) * (n - 1) * n**3 / (2 * (n + 2) * (n + 4)),
        ),
        (1, 2, 3, 1, 4, 3): (
            864 / ((n - 1) ** 3 * n**2 * (n + 2) * (n + 4) ** 3 * (n + 6)),
            (n - 1) * n**3 * (n + 1) / (2 * (n + 4)),
        ),
        (1, 2, 3, 2, 3, 2): (
            288 * (n - 2) * (n + 1) / ((n - 1) ** 4 * n * (n + 2) ** 3 * (n + 4) ** 3),
            (n - 2) * (n - 1) * n**2 * (n + 1) / (n + 4),
        ),
        (1, 2, 3, 2, 3, 4): (
            1728 * (n - 2) / ((n - 1) ** 4 * n * (n + 2) ** 2 * (n + 4) ** 3 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n**3 * (n + 1) / (2 * (n + 4) * (n + 6)),
        ),
        (1, 2, 3, 3, 2, 3): (
            864 * (n - 2) * (n + 1)
            / ((n - 1) ** 4 * n * (n + 2) ** 3 * (n + 4) ** 3 * (n + 6)),
            (n - 2) * (n - 1) * n**3 * (n + 1) / ((n + 2) * (n + 6)),
        ),
        (1, 2, 3, 3, 4, 3): (
            5184 * (n - 2) / ((n - 1) ** 4 * n**2 * (n + 2) * (n + 4) ** 3 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n**3 * (n + 1) / (2 * (n + 6)),
        ),
        (1, 2, 3, 4, 3, 2): (
            864 * (n - 2) / ((n - 1) ** 4 * n * (n + 2) ** 2 * (n + 4) ** 3 * (n + 6)),
            (n - 2) * (n - 1) * n**3 * (n + 1) / (4 * (n + 4)),
        ),
        (1, 2, 3, 4, 3, 4): (
            20736 * (n - 2)
            / ((n - 1) ** 4 * n**2 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 2 * (n + 8)),
            (n - 2) * (n - 1) * n**3 * (n + 1) * (n + 2) / (2 * (n + 4) * (n + 8)),
        ),
        (1, 3, 4, 1, 3, 4): (
            3456 * (n - 2) / ((n - 1) ** 3 * n**3 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n**3 * (n + 1) / (6 * (n + 4) * (n + 6)),
        ),
        (1, 3, 4, 2, 4, 3): (
            20736 * (n - 2) * (n + 2)
            / ((n - 1) ** 4 * n**3 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 2) ** 2 / (2 * (n + 4) * (n + 6)),
        ),
        (1, 3, 4, 3, 3, 4): (
            62208 * (n - 2)
            / ((n - 1) ** 4 * n**2 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8)),
            (n - 2) * (n - 1) * n**4 * (n + 1) / (2 * (n + 6) * (n + 8)),
        ),
        (1, 3, 4, 4, 4, 3): (
            124416 * (n - 2) * (n + 3)
            / ((n - 1) ** 4 * n**2 * (n + 1) ** 2 * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8)),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 3) / (4 * (n + 4) * (n + 8)),
        ),
        (2, 2, 2, 2, 2, 2): (
            64 * (n - 2) * (n**2 + 4 * n - 24)
            / ((n - 1) ** 5 * (n + 2) ** 3 * (n + 4) ** 3),
            (n - 2) * (n - 1) * (n + 2) ** 3 * (n**2 + 4 * n - 24) / (n + 4) ** 3,
        ),
        (2, 2, 2, 2, 2, 4): (
            768 * (n - 2) * n / ((n - 1) ** 5 * (n + 2) ** 3 * (n + 4) ** 3 * (n + 6)),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 2) ** 2 / (n + 4) ** 3,
        ),
        (2, 2, 2, 2, 4, 4): (
            4608 * (n - 2)
            / ((n - 1) ** 5 * (n + 1) * (n + 2) * (n + 4) ** 3 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 2) ** 3 / (2 * (n + 4) ** 3),
        ),
        (2, 2, 2, 3, 3, 3): (
            864 * (n - 2) * (n + 1) * (n**3 + 8 * n**2 - 28 * n - 48)
            / ((n - 1) ** 5 * n**2 * (n + 2) ** 3 * (n + 4) ** 3 * (n + 6) ** 2),
            (n - 2) * (n - 1) * n * (n + 1) * (n**3 + 8 * n**2 - 28 * n - 48)
            / (2 * (n + 6) ** 2),
        ),
        (2, 2, 2, 4, 4, 4): (
            18432 * (n - 2) * (n**3 + 12 * n**2 - 24 * n - 128)
            / ((n - 1) ** 5 * n**2 * (n + 1) ** 2 * (n + 4) ** 3 * (n + 6) ** 2 * (n + 8) ** 2),
            (n - 2) * (n - 1) * n * (n + 1) * (n + 2) ** 3 * (n + 6)
            * (n**3 + 12 * n**2 - 24 * n - 128)
            / (6 * (n + 4) ** 3 * (n + 8) ** 2),
        ),
        (2, 2, 4, 2, 2, 4): (
            2304 * (n - 2) * n**2
            / ((n - 1) ** 5 * (n + 1) * (n + 2) ** 3 * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 2) / (4 * (n + 4) ** 3 * (n + 6)),
        ),
        (2, 2, 4, 2, 4, 4): (
            55296 * (n - 2)
            / ((n - 1) ** 5 * (n + 1) ** 2 * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8)),
            (n - 2) * (n - 1) * n**3 * (n + 1) * (n + 2) ** 3
            / (2 * (n + 4) ** 3 * (n + 8)),
        ),
        (2, 2, 4, 3, 3, 3): (
            20736 * (n - 2) / ((n - 1) ** 5 * (n + 2) ** 2 * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n**4 * (n + 1) / (n + 6) ** 2,
        ),
        (2, 2, 4, 4, 4, 2): (
            13824 * (n - 2) * n * (n + 3)
            / ((n - 1) ** 5 * (n + 1) ** 2 * (n + 2) ** 2 * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 2) * (n + 3) / (8 * (n + 4) ** 3),
        ),
        (2, 2, 4, 4, 4, 4): (
            663552 * (n - 2) * (n + 3)
            / ((n - 1) ** 5 * (n + 1) ** 3 * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8) ** 2),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 2) ** 2 * (n + 3) * (n + 6)
            / (2 * (n + 4) ** 3 * (n + 8) ** 2),
        ),
        (2, 3, 3, 2, 3, 3): (
            2592 * (n - 2) * (n + 1)
            * (2 * n**4 + 17 * n**3 - 14 * n**2 - 84 * n - 72)
            / ((n - 1) ** 5 * n**3 * (n + 2) ** 3 * (n + 4) ** 3 * (n + 6) ** 3),
            (n - 2) * (n - 1) * n * (n + 1) * (n + 4)
            * (2 * n**4 + 17 * n**3 - 14 * n**2 - 84 * n - 72)
            / (2 * (n + 2) * (n + 6) ** 3),
        ),
        (2, 3, 3, 3, 4, 4): (
            124416 * (n - 2) * (n**3 + 10 * n**2 - 20 * n - 48)
            / ((n - 1) ** 5 * n**3 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8) ** 2),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 2)
            * (n**3 + 10 * n**2 - 20 * n - 48)
            / (2 * (n + 6) * (n + 8) ** 2),
        ),
        (2, 3, 3, 4, 3, 3): (
            15552 * (n - 2) * (n**3 + 11 * n**2 - 48 * n - 36)
            / ((n - 1) ** 5 * n**3 * (n + 2) * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8)),
            (n - 2) * (n - 1) * n**2 * (n + 1) * (n + 4)
            * (n**3 + 11 * n**2 - 48 * n - 36)
            / (4 * (n + 6) ** 2 * (n + 8)),
        ),
        (2, 4, 4, 2, 4, 4): (
            221184 * (n - 2) * (n + 2)
            * (3 * n**4 + 40 * n**3 + 72 * n**2 - 192 * n - 512)
            / ((n - 1) ** 5 * n**3 * (n + 1) ** 3 * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8) ** 3),
            (n - 2) * (n - 1) * n * (n + 1) * (n + 2) ** 3 * (n + 6)
            * (3 * n**4 + 40 * n**3 + 72 * n**2 - 192 * n - 512)
            / (6 * (n + 4) ** 3 * (n + 8) ** 3),
        ),
        (2, 4, 4, 4, 4, 4): (
            3981312 * (n - 2) * (n + 2) * (n + 3) * (n**3 + 14 * n**2 - 16 * n - 128)
            / ((n - 1) ** 5 * n**2 * (n + 1) ** 4 * (n + 4) ** 3 * (n + 6) ** 3
               * (n + 8) ** 3 * (n + 10)),
            (n - 2) * (n - 1) * n**3 * (n + 1) * (n + 2) ** 2 * (n + 3) * (n + 6) ** 2
            * (n**3 + 14 * n**2 - 16 * n - 128)
            / (4 * (n + 4) ** 3 * (n + 8) ** 3 * (n + 10)),
        ),
        (3, 3, 4, 3, 3, 4): (
            186624 * (n - 2) * (4 * n**2 + 37 * n - 50)
            / ((n - 1) ** 5 * n**2 * (n + 1) * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8) ** 3),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 4) * (4 * n**2 + 37 * n - 50)
            / (4 * (n + 6) * (n + 8) ** 3),
        ),
        (3, 3, 4, 4, 4, 3): (
            373248 * (n - 4) * (n - 2) * (n + 3) * (n + 20)
            / ((n - 1) ** 5 * n**2 * (n + 1) ** 2 * (n + 4) ** 3 * (n + 6) ** 3 * (n + 8) ** 3),
            (n - 4) * (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 3) * (n + 20)
            / (8 * (n + 8) ** 3),
        ),
        (4, 4, 4, 4, 4, 4): (
            11943936 * (n - 2) * (n + 3)
            * (n**6 + 43 * n**5 + 400 * n**4 - 212 * n**3 - 6752 * n**2
               - 5888 * n + 15360)
            / ((n - 1) ** 5 * n**2 * (n + 1) ** 5 * (n + 4) ** 3 * (n + 6) ** 3
               * (n + 8) ** 3 * (n + 10) ** 3),
            (n - 2) * (n - 1) * n**4 * (n + 1) * (n + 3) * (n + 6) ** 3
            * (n**6 + 43 * n**5 + 400 * n**4 - 212 * n**3 - 6752 * n**2
               - 5888 * n + 15360)
            / (16 * (n + 4) ** 3 * (n + 8) ** 3 * (n + 10) ** 3),
        ),
    }

"""Polynomial kernel backend selection.

The compiled Cython kernel is preferred when it was built; the pure-Python
twin is the fallback.  ``SONJ_PURE_KERNEL=1`` forces the fallback, which the
benchmark suite uses to compare the two.
"""

from __future__ import annotations

import os

if os.environ.get("SONJ_PURE_KERNEL") == "1":
    from . import _kernel_py as impl

    KERNEL_BACKEND = "pure"
else:
    try:
        from . import _kernel_c as impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "pure"

trim = impl.trim
add = impl.add
neg = impl.neg
sub = impl.sub
scale = impl.scale
mul = impl.mul
divmod_ = impl.divmod_
eval_ = impl.eval_
monic = impl.monic
gcd_monic = impl.gcd_monic

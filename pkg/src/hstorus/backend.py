"""Kernel selection: compiled extension when available, numpy otherwise.

Set HSTORUS_PURE=1 in the environment to force the numpy kernel (used by the
benchmark and the backend parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("HSTORUS_PURE"):
    _impl = _kernels_py
    ACTIVE = "python"
else:
    try:
        from . import _kernels_cy as _impl
        ACTIVE = "cython"
    except ImportError:
        _impl = _kernels_py
        ACTIVE = "python"

eval_sum = _impl.eval_sum


def implementations():
    """Name -> eval_sum for every importable kernel (benchmark/tests)."""
    impls = {"python": _kernels_py.eval_sum}
    try:
        from . import _kernels_cy
        impls["cython"] = _kernels_cy.eval_sum
    except ImportError:
        pass
    return impls

"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it was built and ``HILBSTAIR_KERNELS`` is not
set to ``python``.  ``BACKEND`` names the active choice.
"""
import os

from . import _pure

BACKEND = "python"
_impl = _pure

if os.environ.get("HILBSTAIR_KERNELS", "").lower() != "python":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _pure

classify_weight = _impl.classify_weight
weight_dimensions = _impl.weight_dimensions


def integer_rank(matrix) -> int:
    """Exact rank of an integer matrix.

    The compiled path works in 64-bit integers and signals overflow; the
    big-integer reference path then takes over.
    """
    if _impl is _pure:
        return _pure.integer_rank(matrix)
    try:
        return _impl.integer_rank(matrix)
    except OverflowError:
        return _pure.integer_rank(matrix)


def available_backends() -> dict:
    out = {"python": _pure}
    try:
        from . import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out

"""Kernel backend selection.

The compiled Cython extension is preferred; a bit-identical numpy fallback
is used when it is unavailable.  ``SPECSUB_KERNELS=python`` forces the
fallback (useful for benchmarking and debugging).
"""

import os

from . import _ref
from ._tables import (  # noqa: F401
    FRAC_BITS,
    GUARD_BITS,
    PI_INT,
    TOTAL_BITS,
    atan_table,
    cordic_gain,
    inv_gain_int,
)

try:
    from . import _corecy
except ImportError:
    _corecy = None

if _corecy is not None and os.environ.get("SPECSUB_KERNELS") != "python":
    _impl = _corecy
    BACKEND = "compiled"
else:
    _impl = _ref
    BACKEND = "python"

cordic_vectoring_raw = _impl.cordic_vectoring_raw
cordic_rotation_raw = _impl.cordic_rotation_raw


def available_backends():
    out = {"python": _ref}
    if _corecy is not None:
        out["compiled"] = _corecy
    return out

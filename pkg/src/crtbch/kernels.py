"""LFSR kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``CRTBCH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("CRTBCH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
div_lfsr = _impl.div_lfsr
mul_lfsr = _impl.mul_lfsr


def compiled():
    """The compiled kernel module, or None if it was not built."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels

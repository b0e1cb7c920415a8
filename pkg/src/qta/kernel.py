"""Kernel backend selection.

The compiled extension (_fastkernel, Cython) is preferred when present;
the pure-Python twin (_purekernel) is the fallback.  Set QTA_KERNEL to
"c" or "python" to force a backend; forcing "c" without the extension
installed raises.  Both backends produce bit-identical coefficients.
"""

import os

_requested = os.environ.get("QTA_KERNEL", "").strip().lower()

if _requested in ("", "c", "fast"):
    try:
        from . import _fastkernel as _impl
        BACKEND = "c"
    except ImportError:
        if _requested in ("c", "fast"):
            raise
        from . import _purekernel as _impl
        BACKEND = "python"
elif _requested in ("py", "python", "pure"):
    from . import _purekernel as _impl
    BACKEND = "python"
else:
    raise ValueError(f"QTA_KERNEL={_requested!r}: expected 'c' or 'python'")

insert = _impl.insert
axpy = _impl.axpy

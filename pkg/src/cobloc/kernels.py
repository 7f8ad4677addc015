"""Select the compiled gluing kernels when available.

Set ``COBLOC_PURE=1`` to force the pure-Python fallback.
"""
import os

BACKEND = "python"

if os.environ.get("COBLOC_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import parity_union, trace_cycles  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import parity_union, trace_cycles  # noqa: F401
else:
    from ._kernels_py import parity_union, trace_cycles  # noqa: F401

"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PICBOUNDARY_PURE=1 to force the pure implementation (used by the parity
tests and the benchmark harness).
"""

import os

if os.environ.get("PICBOUNDARY_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
closed_subsets = _impl.closed_subsets
reduce_rows = _impl.reduce_rows

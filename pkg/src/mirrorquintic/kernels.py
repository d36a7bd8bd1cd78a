"""Kernel backend selection.

Imports the compiled series kernels when the extension was built, otherwise
falls back to the pure-Python module.  ``MIRRORQUINTIC_PURE=1`` forces the
fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("MIRRORQUINTIC_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - extension normally built
        from . import _kernels_py as _impl

KERNEL_BACKEND = _impl.BACKEND

mul_trunc = _impl.mul_trunc
mul_coeff = _impl.mul_coeff
inv_trunc = _impl.inv_trunc
exp_trunc = _impl.exp_trunc
log_trunc = _impl.log_trunc

"""Kernel backend selection.

The compiled Cython kernels are used when the extension was built and the
environment variable ``HIGHERTORSION_PURE`` is unset; otherwise the NumPy
fallback takes over.  Both expose the same module-level functions.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

if _kernels_cy is not None and not os.environ.get("HIGHERTORSION_PURE"):
    kernels = _kernels_cy
else:
    kernels = _kernels_py


def backend_name() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return kernels.name


def available_backends():
    out = {"pure": _kernels_py}
    if _kernels_cy is not None:
        out["compiled"] = _kernels_cy
    return out

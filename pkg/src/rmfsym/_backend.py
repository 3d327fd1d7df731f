"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python kernel takes over.  RMFSYM_BACKEND=python forces the
fallback (the benchmark and the backend-equivalence test rely on the
pure module staying importable either way); RMFSYM_BACKEND=cython
insists on the extension and fails loudly if it is missing.
"""

import os

from . import _kernels as _python_kernels

try:
    from . import _kernels_cy as _cython_kernels
except ImportError:
    _cython_kernels = None

_forced = os.environ.get("RMFSYM_BACKEND")
if _forced not in (None, "", "python", "cython"):
    raise RuntimeError(
        f"RMFSYM_BACKEND must be 'python' or 'cython', got {_forced!r}"
    )
if _forced == "cython" and _cython_kernels is None:
    raise RuntimeError(
        "RMFSYM_BACKEND=cython but the compiled kernel is not available; "
        "build the extension or unset the variable"
    )

if _forced == "python" or _cython_kernels is None:
    _active = _python_kernels
    BACKEND = "python"
else:
    _active = _cython_kernels
    BACKEND = "cython"

rmf_apply = _active.rmf_apply


def kernel_backend():
    """Name of the kernel in use: 'cython' or 'python'."""
    return BACKEND

"""Select the compiled kernels when available, else the numpy fallback.

Set ``EK_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("EK_PURE_PYTHON"):
        raise ImportError("fallback forced by EK_PURE_PYTHON")
    from . import _kernels as kernels
    BACKEND = "cython"
except ImportError:
    kernels = _kernels_py
    BACKEND = "python"


def available_backends() -> dict:
    """Map of backend name to kernel module, for tests and benchmarks."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels
        found["cython"] = _kernels
    except ImportError:
        pass
    return found

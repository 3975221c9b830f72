"""Selects the compiled counting kernel, falling back to pure Python."""

import os

if os.environ.get("SCHURQ_PURE"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel_c as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel


def backend_name():
    """Name of the active kernel, "c" or "python"."""
    return kernel.backend_name()

"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module. Set ``DEGENTRIG_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("DEGENTRIG_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = "compiled" if kernels.__name__.endswith("._kernels") else "python"

__all__ = ["kernels", "BACKEND"]

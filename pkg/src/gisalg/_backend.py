"""Kernel backend selection.

Imports the compiled kernels when the extension built, otherwise the pure
twin.  Set GISALG_PURE=1 to force the fallback regardless.
"""

import os

if os.environ.get("GISALG_PURE"):
    from gisalg import _kernels_py as kernels
else:
    try:
        from gisalg import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from gisalg import _kernels_py as kernels

BACKEND = kernels.BACKEND

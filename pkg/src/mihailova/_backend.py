"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``MIHAILOVA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("MIHAILOVA_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        kernels = _pykernels

BACKEND: str = kernels.BACKEND

__all__ = ["kernels", "BACKEND"]

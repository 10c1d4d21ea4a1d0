"""Numerical kernel dispatch.

The compiled Cython module is preferred when importable; a NumPy
implementation with identical semantics is the fallback, so a
plain-Python install still works.  Set ``SPINOR_PHASE_BACKEND=pure`` or
``=native`` to force a choice; forcing ``native`` raises at import time
when the extension is missing instead of silently degrading.
"""

import os

from . import _pure

_requested = os.environ.get("SPINOR_PHASE_BACKEND", "").strip().lower()

if _requested == "pure":
    _impl = _pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "native":
            raise ImportError(
                "SPINOR_PHASE_BACKEND=native, but the compiled extension is "
                "not importable; reinstall with a C compiler available"
            ) from None
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "native"

ensemble_projector_mean = _impl.ensemble_projector_mean
spherical_polygon_area = _impl.spherical_polygon_area

__all__ = ["BACKEND", "ensemble_projector_mean", "spherical_polygon_area"]

"""Enumeration kernel backends.

The compiled extension is used when importable; the pure Python module is the
fallback and the reference semantics.  Set LIECROSS_PURE=1 to force the pure
backend regardless of what is installed.
"""

import os

from . import pure as _pure

if os.environ.get("LIECROSS_PURE"):
    _impl = _pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND
scan_lie_morphisms = _impl.scan_lie_morphisms
scan_derivations = _impl.scan_derivations

__all__ = ["BACKEND", "scan_lie_morphisms", "scan_derivations"]

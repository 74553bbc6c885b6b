"""Scoring backend selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise the pure-Python fallback is used. LOTKARANK_BACKEND=python|cython
forces a backend at import time, set_backend() switches at runtime (used by
tests and the benchmark).
"""
import os

from . import _scoring_py

try:
    from . import _scoring as _compiled
except ImportError:
    _compiled = None

_BACKENDS = {"python": _scoring_py}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled

add_scaled = None
_active_name = None


def set_backend(name: str) -> None:
    global add_scaled, _active_name
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _compiled is None:
        raise ImportError("compiled scoring kernel is not available")
    add_scaled = _BACKENDS[name].add_scaled
    _active_name = name


def backend_name() -> str:
    """Name of the active scoring backend ('cython' or 'python')."""
    return _active_name


_requested = os.environ.get("LOTKARANK_BACKEND", "auto")
if _requested == "auto":
    set_backend("cython" if _compiled is not None else "python")
else:
    set_backend(_requested)

"""Kernel backend selection: compiled extension when available, pure
Python otherwise.

The extension is optional; set BEDARD_PIECES_NO_EXT=1 to force the pure
backend at import time, or call set_backend() at runtime (used by the
benchmark script to compare both).
"""

from __future__ import annotations

import os

from . import _pure

_backends = {"pure": _pure}

if not os.environ.get("BEDARD_PIECES_NO_EXT"):
    try:
        from . import _core
        _backends["cython"] = _core
    except ImportError:
        pass

_active = _backends.get("cython", _pure)

rref = _active.rref
mat_mul = _active.mat_mul
mat_inv = _active.mat_inv


def available_backends():
    return sorted(_backends)


def get_backend() -> str:
    return _active.BACKEND


def set_backend(name: str) -> None:
    """Switch kernels at runtime; raises KeyError for unknown names."""
    global _active, rref, mat_mul, mat_inv
    _active = _backends[name]
    rref = _active.rref
    mat_mul = _active.mat_mul
    mat_inv = _active.mat_inv

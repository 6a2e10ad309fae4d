"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
twin. ``RSKES_BACKEND=python`` forces the fallback at import time.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

MODE_I = _pykernels.MODE_I
MODE_FUSED = _pykernels.MODE_FUSED

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels


def _initial() -> ModuleType:
    wanted = os.environ.get("RSKES_BACKEND", "").strip().lower()
    if wanted in ("", "auto"):
        return BACKENDS.get("cython", _pykernels)
    if wanted not in BACKENDS:
        raise ImportError(f"RSKES_BACKEND={wanted!r} is not available; have {sorted(BACKENDS)}")
    return BACKENDS[wanted]


_active = _initial()


def active() -> str:
    return _active.BACKEND


def set_backend(name: str) -> None:
    global _active
    if name == "auto":
        name = "cython" if "cython" in BACKENDS else "python"
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} is not available; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]


@contextmanager
def using(name: str):
    prev = _active.BACKEND
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def eval_many(f, p, points):
    return _active.eval_many(f, p, points)


def roots_among(f, p, points):
    return _active.roots_among(f, p, points)


def kes_run(f, mode, t, S, psi=()):
    return _active.kes_run(f, mode, t, S, psi)

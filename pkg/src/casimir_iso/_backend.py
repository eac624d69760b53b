"""Kernel backend selection: compiled extension when available, numpy otherwise.

The environment variable CASIMIR_ISO_BACKEND forces a choice:
  "cython"  require the compiled extension (ImportError if missing)
  "python"  force the pure-numpy kernels
  unset     prefer the compiled extension, fall back to numpy
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

_BACKENDS = {"python": _kernels_py}
if _kernels_cy is not None:
    _BACKENDS["cython"] = _kernels_cy


def get_kernels(name):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ImportError(
            f"kernel backend {name!r} not available; have {sorted(_BACKENDS)}"
        ) from None


def available_backends():
    return tuple(sorted(_BACKENDS))


_requested = os.environ.get("CASIMIR_ISO_BACKEND", "").strip().lower()
if _requested in ("", "auto"):
    kernels = _kernels_cy if _kernels_cy is not None else _kernels_py
elif _requested in _BACKENDS:
    kernels = _BACKENDS[_requested]
else:
    raise ImportError(
        f"CASIMIR_ISO_BACKEND={_requested!r} not available; have {sorted(_BACKENDS)}"
    )


def backend_name():
    return "cython" if kernels is _kernels_cy else "python"


@contextmanager
def use_backend(name):
    """Temporarily switch the active kernel backend (tests and benchmarks)."""
    global kernels
    previous = kernels
    kernels = get_kernels(name)
    try:
        yield kernels
    finally:
        kernels = previous

"""Kernel backend selection: compiled extension with pure-Python fallback.

The compiled module (_ckern) is preferred when importable; setting the
environment variable FAULTSPAN_PURE to a non-empty value forces the pure
backend. Both expose the same functions and produce identical results.
"""

import os

from . import _pykern

try:
    from . import _ckern
except ImportError:
    _ckern = None

if os.environ.get("FAULTSPAN_PURE"):
    _active = _pykern
elif _ckern is not None:
    _active = _ckern
else:
    _active = _pykern


def get_backend(name=None):
    """Return a kernel module: the active one, or 'python' / 'c' by name."""
    if name is None:
        return _active
    if name == "python":
        return _pykern
    if name in ("c", "compiled"):
        if _ckern is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckern
    raise ValueError(f"unknown kernel backend: {name!r}")


def available_backends():
    names = ["python"]
    if _ckern is not None:
        names.insert(0, "c")
    return names


def active_implementation():
    return _active.IMPLEMENTATION

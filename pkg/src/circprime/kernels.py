"""Hot-loop backend selection.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python module stands in. Setting ``CIRCPRIME_PURE_PYTHON=1`` forces the
fallback. Every entry point here accepts arbitrary Python ints and routes
values outside the native range to the fallback.
"""

import os

from circprime import _pykernels

_WANT_PURE = os.environ.get("CIRCPRIME_PURE_PYTHON", "").strip() not in ("", "0")

_ext = None
if not _WANT_PURE:
    try:
        from circprime import _ckernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"

# j * a for j, a < n must fit in 64 bits
ORBIT_NATIVE_LIMIT = 1 << 32
# divisor loops step past sqrt(n); keep headroom below 2**64
DIVISION_NATIVE_LIMIT = 1 << 62


def backends():
    """Names of the importable backends, fastest first."""
    names = []
    if _ext is not None:
        names.append("cython")
    names.append("python")
    return names


def get_backend(name=None):
    """Module implementing the kernels for ``name`` (default: the active one)."""
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ext is None:
            raise ImportError("compiled kernels are not built")
        return _ext
    raise ValueError(f"unknown kernel backend {name!r}")


def orbit_labels(n):
    if _ext is not None and n < ORBIT_NATIVE_LIMIT:
        return _ext.orbit_labels(n)
    return _pykernels.orbit_labels(n)


def count_orbits(n):
    if _ext is not None and n < ORBIT_NATIVE_LIMIT:
        return _ext.count_orbits(n)
    return _pykernels.count_orbits(n)


def trial_division(n):
    if _ext is not None and n < DIVISION_NATIVE_LIMIT:
        return _ext.trial_division(n)
    return _pykernels.trial_division(n)


def optimized_trial_division(n):
    if _ext is not None and n < DIVISION_NATIVE_LIMIT:
        return _ext.optimized_trial_division(n)
    return _pykernels.optimized_trial_division(n)

"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
implementation is.  Setting ``SYSTOLIC_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SYSTOLIC_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"


def bfs_distances(indptr, indices, sources, impl=None):
    return (impl or _impl).bfs_distances(indptr, indices, list(sources))


def component_labels(indptr, indices, impl=None):
    return (impl or _impl).component_labels(indptr, indices)


def induced_cycles(indptr, indices, lmax, impl=None):
    if lmax < 4:
        return []
    cycles = (impl or _impl).induced_cycles(indptr, indices, int(lmax))
    return sorted(tuple(int(v) for v in c) for c in cycles)


def implementations():
    """Available backends by name, for benchmarks and cross-checking tests."""
    impls = {"python": _kernels_py}
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        impls["cython"] = _compiled
    return impls

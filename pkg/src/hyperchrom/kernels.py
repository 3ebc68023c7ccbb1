"""Kernel backend selection.

The compiled kernels are used when the extension imports and the
``HYPERCHROM_PURE`` environment variable is unset.  Both backends expose
the same five functions.
"""

import os

from . import _pykernels

try:
    if os.environ.get("HYPERCHROM_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_active = _ckernels if _ckernels is not None else _pykernels

# compiled kernels use uint64 masks; wider inputs take the Python route
_C_MAX_N = 64
_C_MAX_M = 62


def _pick(n, m):
    if _active is _pykernels or n > _C_MAX_N or m > _C_MAX_M:
        return _pykernels
    return _active


def signed_component_counts(n, edges):
    return _pick(n, len(edges)).signed_component_counts(n, list(edges))


def count_colorings(n, edges, q):
    impl = _pick(n, len(edges))
    if impl is not _pykernels and q > 1 and q ** n >= 2**62:
        impl = _pykernels
    return impl.count_colorings(n, list(edges), q)


def partition_profile(n, edges):
    return _pick(n, len(edges)).partition_profile(n, list(edges))


def admissible_counts(n, edges):
    return _pick(n, len(edges)).admissible_counts(n, list(edges))


def hyperforest_table(edges):
    m = len(edges)
    impl = _pykernels if m > 40 else _pick(0, m)
    return impl.hyperforest_table(list(edges))


def backends():
    """Available kernel modules keyed by name (used by tests and the benchmark)."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out

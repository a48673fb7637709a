"""Kernel dispatch: numba-compiled loops or pure-numpy fallbacks.

The compiled path is used when numba imports cleanly and the
environment variable PRTAIL_DISABLE_NUMBA is unset (or set to one of
"", "0", "false"). Set PRTAIL_DISABLE_NUMBA=1 to force the numpy path.

Both paths produce bitwise-identical results: the vectorized fallbacks
(np.bincount) accumulate float64 values in the same order as the
explicit loops, and the growth kernel runs the very same source either
compiled or interpreted. The numpy fallback of the growth kernel
temporarily seeds the global legacy RandomState and restores it
afterwards; the compiled variant keeps its own internal state.

benchmarks/bench_kernels.py times the two paths against each other via
get_impls().
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _flag_disabled() -> bool:
    return os.environ.get("PRTAIL_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false")


USE_NUMBA = HAVE_NUMBA and not _flag_disabled()


def backend() -> str:
    """Name of the active kernel path, 'numba' or 'numpy'."""
    return "numba" if USE_NUMBA else "numpy"


def _edge_push_numpy(src, dst, node_weight, n):
    if src.shape[0] == 0:
        return np.zeros(n)
    return np.bincount(dst, weights=node_weight[src], minlength=n)


def _segment_sums_numpy(pool, idx, counts):
    n = counts.shape[0]
    if idx.shape[0] == 0:
        return np.zeros(n)
    seg = np.repeat(np.arange(n, dtype=np.int64), counts)
    return np.bincount(seg, weights=pool[idx], minlength=n)


def _gn_links_numpy(n, d, beta, seed):
    state = np.random.get_state()
    try:
        return _kernels.gn_links_loop(n, d, beta, seed)
    finally:
        np.random.set_state(state)


_NUMPY_IMPLS = {
    "edge_push": _edge_push_numpy,
    "segment_sums": _segment_sums_numpy,
    "gn_links": _gn_links_numpy,
}

_numba_impls: dict | None = None


def _build_numba_impls() -> dict:
    global _numba_impls
    if _numba_impls is None:
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available in this environment")
        jit = njit(cache=True)
        _numba_impls = {
            "edge_push": jit(_kernels.edge_push_loop),
            "segment_sums": jit(_kernels.segment_sums_loop),
            "gn_links": jit(_kernels.gn_links_loop),
        }
    return _numba_impls


def get_impls(which: str) -> dict:
    """Kernel table for an explicit path, 'numba' or 'numpy'."""
    if which == "numpy":
        return _NUMPY_IMPLS
    if which == "numba":
        return _build_numba_impls()
    raise ValueError(f"unknown kernel path {which!r}")


def edge_push(src, dst, node_weight, n):
    return get_impls(backend())["edge_push"](src, dst, node_weight, n)


def segment_sums(pool, idx, counts):
    return get_impls(backend())["segment_sums"](pool, idx, counts)


def gn_links(n, d, beta, seed):
    return get_impls(backend())["gn_links"](n, d, beta, seed)

"""Commute-time kernel selection.

The compiled Cython kernel is used when its extension module imported
successfully; otherwise the vectorized NumPy fallback takes over.  Both
produce bit-identical moments for the same seed.  Set ``RESCURV_NO_EXT=1``
to force the fallback (the equivalence tests and the benchmark do).
"""

from __future__ import annotations

import os

import numpy as np

from .graph import WeightedGraph

if os.environ.get("RESCURV_NO_EXT") == "1":
    from . import _commute_py as _impl

    _KERNEL = "python"
else:
    try:
        from . import _commute as _impl  # type: ignore[attr-defined]

        _KERNEL = "compiled"
    except ImportError:
        from . import _commute_py as _impl

        _KERNEL = "python"


def kernel_name() -> str:
    return _KERNEL


def using_compiled_kernel() -> bool:
    return _KERNEL == "compiled"


def adjacency_csr(g: WeightedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Neighbor lists in CSR layout (int32 indptr, int32 neighbor ids)."""
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    for u, v, _ in g.edges:
        indptr[u + 1] += 1
        indptr[v + 1] += 1
    indptr = np.cumsum(indptr, dtype=np.int32)
    nbrs = np.zeros(int(indptr[-1]), dtype=np.int32)
    fill = indptr[:-1].copy()
    for u, v, _ in g.edges:
        nbrs[fill[u]] = v
        fill[u] += 1
        nbrs[fill[v]] = u
        fill[v] += 1
    return indptr, nbrs


def commute_moments(
    indptr: np.ndarray, nbrs: np.ndarray, start: int, target: int, walks: int, seed: int
) -> tuple[int, int]:
    """Dispatch to the active kernel; see the kernel docstrings."""
    return _impl.commute_moments(indptr, nbrs, start, target, walks, seed)

"""Shared input coercion for the batch kernels."""

from __future__ import annotations

import numpy as np


def as_table_stack(tables) -> np.ndarray:
    """Coerce to a C-contiguous (m, n, n) int64 stack of operation tables."""
    arr = np.ascontiguousarray(tables, dtype=np.int64)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(f"expected shape (m, n, n), got {arr.shape}")
    n = arr.shape[1]
    if n < 1:
        raise ValueError("tables need at least one element")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"table entries out of range [0, {n})")
    return arr


def as_adjacency(adjacency, n: int) -> np.ndarray:
    """Coerce to an (n, n) boolean adjacency matrix with an empty diagonal."""
    adj = np.ascontiguousarray(adjacency, dtype=np.bool_)
    if adj.shape != (n, n):
        raise ValueError(f"expected adjacency shape ({n}, {n}), got {adj.shape}")
    if adj.diagonal().any() or not np.array_equal(adj, adj.T):
        raise ValueError("adjacency must be symmetric with an empty diagonal")
    return adj

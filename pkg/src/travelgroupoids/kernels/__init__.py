"""Batch axiom kernels over stacks of operation tables.

These are the hot loops behind the bulk scans (all tables on n
elements, oracle populations, acceptance sweeps). Two interchangeable
backends exist: numba-jitted loops (default when numba imports) and a
pure-numpy vectorized fallback. Select explicitly with

    TRAVELGROUPOIDS_KERNELS=numba   # or: numpy

set in the environment before import.
"""

from __future__ import annotations

import os

import numpy as np

BACKEND_ENV = "TRAVELGROUPOIDS_KERNELS"

# generating more than this many tables at once is refused
MAX_TABLES = 50_000_000


def _load_impl(choice: str | None):
    choice = (choice or "auto").strip().lower() or "auto"
    if choice == "auto":
        try:
            from . import _numba as impl
        except ImportError:
            from . import _numpy as impl
        return impl
    if choice == "numba":
        from . import _numba as impl

        return impl
    if choice == "numpy":
        from . import _numpy as impl

        return impl
    raise ValueError(
        f"unrecognized {BACKEND_ENV} value {choice!r}; use 'numba' or 'numpy'"
    )


_impl = _load_impl(os.environ.get(BACKEND_ENV))

t1_mask = _impl.t1_mask
t2_mask = _impl.t2_mask
t3_mask = _impl.t3_mask
t4_mask = _impl.t4_mask
t5_mask = _impl.t5_mask
r1_mask = _impl.r1_mask
r2_mask = _impl.r2_mask
on_graph_mask = _impl.on_graph_mask


def backend() -> str:
    """Name of the active backend ('numba' or 'numpy')."""
    return _impl.NAME


def all_tables(n: int) -> np.ndarray:
    """Every operation table on n elements as an (n**(n*n), n, n) stack.

    Tables appear in lexicographic order of the flattened rows. Only
    sensible for n <= 3 (3**9 = 19,683 tables; n = 4 would need 4**16).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    count = n ** (n * n)
    if count > MAX_TABLES:
        raise ValueError(f"{count} tables on {n} elements will not fit in memory")
    index = np.arange(count, dtype=np.int64)
    place = n ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    digits = (index[:, None] // place[None, :]) % n
    return digits.reshape(count, n, n)


def random_tables(n: int, count: int, seed: int = 0) -> np.ndarray:
    """Uniformly random (count, n, n) stack, for tests and benchmarks."""
    rng = np.random.default_rng(seed)
    return rng.integers(0, n, size=(count, n, n), dtype=np.int64)

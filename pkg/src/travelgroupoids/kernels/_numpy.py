"""Pure-numpy batch kernels: vectorized scans over stacks of tables.

Every mask function takes an (m, n, n) stack and returns an (m,) boolean
array, True where the table satisfies the axiom. Intermediates are at
most (m, n, n, n), so keep batches modest for large n.
"""

from __future__ import annotations

import numpy as np

from ._common import as_adjacency, as_table_stack

NAME = "numpy"


def t1_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    k = np.arange(m)[:, None, None]
    u = np.arange(n)[None, :, None]
    # (u*v)*u over all pairs at once
    return (t[k, t, u] == u).all(axis=(1, 2))


def t2_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    k = np.arange(m)[:, None, None]
    u = np.arange(n)[None, :, None]
    v = np.arange(n)[None, None, :]
    bad = (t[k, t, v] == u) & (u != v)
    return ~bad.any(axis=(1, 2))


def t3_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    k = np.arange(m)[:, None, None]
    u = np.arange(n)[None, :, None]
    vu = t.transpose(0, 2, 1)  # [k, u, v] -> v*u
    fired = vu != u
    agrees = t[k, u, vu] == t
    return (~fired | agrees).all(axis=(1, 2))


def t4_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    k = np.arange(m)[:, None, None, None]
    u = np.arange(n)[None, :, None, None]
    v = np.arange(n)[None, None, :, None]
    w = np.arange(n)[None, None, None, :]
    uv = t[k, u, v]
    uw = t[k, u, w]
    vw = t[k, v, w]
    fired = uv == uw
    agrees = t[k, u, vw] == uv
    return (~fired | agrees).all(axis=(1, 2, 3))


def t5_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    k = np.arange(m)[:, None, None, None]
    u = np.arange(n)[None, :, None, None]
    v = np.arange(n)[None, None, :, None]
    w = np.arange(n)[None, None, None, :]
    uv = t[k, u, v]
    uw = t[k, u, w]
    vw = t[k, v, w]
    vww = t[k, vw, w]
    fired = uv == uw
    agrees = (t[k, u, vw] == uv) | (t[k, u, vww] == uv)
    return (~fired | agrees).all(axis=(1, 2, 3))


def r1_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    values = np.arange(n)
    # fiber V[u][v] nonempty  <=>  some w has u*w = v
    nonempty = (t[:, :, :, None] == values).any(axis=2)
    vu = t.transpose(0, 2, 1)  # [k, u, v] -> v*u
    ok = ~nonempty | (vu == values[None, :, None])
    return ok.all(axis=(1, 2))


def r2_mask(tables) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    values = np.arange(n)
    in_uv = t[:, :, None, :] == values[None, None, :, None]  # [k, u, v, w]: u*w == v
    in_vu = in_uv.transpose(0, 2, 1, 3)  # [k, u, v, w]: v*w == u
    overlap = (in_uv & in_vu).any(axis=3)
    offdiag = ~np.eye(n, dtype=bool)
    return ~(overlap & offdiag).any(axis=(1, 2))


def on_graph_mask(tables, adjacency) -> np.ndarray:
    t = as_table_stack(tables)
    m, n, _ = t.shape
    adj = as_adjacency(adjacency, n)
    fwd = t == np.arange(n)[None, None, :]  # u*v == v
    edge = fwd | fwd.transpose(0, 2, 1)  # either orientation
    offdiag = ~np.eye(n, dtype=bool)
    return ((edge == adj) | ~offdiag).all(axis=(1, 2))

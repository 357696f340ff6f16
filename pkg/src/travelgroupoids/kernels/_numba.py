"""Numba-jitted batch kernels: per-table loops with early exit.

Same contracts as the numpy backend; first call pays JIT compilation
(cached on disk afterwards).
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._common import as_adjacency, as_table_stack

NAME = "numba"


@njit(cache=True)
def _t1(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                if t[i, t[i, u, v], u] != u:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _t2(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                if u != v and t[i, t[i, u, v], v] == u:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _t3(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                vu = t[i, v, u]
                if vu != u and t[i, u, vu] != t[i, u, v]:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _t4(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                uv = t[i, u, v]
                for w in range(n):
                    if uv == t[i, u, w] and t[i, u, t[i, v, w]] != uv:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _t5(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                uv = t[i, u, v]
                for w in range(n):
                    if uv != t[i, u, w]:
                        continue
                    vw = t[i, v, w]
                    if t[i, u, vw] != uv and t[i, u, t[i, vw, w]] != uv:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _r1(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(n):
                nonempty = False
                for w in range(n):
                    if t[i, u, w] == v:
                        nonempty = True
                        break
                if nonempty and t[i, v, u] != u:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _r2(t, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                for w in range(n):
                    if t[i, u, w] == v and t[i, v, w] == u:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        out[i] = ok


@njit(cache=True)
def _on_graph(t, adj, out):
    m, n, _ = t.shape
    for i in range(m):
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                edge = t[i, u, v] == v or t[i, v, u] == u
                if edge != adj[u, v]:
                    ok = False
                    break
            if not ok:
                break
        out[i] = ok


def _run(kernel, tables):
    t = as_table_stack(tables)
    out = np.empty(t.shape[0], dtype=np.bool_)
    kernel(t, out)
    return out


def t1_mask(tables) -> np.ndarray:
    return _run(_t1, tables)


def t2_mask(tables) -> np.ndarray:
    return _run(_t2, tables)


def t3_mask(tables) -> np.ndarray:
    return _run(_t3, tables)


def t4_mask(tables) -> np.ndarray:
    return _run(_t4, tables)


def t5_mask(tables) -> np.ndarray:
    return _run(_t5, tables)


def r1_mask(tables) -> np.ndarray:
    return _run(_r1, tables)


def r2_mask(tables) -> np.ndarray:
    return _run(_r2, tables)


def on_graph_mask(tables, adjacency) -> np.ndarray:
    t = as_table_stack(tables)
    adj = as_adjacency(adjacency, t.shape[1])
    out = np.empty(t.shape[0], dtype=np.bool_)
    _on_graph(t, adj, out)
    return out

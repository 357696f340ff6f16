"""T-partition systems: vertex-subset families indexed by ordered pairs.

A system assigns to every ordered pair (u, v) a cell V[u][v] of vertices.
On a graph G it is a T-partition system when

    (P0)   {V[u][v] : v in N_G[u]} partitions the vertex set, for every u
    (P1a)  V[u][u] = {u}
    (P1b)  v in V[u][v]   iff  {u, v} is an edge          (u != v)
    (P1c)  V[u][v] empty  iff  {u, v} is not an edge      (u != v)
    (P2)   V[u][v] and V[v][u] are disjoint               (u != v)

The right translation system of an operation table puts w into V[u][v]
exactly when u*w = v; under (P0)-(P2) that correspondence inverts via
the associated groupoid (u*v = the unique w with v in V[u][w]).

Three refinements mirror the simple/smooth/semi-smooth table axioms:

    (R3)  u in V[v][x], v in V[u][y], u != x, v != y
              implies  x in V[u][y] and y in V[v][x]
    (R4)  x, y in V[u][v] and x in V[y][z]  implies  z in V[u][v]
    (R5)  x, y in V[u][v] and x in V[y][z], x in V[z][w]
              implies  z in V[u][v] or w in V[u][v]

(R4) and (R5) are stated here with the hypothesis on x; swapping the
roles of x and y gives a second literal reading (hypothesis on y).
Because x and y range over the same cell, the two readings are
renamings of each other; both are implemented and checked against each
other rather than assumed equal.
"""

from __future__ import annotations

import itertools
import json

from .graphs import Graph
from .groupoids import (
    DEFAULT_WITNESS_LIMIT,
    AxiomReport,
    OpTable,
    _report,
)

READINGS = ("statement", "proof")


class SystemFormatError(ValueError):
    """Malformed T-partition-system file."""


class TPartitionSystem:
    """Immutable cell family; cells[u][v] is a sorted vertex tuple."""

    __slots__ = ("n", "cells", "_sets", "_validated_on")

    def __init__(self, n: int, cells):
        if n < 1:
            raise ValueError("a system needs at least one vertex")
        cells = list(cells)
        if len(cells) != n:
            raise ValueError(f"expected {n} cell rows, found {len(cells)}")
        normalized: list[tuple[tuple[int, ...], ...]] = []
        sets: list[tuple[frozenset[int], ...]] = []
        for u, row in enumerate(cells):
            row = list(row)
            if len(row) != n:
                raise ValueError(f"cell row {u} has {len(row)} cells, expected {n}")
            norm_row = []
            set_row = []
            for v, cell in enumerate(row):
                members = sorted(int(w) for w in cell)
                for w in members:
                    if not 0 <= w < n:
                        raise ValueError(
                            f"cell ({u}, {v}) member {w} out of range [0, {n})"
                        )
                if len(set(members)) != len(members):
                    raise ValueError(f"cell ({u}, {v}) repeats a member")
                norm_row.append(tuple(members))
                set_row.append(frozenset(members))
            normalized.append(tuple(norm_row))
            sets.append(tuple(set_row))
        self.n = n
        self.cells = tuple(normalized)
        self._sets = tuple(sets)
        self._validated_on: Graph | None = None

    def cell(self, u: int, v: int) -> tuple[int, ...]:
        """Sorted members of V[u][v]."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"pair ({u}, {v}) out of range for n={self.n}")
        return self.cells[u][v]

    def members(self, u: int, v: int) -> frozenset[int]:
        return self._sets[u][v]

    def validated_on(self) -> Graph | None:
        """The graph this system was last fully validated against, if any."""
        return self._validated_on

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TPartitionSystem)
            and self.n == other.n
            and self.cells == other.cells
        )

    def __hash__(self) -> int:
        return hash((self.n, self.cells))

    def __repr__(self) -> str:
        return f"TPartitionSystem(n={self.n}, cells={[list(map(list, r)) for r in self.cells]!r})"


def parse_system(text: str) -> TPartitionSystem:
    """Parse the JSON object format (see render_system). Strictly validated."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SystemFormatError("top level must be an object")
    unknown = set(obj) - {"n", "cells"}
    if unknown:
        raise SystemFormatError(f"unknown keys {sorted(unknown)}")
    if "n" not in obj or "cells" not in obj:
        raise SystemFormatError("object must have keys 'n' and 'cells'")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SystemFormatError("'n' must be a positive integer")
    cells = obj["cells"]
    if not isinstance(cells, list) or len(cells) != n:
        raise SystemFormatError(f"'cells' must be a list of {n} rows")
    for u, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != n:
            raise SystemFormatError(f"cells[{u}] must be a list of {n} cells")
        for v, cell in enumerate(row):
            if not isinstance(cell, list):
                raise SystemFormatError(f"cells[{u}][{v}] must be a list")
            for w in cell:
                if isinstance(w, bool) or not isinstance(w, int):
                    raise SystemFormatError(
                        f"cells[{u}][{v}] member {w!r} is not an integer"
                    )
                if not 0 <= w < n:
                    raise SystemFormatError(
                        f"cells[{u}][{v}] member {w} out of range [0, {n})"
                    )
            if any(a >= b for a, b in zip(cell, cell[1:])):
                raise SystemFormatError(
                    f"cells[{u}][{v}] must be strictly ascending"
                )
    return TPartitionSystem(n, cells)


def render_system(s: TPartitionSystem) -> str:
    """Canonical one-line JSON; parse_system(render_system(s)) == s."""
    payload = {"n": s.n, "cells": [[list(c) for c in row] for row in s.cells]}
    return json.dumps(payload, separators=(",", ":"))


def right_translation_system(t: OpTable) -> TPartitionSystem:
    """Fiber family of the table: w lands in V[u][v] exactly when u*w = v.

    The result is raw (not validated against any graph); for each u the
    nonempty cells partition the vertex set by construction.
    """
    n = t.n
    rows = t.rows()
    cells: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
    for u in range(n):
        for w in range(n):
            cells[u][rows[u][w]].append(w)
    return TPartitionSystem(n, cells)


def check_R1(
    s: TPartitionSystem, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """Nonempty V[u][v] forces u into V[v][u]. Witnesses are pairs (u, v)."""
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(s.n), repeat=2):
        if s.cells[u][v] and u not in s._sets[v][u]:
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("R1", witnesses)


def _disjointness_witnesses(s: TPartitionSystem, witness_limit: int):
    witnesses: list[tuple[int, ...]] = []
    for u in range(s.n):
        for v in range(u + 1, s.n):
            for w in sorted(s._sets[u][v] & s._sets[v][u]):
                witnesses.append((u, v, w))
                if len(witnesses) >= witness_limit:
                    return witnesses
    return witnesses


def check_R2(
    s: TPartitionSystem, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """V[u][v] and V[v][u] are disjoint for u != v. Witnesses (u, v, w)."""
    return _report("R2", _disjointness_witnesses(s, witness_limit))


def is_travel_groupoid_via_translation(t: OpTable) -> bool:
    """The (R1) and (R2) route to the travel-groupoid test.

    Must agree with the (t1) and (t2) route on every table; the two are
    kept separate so tests can compare them.
    """
    s = right_translation_system(t)
    return check_R1(s, witness_limit=1).holds and check_R2(s, witness_limit=1).holds


def _require_same_size(s: TPartitionSystem, g: Graph) -> None:
    if s.n != g.n:
        raise ValueError(f"size mismatch: system has n={s.n}, graph has n={g.n}")


def check_P0(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """For each u the cells indexed by N_G[u] cover every vertex exactly once.

    Witnesses are pairs (u, w) where w is covered zero or several times.
    Emptiness of neighbor cells is (P1b)'s business, not checked here.
    """
    _require_same_size(s, g)
    witnesses: list[tuple[int, ...]] = []
    for u in range(s.n):
        coverage = [0] * s.n
        for v in sorted(g.closed_neighborhood(u)):
            for w in s.cells[u][v]:
                coverage[w] += 1
        for w, count in enumerate(coverage):
            if count != 1:
                witnesses.append((u, w))
                if len(witnesses) >= witness_limit:
                    return _report("P0", witnesses)
    return _report("P0", witnesses)


def check_P1a(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """V[u][u] = {u} for every u. Witnesses are single vertices (u,)."""
    _require_same_size(s, g)
    witnesses: list[tuple[int, ...]] = []
    for u in range(s.n):
        if s.cells[u][u] != (u,):
            witnesses.append((u,))
            if len(witnesses) >= witness_limit:
                break
    return _report("P1a", witnesses)


def check_P1b(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """v lies in V[u][v] exactly when {u, v} is an edge. Witnesses (u, v)."""
    _require_same_size(s, g)
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(s.n), repeat=2):
        if u != v and (v in s._sets[u][v]) != g.has_edge(u, v):
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("P1b", witnesses)


def check_P1c(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """V[u][v] is empty exactly when {u, v} is a non-edge. Witnesses (u, v)."""
    _require_same_size(s, g)
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(s.n), repeat=2):
        if u != v and (not s.cells[u][v]) != (not g.has_edge(u, v)):
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("P1c", witnesses)


def check_P2(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """Same disjointness as (R2), stated for systems on a graph."""
    _require_same_size(s, g)
    return _report("P2", _disjointness_witnesses(s, witness_limit))


PARTITION_AXIOMS = ("P0", "P1a", "P1b", "P1c", "P2")

_PARTITION_CHECKERS = {
    "P0": check_P0,
    "P1a": check_P1a,
    "P1b": check_P1b,
    "P1c": check_P1c,
    "P2": check_P2,
}


def partition_reports(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> list[AxiomReport]:
    """All five defining conditions, in P0..P2 order."""
    return [
        _PARTITION_CHECKERS[name](s, g, witness_limit) for name in PARTITION_AXIOMS
    ]


def is_tpartition_system(s: TPartitionSystem, g: Graph) -> bool:
    """True iff (P0), (P1a), (P1b), (P1c) and (P2) all hold on g.

    On success the system remembers g as its validated graph.
    """
    for name in PARTITION_AXIOMS:
        if not _PARTITION_CHECKERS[name](s, g, witness_limit=1).holds:
            return False
    s._validated_on = g
    return True


def associated_groupoid(s: TPartitionSystem, g: Graph) -> OpTable:
    """Read the system back as a table: u*v = the unique w with v in V[u][w].

    Raises if some v lies in zero or several cells of the family at u,
    which cannot happen on a validated system.
    """
    _require_same_size(s, g)
    n = s.n
    rows = [[0] * n for _ in range(n)]
    for u, v in itertools.product(range(n), repeat=2):
        hits = [w for w in range(n) if v in s._sets[u][w]]
        if len(hits) != 1:
            raise ValueError(
                f"structural error at (u={u}, v={v}): vertex {v} lies in "
                f"{len(hits)} cells of the family at {u}, expected exactly 1"
            )
        rows[u][v] = hits[0]
    return OpTable(rows)


def check_R3(
    s: TPartitionSystem, g: Graph, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """Simple-system condition. Witnesses are 4-tuples (u, v, x, y)."""
    _require_same_size(s, g)
    witnesses: list[tuple[int, ...]] = []
    n = s.n
    for u, v, x, y in itertools.product(range(n), repeat=4):
        if u == x or v == y:
            continue
        if u not in s._sets[v][x] or v not in s._sets[u][y]:
            continue
        if x not in s._sets[u][y] or y not in s._sets[v][x]:
            witnesses.append((u, v, x, y))
            if len(witnesses) >= witness_limit:
                break
    return _report("R3", witnesses)


def _r4_witnesses(s: TPartitionSystem, reading: str, witness_limit: int):
    n = s.n
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(n), repeat=2):
        cell = s._sets[u][v]
        for x, y in itertools.product(sorted(cell), repeat=2):
            for z in range(n):
                if z in cell:
                    continue
                fired = x in s._sets[y][z] if reading == "statement" else y in s._sets[x][z]
                if fired:
                    witnesses.append((u, v, x, y, z))
                    if len(witnesses) >= witness_limit:
                        return witnesses
    return witnesses


def check_R4(
    s: TPartitionSystem,
    g: Graph,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    reading: str = "statement",
) -> AxiomReport:
    """Smooth-system condition. Witnesses are 5-tuples (u, v, x, y, z).

    ``reading`` picks which of x, y carries the V[.][z] hypothesis; the
    two readings rename each other and must agree.
    """
    _require_same_size(s, g)
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    witnesses = _r4_witnesses(s, reading, witness_limit)
    if __debug__:
        other = READINGS[1 - READINGS.index(reading)]
        assert bool(witnesses) == bool(_r4_witnesses(s, other, 1)), (
            "the two literal readings of the smooth condition disagree"
        )
    return _report("R4", witnesses)


def _r5_witnesses(s: TPartitionSystem, reading: str, witness_limit: int):
    n = s.n
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(n), repeat=2):
        cell = s._sets[u][v]
        for x, y in itertools.product(sorted(cell), repeat=2):
            pivot = x if reading == "statement" else y
            other = y if reading == "statement" else x
            for z in range(n):
                if pivot not in s._sets[other][z]:
                    continue
                for w in range(n):
                    if z in cell or w in cell:
                        continue
                    if pivot in s._sets[z][w]:
                        witnesses.append((u, v, x, y, z, w))
                        if len(witnesses) >= witness_limit:
                            return witnesses
    return witnesses


def check_R5(
    s: TPartitionSystem,
    g: Graph,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    reading: str = "statement",
) -> AxiomReport:
    """Semi-smooth-system condition. Witnesses are (u, v, x, y, z, w)."""
    _require_same_size(s, g)
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    witnesses = _r5_witnesses(s, reading, witness_limit)
    if __debug__:
        other = READINGS[1 - READINGS.index(reading)]
        assert bool(witnesses) == bool(_r5_witnesses(s, other, 1)), (
            "the two literal readings of the semi-smooth condition disagree"
        )
    return _report("R5", witnesses)

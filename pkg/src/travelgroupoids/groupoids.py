"""Operation tables and the travel-groupoid axioms.

A travel groupoid is a finite magma (V, *) satisfying

    (t1)  (u*v)*u = u                      for all u, v
    (t2)  (u*v)*v = u  implies  u = v      for all u, v

with three refinements constraining how products toward different
targets interact:

    (t3, simple)       v*u != u  implies  u*(v*u) = u*v
    (t4, smooth)       u*v = u*w  implies  u*(v*w) = u*v
    (t5, semi-smooth)  u*v = u*w  implies  u*(v*w) = u*v
                                           or u*((v*w)*w) = u*v

Every checker returns an AxiomReport whose witnesses replay the
violation under the definition above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

DEFAULT_WITNESS_LIMIT = 100


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check over a table or cell system."""

    axiom: str
    holds: bool
    witnesses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.holds != (len(self.witnesses) == 0):
            raise ValueError("holds must agree with witnesses being empty")

    def __bool__(self) -> bool:
        return self.holds


def _report(axiom: str, witnesses: list[tuple[int, ...]]) -> AxiomReport:
    return AxiomReport(axiom, not witnesses, tuple(witnesses))


class TableFormatError(ValueError):
    """Malformed operation-table file. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class OpTable:
    """Square table of vertex indices; entry (u, v) is the product u*v."""

    __slots__ = ("n", "_array", "_rows")

    def __init__(self, rows):
        array = np.array(rows, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError("operation table must be square")
        n = int(array.shape[0])
        if n < 1:
            raise ValueError("operation table needs at least one element")
        for u in range(n):
            for v in range(n):
                entry = int(array[u, v])
                if not 0 <= entry < n:
                    raise ValueError(
                        f"entry ({u}, {v}) = {entry} out of range [0, {n})"
                    )
        array.setflags(write=False)
        self.n = n
        self._array = array
        self._rows = tuple(tuple(int(x) for x in row) for row in array)

    @property
    def array(self) -> np.ndarray:
        """Read-only (n, n) int64 view of the table."""
        return self._array

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def star(self, u: int, v: int) -> int:
        """The product u*v."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"pair ({u}, {v}) out of range for n={self.n}")
        return self._rows[u][v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OpTable)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"OpTable({[list(r) for r in self._rows]!r})"


def parse_table(text: str) -> OpTable:
    """Parse the row-per-line table format (see render_table)."""
    n: int | None = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise TableFormatError("expected header 'n <count>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise TableFormatError(
                    f"element count {tokens[1]!r} is not an integer", lineno
                ) from None
            if n < 1:
                raise TableFormatError("element count must be at least 1", lineno)
            continue
        if len(rows) == n:
            raise TableFormatError(f"more than {n} table rows", lineno)
        if len(tokens) != n:
            raise TableFormatError(
                f"expected {n} entries, found {len(tokens)}", lineno
            )
        try:
            row = [int(tok) for tok in tokens]
        except ValueError:
            raise TableFormatError(
                f"table entries {line!r} are not integers", lineno
            ) from None
        for v, entry in enumerate(row):
            if not 0 <= entry < n:
                raise TableFormatError(
                    f"entry ({len(rows)}, {v}) = {entry} out of range [0, {n})",
                    lineno,
                )
        rows.append(row)
    if n is None:
        raise TableFormatError("missing header 'n <count>'")
    if len(rows) != n:
        raise TableFormatError(f"expected {n} table rows, found {len(rows)}")
    return OpTable(rows)


def render_table(t: OpTable) -> str:
    """Canonical text form; parse_table(render_table(t)) == t."""
    lines = [f"n {t.n}"]
    lines.extend(" ".join(str(x) for x in row) for row in t.rows())
    return "\n".join(lines) + "\n"


def check_t1(t: OpTable, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """(u*v)*u = u for all u, v. Witnesses are offending pairs (u, v)."""
    rows = t.rows()
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(t.n), repeat=2):
        if rows[rows[u][v]][u] != u:
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("t1", witnesses)


def check_t2(t: OpTable, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """(u*v)*v = u only when u = v. Witnesses are pairs (u, v) with u != v."""
    rows = t.rows()
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(t.n), repeat=2):
        if u != v and rows[rows[u][v]][v] == u:
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("t2", witnesses)


def check_simple(t: OpTable, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """v*u != u implies u*(v*u) = u*v. Witnesses are pairs (u, v)."""
    rows = t.rows()
    witnesses: list[tuple[int, ...]] = []
    for u, v in itertools.product(range(t.n), repeat=2):
        vu = rows[v][u]
        if vu != u and rows[u][vu] != rows[u][v]:
            witnesses.append((u, v))
            if len(witnesses) >= witness_limit:
                break
    return _report("t3", witnesses)


def check_smooth(t: OpTable, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> AxiomReport:
    """u*v = u*w implies u*(v*w) = u*v. Witnesses are triples (u, v, w)."""
    rows = t.rows()
    witnesses: list[tuple[int, ...]] = []
    for u, v, w in itertools.product(range(t.n), repeat=3):
        if rows[u][v] == rows[u][w] and rows[u][rows[v][w]] != rows[u][v]:
            witnesses.append((u, v, w))
            if len(witnesses) >= witness_limit:
                break
    return _report("t4", witnesses)


def check_semismooth(
    t: OpTable, witness_limit: int = DEFAULT_WITNESS_LIMIT
) -> AxiomReport:
    """u*v = u*w implies u*(v*w) = u*v or u*((v*w)*w) = u*v.

    Witnesses are triples (u, v, w).
    """
    rows = t.rows()
    witnesses: list[tuple[int, ...]] = []
    for u, v, w in itertools.product(range(t.n), repeat=3):
        target = rows[u][v]
        if target != rows[u][w]:
            continue
        vw = rows[v][w]
        if rows[u][vw] != target and rows[u][rows[vw][w]] != target:
            witnesses.append((u, v, w))
            if len(witnesses) >= witness_limit:
                break
    return _report("t5", witnesses)


def associated_graph(t: OpTable) -> Graph:
    """Graph whose edges are the unordered pairs {u, v}, u != v, with u*v = v.

    For raw tables the ordered condition is taken in either orientation
    (u*v = v or v*u = u); for travel groupoids the two agree.
    """
    rows = t.rows()
    edges = set()
    for u, v in itertools.product(range(t.n), repeat=2):
        if u != v and rows[u][v] == v:
            edges.add((u, v) if u < v else (v, u))
    return Graph(t.n, frozenset(edges))


def is_on_graph(t: OpTable, g: Graph) -> bool:
    """True iff the table's associated graph equals g exactly."""
    if t.n != g.n:
        raise ValueError(f"size mismatch: table has n={t.n}, graph has n={g.n}")
    return associated_graph(t) == g


def is_travel_groupoid(t: OpTable) -> bool:
    """True iff (t1) and (t2) both hold."""
    return check_t1(t, witness_limit=1).holds and check_t2(t, witness_limit=1).holds

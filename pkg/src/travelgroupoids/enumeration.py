"""Exhaustive generation of T-partition systems, plus a table-scan oracle.

The generator walks next-hop assignments f_u: V -> N(u) | {u} directly:
the diagonal and neighbor entries are forced (f_u(u) = u, f_u(v) = v for
edges), every other entry ranges over the open neighborhood of u, and
the only cross-vertex constraint is the pairwise-disjointness condition,
forward-checked through a ban ledger. The fibers of a completed
assignment are exactly one T-partition system, so solutions in
lexicographic order of the flattened assignment vector enumerate the
systems in canonical order.

The oracle is deliberately independent: it builds candidate tables by
plain product over the free entries and keeps those passing the two
table axioms and the on-graph test, with no shared propagation logic.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import Graph
from .groupoids import (
    OpTable,
    check_simple,
    check_smooth,
    check_semismooth,
    check_t1,
    check_t2,
    is_on_graph,
)
from .systems import (
    TPartitionSystem,
    check_R3,
    check_R4,
    check_R5,
    right_translation_system,
)

DEFAULT_ORACLE_LIMIT = 4

FILTERS = ("all", "simple", "smooth", "semi-smooth")


class OracleLimitError(ValueError):
    """The oracle refuses graphs above its vertex limit."""


@dataclass
class EnumerationResult:
    """Counts over the full population; items carry only the filtered ones."""

    graph: Graph
    filter: str
    total: int
    simple_count: int
    smooth_count: int
    semismooth_count: int
    items: tuple[TPartitionSystem, ...] | None


@dataclass
class CrossValidationReport:
    """Agreement between the assignment search and the table-scan oracle."""

    graph: Graph
    oracle_count: int
    csp_count: int
    sets_match: bool
    oracle_tallies: dict[str, int]
    csp_tallies: dict[str, int]
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = (
            self.oracle_count == self.csp_count
            and self.sets_match
            and self.oracle_tallies == self.csp_tallies
        )

    def __bool__(self) -> bool:
        return self.ok


def _forced_assignment(g: Graph) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Forced entries (-1 on free slots) and the ordered free slot list."""
    n = g.n
    table = [[-1] * n for _ in range(n)]
    for u in range(n):
        table[u][u] = u
        for v in g.open_neighborhood(u):
            table[u][v] = v
    free = [(u, w) for u in range(n) for w in range(n) if table[u][w] < 0]
    return table, free


def _assignment_tables(
    g: Graph, first_values: list[int] | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield completed assignment tables in lexicographic order.

    ``first_values`` restricts the first free slot's candidates; the
    parallel mode uses it to split the search by top-level branch.
    """
    n = g.n
    table, free = _forced_assignment(g)
    domains = [sorted(g.open_neighborhood(u)) for u in range(n)]
    if any(not domains[u] for u, _ in free):
        # some vertex must route a foreign target but has no neighbor
        return
    # banned[u][w][v]: slot (u, w) may no longer take value v
    banned = [[[False] * n for _ in range(n)] for _ in range(n)]

    def walk(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(free):
            yield tuple(tuple(row) for row in table)
            return
        u, w = free[i]
        values = domains[u] if i > 0 or first_values is None else first_values
        for v in values:
            if banned[u][w][v]:
                continue
            # disjointness: f_u(w) = v forbids f_v(w) = u at the open partner slot
            ban_partner = table[v][w] < 0
            if ban_partner:
                banned[v][w][u] = True
            table[u][w] = v
            yield from walk(i + 1)
            table[u][w] = -1
            if ban_partner:
                banned[v][w][u] = False

    yield from walk(0)


def _system_from_assignment(n: int, assignment) -> TPartitionSystem:
    cells: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
    for u in range(n):
        row = assignment[u]
        for w in range(n):
            cells[u][row[w]].append(w)
    return TPartitionSystem(n, cells)


def _branch(g: Graph, value: int) -> list[tuple[tuple[int, ...], ...]]:
    return list(_assignment_tables(g, first_values=[value]))


def _all_assignments(g: Graph, jobs: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if jobs <= 1:
        yield from _assignment_tables(g)
        return
    _, free = _forced_assignment(g)
    if not free:
        yield from _assignment_tables(g)
        return
    first_u = free[0][0]
    values = sorted(g.open_neighborhood(first_u))
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_branch, g, v) for v in values]
        for future in futures:  # submission order keeps the merge canonical
            yield from future.result()


def enumerate_systems(
    g: Graph,
    filter: str = "all",
    count_only: bool = False,
    jobs: int = 1,
) -> EnumerationResult:
    """All T-partition systems on g, in canonical order.

    Tallies cover the whole population regardless of ``filter``; the
    item stream carries only the systems in the requested class (or
    nothing with ``count_only``).
    """
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    total = simple = smooth = semismooth = 0
    items: list[TPartitionSystem] | None = None if count_only else []
    for assignment in _all_assignments(g, jobs):
        system = _system_from_assignment(g.n, assignment)
        total += 1
        is_simple = check_R3(system, g, witness_limit=1).holds
        is_smooth = check_R4(system, g, witness_limit=1).holds
        is_semismooth = check_R5(system, g, witness_limit=1).holds
        simple += is_simple
        smooth += is_smooth
        semismooth += is_semismooth
        if items is None:
            continue
        keep = (
            filter == "all"
            or (filter == "simple" and is_simple)
            or (filter == "smooth" and is_smooth)
            or (filter == "semi-smooth" and is_semismooth)
        )
        if keep:
            items.append(system)
    return EnumerationResult(
        graph=g,
        filter=filter,
        total=total,
        simple_count=simple,
        smooth_count=smooth,
        semismooth_count=semismooth,
        items=None if items is None else tuple(items),
    )


def oracle_enumerate(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> list[OpTable]:
    """Every travel groupoid on g, by scanning candidate tables.

    Diagonal and neighbor entries are pinned to their forced values and
    the remaining entries range over open neighborhoods; each completed
    table is kept iff (t1), (t2) and the on-graph test pass verbatim.
    """
    if g.n > limit:
        raise OracleLimitError(
            f"graph has {g.n} vertices; the oracle refuses above {limit} "
            f"(raise the limit to override)"
        )
    n = g.n
    base = [[0] * n for _ in range(n)]
    slots: list[tuple[int, int]] = []
    for u in range(n):
        nbrs = g.open_neighborhood(u)
        for w in range(n):
            if w == u:
                base[u][w] = u
            elif w in nbrs:
                base[u][w] = w
            else:
                slots.append((u, w))
    domains = [sorted(g.open_neighborhood(u)) for u, _ in slots]
    found: list[OpTable] = []
    for choice in itertools.product(*domains):
        rows = [row[:] for row in base]
        for (u, w), v in zip(slots, choice):
            rows[u][w] = v
        candidate = OpTable(rows)
        if (
            check_t1(candidate, witness_limit=1).holds
            and check_t2(candidate, witness_limit=1).holds
            and is_on_graph(candidate, g)
        ):
            found.append(candidate)
    return found


def _table_tallies(tables: list[OpTable]) -> dict[str, int]:
    return {
        "total": len(tables),
        "simple": sum(check_simple(t, witness_limit=1).holds for t in tables),
        "smooth": sum(check_smooth(t, witness_limit=1).holds for t in tables),
        "semi-smooth": sum(
            check_semismooth(t, witness_limit=1).holds for t in tables
        ),
    }


def cross_validate(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> CrossValidationReport:
    """Compare the assignment search against the oracle on one graph.

    The oracle's tables are mapped through their right translation
    systems and compared as a set with the search output; class tallies
    are computed on the table side with (t3)/(t4)/(t5) and on the system
    side with (R3)/(R4)/(R5).
    """
    tables = oracle_enumerate(g, limit=limit)
    result = enumerate_systems(g)
    oracle_systems = {right_translation_system(t) for t in tables}
    assert result.items is not None
    csp_tallies = {
        "total": result.total,
        "simple": result.simple_count,
        "smooth": result.smooth_count,
        "semi-smooth": result.semismooth_count,
    }
    return CrossValidationReport(
        graph=g,
        oracle_count=len(tables),
        csp_count=result.total,
        sets_match=oracle_systems == set(result.items),
        oracle_tallies=_table_tallies(tables),
        csp_tallies=csp_tallies,
    )

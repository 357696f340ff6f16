"""Shared fixtures: the golden 4-cycle triple and small graph builders."""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from travelgroupoids import Graph, OpTable, TPartitionSystem

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

GOLDEN_ROWS = [
    [0, 1, 3, 3],
    [0, 1, 2, 0],
    [1, 1, 2, 3],
    [0, 2, 2, 3],
]

GOLDEN_CELLS = [
    [[0], [1], [], [2, 3]],
    [[0, 3], [1], [2], []],
    [[], [0, 1], [2], [3]],
    [[0], [], [1, 2], [3]],
]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def golden_table() -> OpTable:
    return OpTable(GOLDEN_ROWS)


@pytest.fixture
def golden_system() -> TPartitionSystem:
    return TPartitionSystem(4, GOLDEN_CELLS)


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURES

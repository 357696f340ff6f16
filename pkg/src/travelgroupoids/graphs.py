"""Finite simple undirected graphs over vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph file. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``edges`` holds pairs (u, v) with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adjacency: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        adjacency: list[set[int]] = [set() for _ in range(self.n)]
        for edge in self.edges:
            u, v = edge
            if not (0 <= u < v < self.n):
                raise ValueError(
                    f"bad edge {edge}: endpoints must satisfy 0 <= u < v < {self.n}"
                )
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(
            self, "_adjacency", tuple(frozenset(a) for a in adjacency)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops and duplicate edges explicitly."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            pair = _canonical(u, v)
            if pair in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(pair)
        return cls(n, frozenset(seen))

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range for n={self.n}")

    def open_neighborhood(self, u: int) -> frozenset[int]:
        """Vertices adjacent to u, excluding u itself."""
        self.check_vertex(u)
        return self._adjacency[u]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        """u together with its neighbors."""
        self.check_vertex(u)
        return self._adjacency[u] | {u}

    def degree(self, u: int) -> int:
        self.check_vertex(u)
        return len(self._adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return u != v and v in self._adjacency[u]

    def adjacency_matrix(self) -> list[list[bool]]:
        """Dense symmetric adjacency, False on the diagonal."""
        return [
            [v in self._adjacency[u] for v in range(self.n)] for u in range(self.n)
        ]


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented edge-list format (see render_graph)."""
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError("expected header 'n <count>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"vertex count {tokens[1]!r} is not an integer", lineno
                ) from None
            if n < 1:
                raise GraphFormatError("vertex count must be at least 1", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError("expected an edge line '<u> <v>'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(
                f"edge endpoints {line!r} are not integers", lineno
            ) from None
        if u == v:
            raise GraphFormatError(f"loop edge {u} {v}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"edge {u} {v} out of range for n={n}", lineno
            )
        pair = _canonical(u, v)
        if pair in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(pair)
    if n is None:
        raise GraphFormatError("missing header 'n <count>'")
    return Graph(n, frozenset(seen))


def render_graph(g: Graph) -> str:
    """Canonical text form; parse_graph(render_graph(g)) == g."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"

"""Ground-truth dynamic graph storage shared by all maintainers.

Vertices are dense integers fixed at construction.  Edges are canonical
(min, max) tuples; adjacency is hash-based with O(1)-expected membership and
O(size) iteration.  Duplicate insertion and missing-edge deletion are hard
errors so harness bugs cannot silently corrupt statistics.
"""

from __future__ import annotations

from dataclasses import dataclass


class GraphError(ValueError):
    """Illegal graph operation (self-loop, duplicate edge, missing edge...)."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical unordered key: (u, v) and (v, u) map to the same tuple."""
    return (u, v) if u < v else (v, u)


def other_end(edge: tuple[int, int], x: int) -> int:
    a, b = edge
    return b if x == a else a


@dataclass(frozen=True)
class EdgeOccurrence:
    """One live incarnation of an edge; re-insertions bump occurrence_index."""

    key: tuple[int, int]
    occurrence_index: int


class DynamicGraph:
    def __init__(self, n: int):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        self.n = n
        self.adjacency: list[set[int]] = [set() for _ in range(n)]
        self.live_edges: set[tuple[int, int]] = set()
        self.occurrence_counter: dict[tuple[int, int], int] = {}

    @property
    def m(self) -> int:
        return len(self.live_edges)

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.live_edges

    def insert(self, u: int, v: int) -> EdgeOccurrence:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) rejected")
        key = edge_key(u, v)
        if key in self.live_edges:
            raise GraphError(f"edge {key} already live")
        self.live_edges.add(key)
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        occ = self.occurrence_counter.get(key, 0) + 1
        self.occurrence_counter[key] = occ
        return EdgeOccurrence(key, occ)

    def delete(self, u: int, v: int) -> tuple[int, int]:
        self._check_vertex(u)
        self._check_vertex(v)
        key = edge_key(u, v)
        if key not in self.live_edges:
            raise GraphError(f"edge {key} not live")
        self.live_edges.remove(key)
        self.adjacency[u].remove(v)
        self.adjacency[v].remove(u)
        return key

    def occurrence(self, u: int, v: int) -> int:
        return self.occurrence_counter.get(edge_key(u, v), 0)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def check_consistency(self) -> list[str]:
        """Recompute the adjacency-symmetry and edge-count invariants."""
        problems = []
        degree_total = 0
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u not in self.adjacency[v]:
                    problems.append(f"asymmetric adjacency {u}->{v}")
                if edge_key(u, v) not in self.live_edges:
                    problems.append(f"adjacency entry {u}-{v} not in live set")
            degree_total += len(self.adjacency[u])
        if degree_total != 2 * len(self.live_edges):
            problems.append(
                f"degree sum {degree_total} != 2*m = {2 * len(self.live_edges)}"
            )
        for a, b in self.live_edges:
            if b not in self.adjacency[a] or a not in self.adjacency[b]:
                problems.append(f"live edge ({a},{b}) missing from adjacency")
        return problems


class IndexedEdgeSet:
    """Hash set of edges with a dense list view.

    Gives O(1) expected add/discard/membership, O(size) iteration and O(1)
    access by position, which is what uniform random selection over an owned
    set needs.  Removal swaps with the last slot, so iteration order is
    deterministic given the operation history.
    """

    __slots__ = ("items", "pos")

    def __init__(self):
        self.items: list[tuple[int, int]] = []
        self.pos: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, edge) -> bool:
        return edge in self.pos

    def __iter__(self):
        return iter(self.items)

    def add(self, edge: tuple[int, int]) -> None:
        if edge in self.pos:
            raise GraphError(f"edge {edge} already in set")
        self.pos[edge] = len(self.items)
        self.items.append(edge)

    def discard(self, edge: tuple[int, int]) -> bool:
        i = self.pos.pop(edge, None)
        if i is None:
            return False
        last = self.items.pop()
        if last != edge:
            self.items[i] = last
            self.pos[last] = i
        return True

    def at(self, i: int) -> tuple[int, int]:
        return self.items[i]

    def snapshot(self) -> list[tuple[int, int]]:
        return list(self.items)

"""Matching state, validity/maximality verifiers and an exact maximum oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dynmatch.graph import DynamicGraph, edge_key


class MatchingState:
    """Mate map over a fixed vertex universe.

    Invariants (checked by ``verify_matching`` against the companion graph):
    mate symmetry, matched pairs are live edges, no vertex in two pairs.
    """

    def __init__(self, n: int):
        self.n = n
        self.mate: dict[int, int] = {}

    @property
    def size(self) -> int:
        return len(self.mate) // 2

    def mate_of(self, u: int) -> int | None:
        return self.mate.get(u)

    def is_free(self, u: int) -> bool:
        return u not in self.mate

    def are_matched(self, u: int, v: int) -> bool:
        return self.mate.get(u) == v

    def add_pair(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"cannot match {u} to itself")
        if u in self.mate or v in self.mate:
            raise ValueError(f"vertex already matched: {u} or {v}")
        self.mate[u] = v
        self.mate[v] = u

    def remove_pair(self, u: int, v: int) -> None:
        if self.mate.get(u) != v:
            raise ValueError(f"({u},{v}) is not a matched pair")
        del self.mate[u]
        del self.mate[v]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({edge_key(u, v) for u, v in self.mate.items()})


@dataclass
class MaximalityReport:
    maximal: bool
    witness: tuple[int, int] | None = None  # live edge with both endpoints free


def verify_matching(graph: DynamicGraph, matching: MatchingState) -> bool:
    """True iff the mate map is symmetric, pairwise disjoint and live in graph."""
    for u, v in matching.mate.items():
        if matching.mate.get(v) != u:
            return False
        if u == v:
            return False
        if edge_key(u, v) not in graph.live_edges:
            return False
    return True


def check_maximal(graph: DynamicGraph, matching: MatchingState) -> MaximalityReport:
    """Scan live edges for one with both endpoints free."""
    mate = matching.mate
    for a, b in graph.live_edges:
        if a not in mate and b not in mate:
            return MaximalityReport(maximal=False, witness=(a, b))
    return MaximalityReport(maximal=True)


def maximum_matching_size(graph: DynamicGraph, max_vertices: int = 256) -> int:
    """Exact maximum matching cardinality by branch and bound.

    Branches on the lowest-indexed vertex that still has edges: either leave
    it unmatched or match it to each neighbor in turn.  Memoizes on the set of
    still-available vertices.  Intended for small instances; dense graphs
    beyond ~24 vertices get expensive, which is why the harness uses the
    structural pendant argument for the large adversary family instead.
    """
    if graph.n > max_vertices:
        raise ValueError(
            f"graph has {graph.n} vertices, oracle bound is {max_vertices}"
        )
    adj = [sorted(graph.adjacency[u]) for u in range(graph.n)]
    active = frozenset(u for u in range(graph.n) if adj[u])
    memo: dict[frozenset, int] = {}

    def solve(avail: frozenset) -> int:
        pick = None
        for u in sorted(avail):
            if any(w in avail for w in adj[u]):
                pick = u
                break
        if pick is None:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        rest = avail - {pick}
        best = solve(rest)  # leave pick unmatched
        for w in adj[pick]:
            if w in rest:
                best = max(best, 1 + solve(rest - {w}))
        memo[avail] = best
        return best

    return solve(active)


def approximation_ratio(
    graph: DynamicGraph,
    matching: MatchingState,
    maximum: int | None = None,
) -> Fraction:
    """|matching| / maximum as an exact rational; 1 on an empty graph.

    Callers must have established maximality (a maximal matching is always
    within factor two of maximum, so the result is >= 1/2).  ``maximum`` can
    be supplied when known structurally, else the exact oracle runs.
    """
    if maximum is None:
        maximum = maximum_matching_size(graph)
    if maximum == 0:
        if matching.size != 0:
            raise ValueError("nonzero matching but maximum is 0")
        return Fraction(1)
    return Fraction(matching.size, maximum)


def conclusion_maximum(graph: DynamicGraph, per_side: int) -> int:
    """Maximum matching size for the clique-plus-pendants adversary family.

    The family has vertices 0..s-1 forming a clique and pendant edges
    (i, s+i); the pendants alone are a perfect matching, so the maximum is
    exactly ``per_side``.  Verifies the structural premise before answering
    so it cannot silently apply to the wrong graph.
    """
    s = per_side
    if graph.n != 2 * s:
        raise ValueError(f"expected {2 * s} vertices, found {graph.n}")
    for i in range(s):
        if edge_key(i, s + i) not in graph.live_edges:
            raise ValueError(f"pendant edge ({i},{s + i}) missing")
        if graph.degree(s + i) != 1:
            raise ValueError(f"vertex {s + i} is not a pendant")
    return s

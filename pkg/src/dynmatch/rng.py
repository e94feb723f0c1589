"""Seeded randomness and exact-uniform range reduction by rejection."""

from __future__ import annotations

import random


class SeededSource:
    """Replayable pseudo-random source.

    Same seed, same draw sequence.  One source per engine instance; the
    harness derives independent child sources for generators vs. maintainers
    via ``child``.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)
        self.position = 0  # raw draws consumed
        self.calls = 0  # uniform_index invocations
        self.redraws = 0  # rejected raw draws

    def draw(self, n: int) -> int:
        """Raw uniform integer in [1, n]."""
        self.position += 1
        return self._rng.randint(1, n)

    def child(self, tag: str) -> "SeededSource":
        """Independent source derived from (seed, tag); stable across runs."""
        mix = self.seed
        for ch in tag:
            mix = (mix * 1000003 + ord(ch)) & 0xFFFFFFFFFFFFFFFF
        return SeededSource(mix)

    @property
    def redraw_rate(self) -> float:
        """Mean raw draws per uniform_index call (1.0 = never rejected)."""
        if self.calls == 0:
            return 0.0
        return (self.calls + self.redraws) / self.calls


def uniform_index(src, m: int, n: int) -> int:
    """Exactly uniform integer in [1, m], reduced from raw draws on [1, n].

    Draw R on [1, n]; accept when R <= n - (n mod m) and return
    (R mod m) + 1, otherwise redraw.  Rejecting the top n mod m values makes
    every residue class equally likely; for n >= 2m fewer than 2 draws are
    needed on average.

    ``src`` needs only a ``draw(n)`` method, so tests may script the raw
    values.  Counters on SeededSource instances track the observed redraw
    rate.
    """
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    if m > n:
        raise ValueError(f"m={m} exceeds raw range n={n}")
    is_source = isinstance(src, SeededSource)
    if is_source:
        src.calls += 1
    cutoff = n - (n % m)
    while True:
        r = src.draw(n)
        if r <= cutoff:
            return (r % m) + 1
        if is_source:
            src.redraws += 1

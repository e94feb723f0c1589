"""Fully dynamic maximal matching: maintainers, verifiers and a replay harness.

Three maintainers share one graph substrate:

* ``TrivialMatching``   -- constant-time updates except matched-edge deletions,
  which rescan the endpoint neighborhoods.
* ``TwoLevelMatching``  -- two levels with edge ownership and a sqrt(n)
  ownership threshold; random mate selection above the threshold.
* ``MultilevelMatching`` -- the full level hierarchy (-1 .. floor(log2 n)) with
  single-owner edges, per-level incidence sets and rise-potential counters.

``replay`` drives any maintainer from an update stream while auditing
invariants; ``dynmatch.cli`` exposes the same machinery on the command line.
"""

from dynmatch.graph import DynamicGraph, EdgeOccurrence, GraphError, edge_key
from dynmatch.matching import (
    MatchingState,
    MaximalityReport,
    approximation_ratio,
    check_maximal,
    maximum_matching_size,
    verify_matching,
)
from dynmatch.rng import SeededSource, uniform_index
from dynmatch.trivial import TrivialMatching
from dynmatch.twolevel import TwoLevelMatching
from dynmatch.multilevel import MultilevelMatching
from dynmatch.instrument import EpochLedger, EpochRecord, WorkCounter
from dynmatch.streams import (
    StreamError,
    UpdateStream,
    gen_churn_stream,
    gen_conclusion_adversary,
    gen_phased_stream,
    gen_random_stream,
)
from dynmatch.replay import ReplayError, RunReport, build_maintainer, compare, replay

__all__ = [
    "DynamicGraph",
    "EdgeOccurrence",
    "GraphError",
    "edge_key",
    "MatchingState",
    "MaximalityReport",
    "verify_matching",
    "check_maximal",
    "maximum_matching_size",
    "approximation_ratio",
    "SeededSource",
    "uniform_index",
    "TrivialMatching",
    "TwoLevelMatching",
    "MultilevelMatching",
    "EpochLedger",
    "EpochRecord",
    "WorkCounter",
    "UpdateStream",
    "StreamError",
    "gen_random_stream",
    "gen_phased_stream",
    "gen_conclusion_adversary",
    "gen_churn_stream",
    "replay",
    "compare",
    "build_maintainer",
    "RunReport",
    "ReplayError",
]

"""Overlapping link communities as local minima of the normalised node cut."""

import json

from ._core import (
    Graph,
    NodecutError,
    boundary_nodes,
    check_equivalence,
    classify_overlap,
    exact_local_minima,
    is_connected,
    jaccard_distance,
    line_graph,
    polyhierarchy,
    psi,
    run_from_seed,
    verify_local_minimum,
)
from ._core import detect_report as _detect_report

__all__ = [
    "Graph",
    "NodecutError",
    "boundary_nodes",
    "check_equivalence",
    "classify_overlap",
    "detect",
    "exact_local_minima",
    "is_connected",
    "jaccard_distance",
    "line_graph",
    "polyhierarchy",
    "psi",
    "run_from_seed",
    "verify_local_minimum",
]


def detect(graph, tie_break="det", rng_seed=0, jobs=1, allow_disconnected=False):
    """Run the greedy search from every link and return the report as a dict."""
    return json.loads(_detect_report(graph, tie_break, rng_seed, jobs, allow_disconnected))

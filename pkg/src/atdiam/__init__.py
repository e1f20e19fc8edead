"""Fast diameter and eccentricity algorithms for AT-free and chordal graphs."""

from .graph import (
    DisconnectedGraphError,
    DistanceLayers,
    DistanceVector,
    Graph,
    GraphError,
    all_pairs_distances,
    bfs_distances,
    diameter_naive,
    eccentricities_naive,
    layers,
)
from .lexbfs import VertexOrdering, is_chordal, lexbfs, multi_sweep
from .atfree import atfree_all_eccentricities, atfree_diameter, scan_clique
from .chordal import (
    DiameterVerdict,
    decide_diameter_at_least,
    diameter_dominating_sp,
    diameter_dominating_triple,
    three_sweep_estimate,
    two_sweep_estimate,
)
from .splitov import SetFamily, SplitOVInstance, inclusion_minimal, split_ov_solve, twin_reduce
from .io import ParseError, parse_graph, write_graph

__version__ = "0.1.0"

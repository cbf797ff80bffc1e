"""Transmission (Wiener index) of k-uniform hypergraphs.

Thin wrapper over the C++ library. Reports come back as plain dicts with the
same layout as the command-line tool's JSON output.
"""

from ._hypertrans import (
    Hypergraph,
    HypertransError,
    all_pairs,
    are_isomorphic,
    average_distance,
    canonical_key,
    cg_star,
    check_lemma,
    classify,
    components,
    decompose,
    diameter,
    distances_from,
    enumerate_unicyclic,
    family,
    hyperstar,
    identify_family,
    is_connected,
    lollipop_graph,
    loose_cycle,
    loose_path,
    move_edges,
    sigma_between,
    sigma_min_formula,
    sigma_subset,
    sigma_vertex,
    tilde_c2,
    transmission,
    triangle_star_graph,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

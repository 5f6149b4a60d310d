"""Exact stable norms of weighted multigraphs.

The unit ball of the stable norm on the first homology of a finite weighted
graph is a polytope whose vertices are the simple oriented circuits scaled
to unit length. This package enumerates those circuits, builds the ball with
exact rational arithmetic, and checks it against a circuit-free brute force.
"""

from .circuits import CircuitSet, SimpleCircuit, canonicalize, circuit_chain, enumerate_circuits
from .errors import *  # noqa: F401,F403
from .graph import (
    Edge,
    HomologyBasis,
    WeightedMultigraph,
    basis_coords,
    boundary,
    build_graph,
    chain_from_coords,
    homology_basis,
    parse_rational,
)
from .io import export_plot, gen_corpus, load_graph, parse_graph, serialize_graph
from .norm import (
    Decomposition,
    StableBall,
    chain_norm,
    decompose_class,
    dual_norm,
    merge_circuits,
    stable_ball,
    stable_norm,
    verify_vertices,
)
from .oracle import ball_by_intersection, norm_by_infimum
from .polytope import PointSet, hull_contains, is_extreme, support_value

__version__ = "0.1.0"

"""Temporal graph connectivity toolkit.

Reachability under the strict and non-strict walk models, the four
component notions (tcc, tucc and their closed variants), maximality
checking, parameter-bounded search, and generators for the reduction
gadgets, all backed by brute-force oracles.
"""

__version__ = "0.1.0"

from .components import (
    Budget,
    BudgetExceededError,
    ComponentQuery,
    ComponentReport,
    Kind,
    UnsupportedQueryError,
    enumerate_components,
    has_component_of_size,
    is_connected_set,
    is_maximal_component,
    is_temporally_connected,
)
from .core import (
    GraphFormatError,
    Model,
    Snapshot,
    TemporalEdge,
    TemporalGraph,
    ValidationError,
    parse_temporal_graph,
    serialize_temporal_graph,
    snapshot,
    temporal_graph,
    underlying_undirected,
)
from .fpt import CapOverflowError, FptBudget, degree_caps, fpt_find
from .gadgets import (
    BipartiteGraph,
    EquivalenceRecord,
    GadgetInstance,
    Literal,
    SatInstance,
    SimpleGraph,
    gadget_2club,
    gadget_2club_strict,
    gadget_clique_closed_dir_tau3,
    gadget_clique_dir_tau2,
    gadget_clique_tcc,
    gadget_linegraph_bipartite,
    gadget_sat_connected,
    gadget_sat_unilateral,
)
from .reachability import (
    ReachabilityDigraph,
    ReachProfile,
    StaticGraph,
    TemporalWalk,
    is_temporal_walk,
    reach_profile,
    reachability_digraph,
    reaches,
    symmetric_core,
    underlying_core,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Optimum matchings in integer-weighted bipartite graphs.

Exact primal-dual solvers for the assignment problem, the tight subgraph
induced by a price certificate, and everything it unlocks: all edges in
some optimal matching, streaming enumeration of all optimal matchings,
preference-maximizing optimal matchings, and reductions that handle
unbalanced or infeasible instances.
"""

from .allowed import EdgeSet, allowed_edges, optimal_edges
from .enumeration import (EnumerationSink, enumerate_min_weight_pms,
                          enumerate_perfect_matchings, iter_min_weight_perfect_matchings,
                          iter_perfect_matchings)
from .errors import (CoverageRequired, Error, Infeasible, InfeasibleDual, NotSquare,
                     ParseError)
from .graph import (MAX_ABS_WEIGHT, Matching, VertexRef, WeightedBipartiteGraph,
                    matching_from_json, matching_weight, parse_instance,
                    serialize_instance)
from .matching import max_cardinality_matching
from .preallocation import PreferenceSet, parse_preferences, preallocate
from .prices import (DualPrices, SlackViolation, check_complementary_slackness,
                     check_dual_feasible, check_eps_optimal, dual_objective,
                     floor_shift_equal, prices_from_json, prices_to_json,
                     round_to_optimal, select_shift)
from .solvers import SolveResult, SolveStats, solve_auction, solve_exact, solve_via_rounding
from .tight import ORACLE_MAX_SIDE, TightSubgraph, brute_force_min_weight_pms, build_gcs
from .transforms import (AUTO, FULL_DOUBLING, HALF_DOUBLING, PADDING, STRATEGIES,
                         EdgeOrigin, TransformedInstance, artificial_vertices,
                         choose_strategy, first_doubling, optimal_edges_general,
                         optimum_matching, restrict_back, second_doubling)

__version__ = "0.1.0"

__all__ = [
    "AUTO",
    "CoverageRequired",
    "DualPrices",
    "EdgeOrigin",
    "EdgeSet",
    "EnumerationSink",
    "Error",
    "FULL_DOUBLING",
    "HALF_DOUBLING",
    "Infeasible",
    "InfeasibleDual",
    "MAX_ABS_WEIGHT",
    "Matching",
    "NotSquare",
    "ORACLE_MAX_SIDE",
    "PADDING",
    "ParseError",
    "PreferenceSet",
    "STRATEGIES",
    "SlackViolation",
    "SolveResult",
    "SolveStats",
    "TightSubgraph",
    "TransformedInstance",
    "VertexRef",
    "WeightedBipartiteGraph",
    "allowed_edges",
    "artificial_vertices",
    "brute_force_min_weight_pms",
    "build_gcs",
    "check_complementary_slackness",
    "check_dual_feasible",
    "check_eps_optimal",
    "choose_strategy",
    "dual_objective",
    "enumerate_min_weight_pms",
    "enumerate_perfect_matchings",
    "first_doubling",
    "floor_shift_equal",
    "iter_min_weight_perfect_matchings",
    "iter_perfect_matchings",
    "matching_from_json",
    "matching_weight",
    "max_cardinality_matching",
    "optimal_edges",
    "optimal_edges_general",
    "optimum_matching",
    "parse_instance",
    "parse_preferences",
    "preallocate",
    "prices_from_json",
    "prices_to_json",
    "restrict_back",
    "round_to_optimal",
    "second_doubling",
    "select_shift",
    "serialize_instance",
    "solve_auction",
    "solve_exact",
    "solve_via_rounding",
]

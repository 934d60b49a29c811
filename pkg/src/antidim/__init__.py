"""Graph privacy measures against active re-identification attacks.

Given a connected graph, an attacker controlling a node set V' sees every other
node only through its vector of hop distances to V'. Nodes with equal vectors
are indistinguishable; the size ``mu`` of the smallest such class is the
anonymity level the graph guarantees against that attacker.
"""

from .eqmad import (
    eqmad1_c4free,
    eqmad1_degree_one,
    greedy_set_cover,
    solve_eqmad1,
    solve_eqmad1_greedy,
    solve_eqmad_large_k,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    degree_one_node,
    has_four_cycle,
    neighborhood,
    parse_edge_list,
)
from .hardness import SetSystem, build_hard_instance, cover_to_witness
from .oracle import brute_force
from .partition import (
    EquivalencePartition,
    build_partition,
    measure,
    metric_representation,
    refine_with_nodes,
)
from .solvers import (
    INFEASIBLE,
    Solution,
    solve_adim_max,
    solve_adim_max_randomized,
    solve_mad,
    solve_mad_randomized,
)

__version__ = "0.1.0"

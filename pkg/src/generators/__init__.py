"""
Instance generators: named instances, the independent-set reduction and random batteries
"""

from .mis_reduction import (ReductionMap, brute_force_mis, extract_independent_set,
                            gen_mis_reduction, graph_from_edges, independent_sets,
                            is_independent_set, isolated_speakers, node_profile,
                            run_mis_pipeline, speaking_profile)
from .named_instances import (dspn_equilibrium_value, dspn_optimum_bound, gen_dspn,
                              gen_identity, ident4, loc2, loc3, local_expert_partition, trim5)
from .random_instances import (all_graphs, gen_random, random_bump_game, random_graph,
                               random_table_game)

__all__ = ['gen_identity', 'ident4', 'loc2', 'loc3', 'trim5', 'gen_dspn',
           'local_expert_partition', 'dspn_equilibrium_value', 'dspn_optimum_bound',
           'ReductionMap', 'gen_mis_reduction', 'graph_from_edges', 'extract_independent_set',
           'isolated_speakers', 'run_mis_pipeline', 'brute_force_mis', 'independent_sets',
           'is_independent_set', 'speaking_profile', 'node_profile', 'gen_random',
           'random_table_game', 'random_bump_game', 'all_graphs', 'random_graph']

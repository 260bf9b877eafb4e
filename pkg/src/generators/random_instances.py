"""
Seeded random instances, games and graphs for property testing.
"""

import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..dsp_instance import DSPInstance
from ..exceptions import InstanceError
from ..mechanism.game import BumpGame, TableGame
from ..partition import Partition
from .named_instances import local_expert_partition

logger = logging.getLogger(__name__)


def gen_random(n: int, k: int, m: int, seed: int, local_experts: bool = False,
               value_range: Tuple[int, int] = (0, 10), weight_range: Tuple[int, int] = (1, 4),
               max_parts: int = 4, expert_probability: float = 0.5) -> DSPInstance:
    """
    Random DSP(n, k, m) with integer weights and valuations drawn from the
    given inclusive ranges.

    With local_experts, mediator t gets a random I_t and the partition
    {{j} for j in I_t} + {I minus I_t}; otherwise a random partition with at
    most max_parts parts.
    """
    if n < 1 or k < 1 or m < 1:
        raise InstanceError(f"dimensions must be positive, got n={n}, k={k}, m={m}")
    if weight_range[0] < 1 or weight_range[0] > weight_range[1]:
        raise InstanceError(f"weight range must be positive and ordered, got {weight_range}")
    if value_range[0] < 0 or value_range[0] > value_range[1]:
        raise InstanceError(f"value range must be non-negative and ordered, got {value_range}")

    rng = np.random.default_rng(seed)
    weights = [int(w) for w in rng.integers(weight_range[0], weight_range[1] + 1, size=n)]
    valuations = [[int(v) for v in row]
                  for row in rng.integers(value_range[0], value_range[1] + 1, size=(k, n))]

    mediators: List[Partition] = []
    for _ in range(m):
        if local_experts:
            known = [j for j in range(n) if rng.random() < expert_probability]
            mediators.append(local_expert_partition(n, known))
        else:
            parts = int(rng.integers(1, min(n, max_parts) + 1))
            labels = [int(label) for label in rng.integers(0, parts, size=n)]
            mediators.append(Partition.from_labels(labels))

    instance = DSPInstance(weights, valuations, mediators, name=f"random_{n}_{k}_{m}_s{seed}")
    logger.debug(f"Generated {instance!r}")
    return instance.validate()


def _random_fraction(rng: np.random.Generator, value_range: Tuple[int, int]) -> Fraction:
    return Fraction(int(rng.integers(value_range[0], value_range[1] + 1)),
                    int(rng.integers(1, 7)))


def random_table_game(seed: int, m: Optional[int] = None, max_strategies: Optional[int] = None,
                      value_range: Tuple[int, int] = (-10, 20)) -> TableGame:
    """
    A game with random rational values on every profile. By default up to
    six players, with at most three strategies each for four players or fewer
    and two beyond.
    """
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, 7)) if m is None else m
    if max_strategies is None:
        max_strategies = 3 if m <= 4 else 2
    counts = tuple(int(c) for c in rng.integers(1, max_strategies + 1, size=m))
    table = np.empty(counts, dtype=object)
    for profile in np.ndindex(*counts):
        table[profile] = _random_fraction(rng, value_range)
    return TableGame(table, name=f"table_game_s{seed}")


def random_bump_game(seed: int, max_players: int = 4, max_strategies: int = 3) -> BumpGame:
    """A game whose value is constant except at one random profile."""
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, max_players + 1))
    counts = tuple(int(c) for c in rng.integers(1, max_strategies + 1, size=m))
    a_star = tuple(int(rng.integers(0, c)) for c in counts)
    base = _random_fraction(rng, (0, 10))
    surplus = _random_fraction(rng, (1, 12))
    return BumpGame(counts, a_star, base, surplus, name=f"bump_game_s{seed}")


def all_graphs(node_count: int) -> List[nx.Graph]:
    """Every labelled simple graph on nodes 0..node_count-1."""
    pairs = list(itertools.combinations(range(node_count), 2))
    graphs = []
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        graph = nx.Graph()
        graph.add_nodes_from(range(node_count))
        graph.add_edges_from(pair for pair, keep in zip(pairs, chosen) if keep)
        graphs.append(graph)
    return graphs


def random_graph(node_count: int, p: float, seed: int) -> nx.Graph:
    return nx.gnp_random_graph(node_count, p, seed=seed)

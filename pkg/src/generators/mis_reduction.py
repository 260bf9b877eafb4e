"""
Reduction from Maximum Independent Set to DSP
Each node v owns ell item pairs (j_{v,k}, helper j'_{v,k}), ell bidders and
ell single-bit mediators; one extra bidder wants every helper item.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..algorithms.exhaustive_search import solve_exact
from ..config import DEFAULT_LIMITS, Limits
from ..dsp_instance import DSPInstance
from ..exceptions import CapExceededError, InstanceError
from ..partition import Partition
from ..solution import Solution, StrategyProfile

logger = logging.getLogger(__name__)


def graph_from_edges(node_count: int, edges: Iterable[Tuple[int, int]]) -> nx.Graph:
    """Undirected simple graph on nodes 0..node_count-1."""
    graph = nx.Graph()
    graph.add_nodes_from(range(node_count))
    for u, v in edges:
        if u == v:
            raise InstanceError(f"self-loop on node {u}")
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise InstanceError(f"edge ({u}, {v}) has an endpoint outside 0..{node_count - 1}")
        graph.add_edge(u, v)
    return graph


def _check_graph(graph: nx.Graph) -> int:
    node_count = graph.number_of_nodes()
    if sorted(graph.nodes) != list(range(node_count)):
        raise InstanceError("graph nodes must be 0..N-1")
    if nx.number_of_selfloops(graph):
        raise InstanceError("graph has self-loops")
    return node_count


@dataclass(frozen=True)
class ReductionMap:
    """
    Index layout of a reduction instance with N nodes and ell copies:
    j_{v,k} = v*ell + k, helper j'_{v,k} = ell*N + v*ell + k, bidder
    i_{v,k} = v*ell + k, helper bidder i_h = ell*N, mediator m_{v,k} = v*ell + k.
    """
    ell: int
    node_count: int

    def item(self, node: int, copy: int) -> int:
        return node * self.ell + copy

    def helper(self, node: int, copy: int) -> int:
        return self.ell * self.node_count + node * self.ell + copy

    def bidder(self, node: int, copy: int) -> int:
        return node * self.ell + copy

    @property
    def helper_bidder(self) -> int:
        return self.ell * self.node_count

    def mediator(self, node: int, copy: int) -> int:
        return node * self.ell + copy

    def node_of(self, mediator: int) -> int:
        return mediator // self.ell

    def mediators_of(self, node: int) -> List[int]:
        return [self.mediator(node, k) for k in range(self.ell)]

    def items_of(self, node: int) -> List[int]:
        """J_v"""
        return [self.item(node, k) for k in range(self.ell)]

    def helpers_of(self, node: int) -> List[int]:
        """H_v"""
        return [self.helper(node, k) for k in range(self.ell)]

    def is_helper(self, item: int) -> bool:
        return item >= self.ell * self.node_count

    @property
    def dimensions(self) -> Tuple[int, int, int]:
        """(items, bidders, mediators) = (2 ell N, ell N + 1, ell N)."""
        size = self.ell * self.node_count
        return 2 * size, size + 1, size


def gen_mis_reduction(graph: nx.Graph, ell: Optional[int] = None) -> Tuple[DSPInstance, ReductionMap]:
    """
    Build DSP(2 ell N, ell N + 1, ell N) from a graph. Mediator m_{v,k}
    tells apart {j_{v,k}, j'_{v,k}} plus the helpers of v's neighbours from
    everything else. ell defaults to N + 1.
    """
    node_count = _check_graph(graph)
    if node_count < 1:
        raise InstanceError("the reduction needs at least one node")
    ell = node_count + 1 if ell is None else ell
    if ell < 1:
        raise InstanceError(f"ell must be at least 1, got {ell}")

    rmap = ReductionMap(ell=ell, node_count=node_count)
    n_items, n_bidders, _ = rmap.dimensions
    top = 2 * ell * node_count

    valuations = [[0] * n_items for _ in range(n_bidders)]
    mediators = []
    for v in range(node_count):
        neighbour_helpers = [h for u in sorted(graph.neighbors(v)) for h in rmap.helpers_of(u)]
        for k in range(ell):
            valuations[rmap.bidder(v, k)][rmap.item(v, k)] = top
            valuations[rmap.helper_bidder][rmap.helper(v, k)] = top
            first = {rmap.item(v, k), rmap.helper(v, k)} | set(neighbour_helpers)
            rest = tuple(j for j in range(n_items) if j not in first)
            mediators.append(Partition((tuple(first),) + ((rest,) if rest else ())))

    instance = DSPInstance(
        [1] * n_items, valuations, mediators,
        item_names=[f"j{v}_{k}" for v in range(node_count) for k in range(ell)]
                   + [f"h{v}_{k}" for v in range(node_count) for k in range(ell)],
        bidder_names=[f"i{v}_{k}" for v in range(node_count) for k in range(ell)] + ["ih"],
        mediator_names=[f"m{v}_{k}" for v in range(node_count) for k in range(ell)],
        name=f"mis_reduction_N{node_count}_l{ell}",
    ).validate()
    logger.info(f"Reduction of a {node_count}-node graph with ell={ell}: "
                f"{instance.n} items, {instance.k} bidders, {instance.m} mediators")
    return instance, rmap


def speaking_profile(instance: DSPInstance, speakers: Iterable[int]) -> StrategyProfile:
    """Mediators in `speakers` report their base partition, the rest stay silent."""
    speakers = set(speakers)
    return StrategyProfile(tuple(
        base if t in speakers else Partition.trivial(instance.n)
        for t, base in enumerate(instance.mediators)))


def node_profile(instance: DSPInstance, rmap: ReductionMap, nodes: Iterable[int]) -> StrategyProfile:
    """Every mediator of every node in `nodes` speaks."""
    return speaking_profile(instance, [t for v in nodes for t in rmap.mediators_of(v)])


def isolated_speakers(graph: nx.Graph, rmap: ReductionMap, speaking: Iterable[int]) -> FrozenSet[int]:
    """S': speaking mediators with no speaking mediator on a neighbouring node."""
    speaking = set(speaking)
    nodes = {rmap.node_of(t) for t in speaking}
    return frozenset(t for t in speaking
                     if not any(u in nodes for u in graph.neighbors(rmap.node_of(t))))


def extract_independent_set(graph: nx.Graph, rmap: ReductionMap,
                            speaking: Iterable[int]) -> FrozenSet[int]:
    """
    Nodes of the isolated speakers, or the single lowest-index node when
    there are none. Always an independent set of the graph.
    """
    chosen = frozenset(rmap.node_of(t) for t in isolated_speakers(graph, rmap, speaking))
    if chosen:
        return chosen
    return frozenset([min(graph.nodes)]) if graph.number_of_nodes() else frozenset()


def run_mis_pipeline(graph: nx.Graph, ell: Optional[int] = None,
                     solver: Optional[Callable[[DSPInstance], Solution]] = None,
                     limits: Limits = DEFAULT_LIMITS) -> FrozenSet[int]:
    """Reduce, solve the DSP instance, and read an independent set off the speakers."""
    solver = solver or partial(solve_exact, limits=limits)
    instance, rmap = gen_mis_reduction(graph, ell)
    solution = solver(instance)
    speaking = solution.profile.speaking()
    result = extract_independent_set(graph, rmap, speaking)
    logger.info(f"MIS pipeline: {len(speaking)} speaking mediators, independent set {sorted(result)}")
    return result


def is_independent_set(graph: nx.Graph, nodes: Iterable[int]) -> bool:
    return graph.subgraph(list(nodes)).number_of_edges() == 0


def _check_size(graph: nx.Graph, limits: Limits) -> None:
    if graph.number_of_nodes() > limits.max_mis_nodes:
        raise CapExceededError(
            f"{graph.number_of_nodes()} nodes exceeds max_mis_nodes = {limits.max_mis_nodes}")


def independent_sets(graph: nx.Graph, limits: Limits = DEFAULT_LIMITS) -> List[FrozenSet[int]]:
    """Every independent set, the empty set included, by size then lexicographically."""
    _check_size(graph, limits)
    nodes = sorted(graph.nodes)
    return [frozenset(subset)
            for size in range(len(nodes) + 1)
            for subset in itertools.combinations(nodes, size)
            if is_independent_set(graph, subset)]


def brute_force_mis(graph: nx.Graph, limits: Limits = DEFAULT_LIMITS) -> Tuple[int, FrozenSet[int]]:
    """Maximum independent set by subset enumeration; lexicographically first witness."""
    _check_size(graph, limits)
    nodes = sorted(graph.nodes)
    for size in range(len(nodes), 0, -1):
        for subset in itertools.combinations(nodes, size):
            if is_independent_set(graph, subset):
                return size, frozenset(subset)
    return 0, frozenset()

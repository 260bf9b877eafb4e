"""
JSON documents for instances and profiles, and plain-text edge lists
Loading validates the document shape first (errors carry a JSON pointer)
and then the instance invariants.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence

import networkx as nx

from ..constraints.refinement import RefinementConstraint
from ..dsp_instance import DSPInstance
from ..exceptions import InstanceError, SchemaError
from ..partition import Partition
from ..solution import StrategyProfile
from .rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)


def _expect_list(value: Any, pointer: str, what: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(pointer, f"expected {what}, got {type(value).__name__}")
    return value


def _index(value: Any, pointer: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(pointer, f"expected an item index, got {value!r}")
    return value


def _names(doc: Dict, key: str, expected: int) -> Optional[List[str]]:
    if key not in doc:
        return None
    names = _expect_list(doc[key], f"/{key}", "a list of names")
    if len(names) != expected:
        raise SchemaError(f"/{key}", f"has {len(names)} names, expected {expected}")
    for position, name in enumerate(names):
        if not isinstance(name, str):
            raise SchemaError(f"/{key}/{position}", f"expected a string, got {name!r}")
    return names


def _partition(value: Any, pointer: str) -> Partition:
    parts = _expect_list(value, pointer, "a list of parts")
    checked = []
    for p, part in enumerate(parts):
        items = _expect_list(part, f"{pointer}/{p}", "a list of item indices")
        checked.append(tuple(_index(item, f"{pointer}/{p}/{q}") for q, item in enumerate(items)))
    return Partition(tuple(checked))


def instance_to_document(instance: DSPInstance) -> Dict:
    """Canonical JSON form: rationals as strings, partitions in canonical order."""
    return {
        'name': instance.name,
        'items': list(instance.item_names),
        'weights': [format_rational(w) for w in instance.weights],
        'bidders': list(instance.bidder_names),
        'valuations': [[format_rational(v) for v in row] for row in instance.valuations],
        'mediators': [
            {'name': name, 'parts': partition.to_list()}
            for name, partition in zip(instance.mediator_names, instance.mediators)
        ],
    }


def instance_from_document(doc: Any) -> DSPInstance:
    """Schema check, then build and validate the instance."""
    if not isinstance(doc, dict):
        raise SchemaError("/", "expected an object")
    for key in ('weights', 'valuations', 'mediators'):
        if key not in doc:
            raise SchemaError("/", f"missing required key {key!r}")

    weights = [parse_rational(w, f"/weights/{j}")
               for j, w in enumerate(_expect_list(doc['weights'], "/weights", "a list"))]
    n = len(weights)

    rows = _expect_list(doc['valuations'], "/valuations", "a list of rows")
    valuations = []
    for i, row in enumerate(rows):
        row = _expect_list(row, f"/valuations/{i}", "a list of values")
        if len(row) != n:
            raise SchemaError(f"/valuations/{i}",
                              f"valuations row {i} has {len(row)} entries, expected {n}")
        valuations.append([parse_rational(v, f"/valuations/{i}/{j}") for j, v in enumerate(row)])

    mediators, mediator_names = [], []
    for t, entry in enumerate(_expect_list(doc['mediators'], "/mediators", "a list")):
        if not isinstance(entry, dict) or 'parts' not in entry:
            raise SchemaError(f"/mediators/{t}", "expected an object with 'parts'")
        mediators.append(_partition(entry['parts'], f"/mediators/{t}/parts"))
        name = entry.get('name', f"mediator{t}")
        if not isinstance(name, str):
            raise SchemaError(f"/mediators/{t}/name", f"expected a string, got {name!r}")
        mediator_names.append(name)

    name = doc.get('name', "dsp_instance")
    if not isinstance(name, str):
        raise SchemaError("/name", f"expected a string, got {name!r}")

    return DSPInstance(weights, valuations, mediators,
                       item_names=_names(doc, 'items', n),
                       bidder_names=_names(doc, 'bidders', len(valuations)),
                       mediator_names=mediator_names, name=name).validate()


def _read_json(filepath: str) -> Any:
    with open(filepath, 'r') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as error:
            raise SchemaError("/", f"invalid JSON: {error.msg} (line {error.lineno})")


def _write_json(document: Any, filepath: str) -> None:
    with open(filepath, 'w') as f:
        json.dump(document, f, indent=2)
        f.write("\n")


def save_instance(instance: DSPInstance, filepath: str) -> None:
    _write_json(instance_to_document(instance), filepath)
    logger.info(f"Saved {instance!r} to {filepath}")


def load_instance(filepath: str) -> DSPInstance:
    instance = instance_from_document(_read_json(filepath))
    logger.info(f"Loaded {instance!r} from {filepath}")
    return instance


def profile_to_document(profile: StrategyProfile) -> Dict:
    return {'reports': profile.to_list()}


def profile_from_document(doc: Any, instance: Optional[DSPInstance] = None) -> StrategyProfile:
    """
    Parse {"reports": [...]}. With an instance, every report is checked to
    coarsen its mediator's base partition.
    """
    if not isinstance(doc, dict) or 'reports' not in doc:
        raise SchemaError("/", "expected an object with 'reports'")
    reports = _expect_list(doc['reports'], "/reports", "a list of partitions")
    profile = StrategyProfile(tuple(_partition(report, f"/reports/{t}")
                                    for t, report in enumerate(reports)))
    if instance is not None:
        RefinementConstraint(instance).check(profile)
    return profile


def save_profile(profile: StrategyProfile, filepath: str) -> None:
    _write_json(profile_to_document(profile), filepath)


def load_profile(filepath: str, instance: Optional[DSPInstance] = None) -> StrategyProfile:
    return profile_from_document(_read_json(filepath), instance)


def parse_edge_list(lines: Sequence[str]) -> nx.Graph:
    """
    One "u v" pair per line, 0-based, '#' starts a comment. The node count
    is the largest index plus one unless a "p N" header gives it.
    """
    header: Optional[int] = None
    edges = []
    for number, raw in enumerate(lines, 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == 'p':
            if len(fields) != 2 or not fields[1].isdigit():
                raise InstanceError(f"line {number}: malformed header {raw.strip()!r}")
            header = int(fields[1])
            continue
        if len(fields) != 2:
            raise InstanceError(f"line {number}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InstanceError(f"line {number}: node indices must be integers")
        if u < 0 or v < 0:
            raise InstanceError(f"line {number}: negative node index")
        if u == v:
            raise InstanceError(f"line {number}: self-loop on node {u}")
        edges.append((u, v))

    largest = max((max(u, v) for u, v in edges), default=-1)
    node_count = header if header is not None else largest + 1
    if largest >= node_count:
        raise InstanceError(f"edge endpoint {largest} outside the declared {node_count} nodes")

    graph = nx.Graph()
    graph.add_nodes_from(range(node_count))
    graph.add_edges_from(edges)
    return graph


def load_graph(filepath: str) -> nx.Graph:
    with open(filepath, 'r') as f:
        graph = parse_edge_list(f.readlines())
    logger.info(f"Loaded graph with {graph.number_of_nodes()} nodes and "
                f"{graph.number_of_edges()} edges from {filepath}")
    return graph

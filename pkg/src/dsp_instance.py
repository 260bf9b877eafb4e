"""
DSP instance representation
Holds the prior over items, the bidders' valuation matrix and the mediators'
base partitions, and evaluates second-price revenue of partitions exactly.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import BundleError, InstanceError, PartitionError
from .partition import Partition, items_of, mask_of

logger = logging.getLogger(__name__)

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InstanceError(f"floating point value {value!r} is not allowed; use a rational string")
    return Fraction(value)


class DSPInstance:
    """
    A distributed signaling problem DSP(n, k, m): n items with an
    unnormalized prior, k bidders with valuations v_ij, and m mediators each
    holding a base partition of the items.

    Values are immutable after construction. Bundle contributions
    mu(S) * v(S) are memoized per item bitmask.
    """

    def __init__(self, weights: Sequence, valuations: Sequence[Sequence],
                 mediators: Sequence, item_names: Optional[Sequence[str]] = None,
                 bidder_names: Optional[Sequence[str]] = None,
                 mediator_names: Optional[Sequence[str]] = None,
                 name: str = "dsp_instance"):
        self.name = name
        self.weights: Tuple[Fraction, ...] = tuple(_as_fraction(w) for w in weights)
        self.valuations: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(_as_fraction(v) for v in row) for row in valuations
        )
        self.mediators: Tuple[Partition, ...] = tuple(
            p if isinstance(p, Partition) else Partition(tuple(tuple(part) for part in p))
            for p in mediators
        )
        n = len(self.weights)
        self.item_names: Tuple[str, ...] = tuple(item_names) if item_names is not None else tuple(
            f"item{j}" for j in range(n))
        self.bidder_names: Tuple[str, ...] = tuple(bidder_names) if bidder_names is not None else tuple(
            f"bidder{i}" for i in range(len(self.valuations)))
        self.mediator_names: Tuple[str, ...] = tuple(mediator_names) if mediator_names is not None else tuple(
            f"mediator{t}" for t in range(len(self.mediators)))

        self.total_weight: Fraction = sum(self.weights, Fraction(0))
        self._contribution_cache: Dict[int, Fraction] = {}
        self._weighted: Optional[List[Tuple[Fraction, ...]]] = None

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def k(self) -> int:
        return len(self.valuations)

    @property
    def m(self) -> int:
        return len(self.mediators)

    @property
    def all_items(self) -> Tuple[int, ...]:
        return tuple(range(self.n))

    def validate(self) -> "DSPInstance":
        """Raise InstanceError naming the first violated invariant."""
        from .constraints.instance_validity import InstanceConstraint

        violations = InstanceConstraint().get_violations(self)
        if violations:
            raise InstanceError(violations[0])
        logger.debug(f"Validated {self!r}")
        return self

    def mu(self, item: int) -> Fraction:
        """Normalized prior probability of one item."""
        return self.weights[item] / self.total_weight

    def mass(self, items: Iterable[int]) -> Fraction:
        return sum((self.weights[j] for j in items), Fraction(0)) / self.total_weight

    def _weighted_columns(self) -> List[Tuple[Fraction, ...]]:
        # mu(j) * v_ij, one tuple of k entries per item
        if self._weighted is None:
            self._weighted = [
                tuple(self.mu(j) * self.valuations[i][j] for i in range(self.k))
                for j in range(self.n)
            ]
        return self._weighted

    def bundle_bid(self, bidder: int, items: Iterable[int]) -> Fraction:
        """v_{i,S}: expected value of bidder i conditioned on the item lying in S."""
        bundle = tuple(items)
        weight = sum((self.weights[j] for j in bundle), Fraction(0))
        if weight == 0:
            raise BundleError("zero-mass bundle")
        row = self.valuations[bidder]
        return sum((self.weights[j] * row[j] for j in bundle), Fraction(0)) / weight

    def bundle_value(self, items: Iterable[int]) -> Fraction:
        """v(S): second-highest bid, counted with multiplicity; 0 when k = 1 or mu(S) = 0."""
        bundle = tuple(items)
        if self.k < 2 or self.mass(bundle) == 0:
            return Fraction(0)
        bids = sorted((self.bundle_bid(i, bundle) for i in range(self.k)), reverse=True)
        return bids[1]

    def contribution_of_mask(self, mask: int) -> Fraction:
        """
        mu(S) * v(S) for the bundle encoded by `mask`, computed as the
        second-highest of the per-bidder sums of mu(j) * v_ij over S.
        """
        cached = self._contribution_cache.get(mask)
        if cached is not None:
            return cached
        if self.k < 2:
            value = Fraction(0)
        else:
            columns = self._weighted_columns()
            sums = [Fraction(0)] * self.k
            for j in items_of(mask):
                column = columns[j]
                sums = [acc + x for acc, x in zip(sums, column)]
            sums.sort(reverse=True)
            value = sums[1]
        self._contribution_cache[mask] = value
        return value

    def contribution(self, items: Iterable[int]) -> Fraction:
        return self.contribution_of_mask(mask_of(items))

    def revenue_of_masks(self, masks: Iterable[int]) -> Fraction:
        return sum((self.contribution_of_mask(mask) for mask in masks), Fraction(0))

    def revenue(self, partition: Partition) -> Fraction:
        """R(P) = sum over parts of mu(S) * v(S)."""
        self._check_partition(partition)
        return self.revenue_of_masks(partition.masks)

    def revenue_breakdown(self, partition: Partition) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Per-part contributions mu(S) * v(S), in canonical part order."""
        self._check_partition(partition)
        return [(part, self.contribution_of_mask(mask))
                for part, mask in zip(partition.parts, partition.masks)]

    def _check_partition(self, partition: Partition) -> None:
        found = partition.problems(self.n)
        if found:
            raise PartitionError(f"invalid partition {partition}: {found[0]}")

    def silent_partition(self) -> Partition:
        return Partition.trivial(self.n)

    def to_dict(self) -> Dict:
        """Convert instance to its JSON document form."""
        from .utils.instance_io import instance_to_document
        return instance_to_document(self)

    @classmethod
    def from_dict(cls, data: Dict) -> 'DSPInstance':
        """Create a validated instance from its JSON document form."""
        from .utils.instance_io import instance_from_document
        return instance_from_document(data)

    def save(self, filepath: str):
        """Save instance to a JSON file."""
        from .utils.instance_io import save_instance
        save_instance(self, filepath)

    @classmethod
    def load(cls, filepath: str) -> 'DSPInstance':
        """Load and validate an instance from a JSON file."""
        from .utils.instance_io import load_instance
        return load_instance(filepath)

    def same_as(self, other: "DSPInstance") -> bool:
        """Structural equality of the model data (names included)."""
        return (self.weights == other.weights and self.valuations == other.valuations
                and self.mediators == other.mediators and self.item_names == other.item_names
                and self.bidder_names == other.bidder_names
                and self.mediator_names == other.mediator_names)

    def __repr__(self) -> str:
        return f"DSPInstance(name={self.name!r}, n={self.n}, k={self.k}, m={self.m})"

"""
Partitions of the item set: the universal signaling object.
Handles canonical form, the meet (joint partition), refinement tests and
enumeration of coarsenings (a mediator's strategy space).
"""

import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, List, Sequence, Tuple

from .exceptions import CapExceededError, PartitionError

Part = Tuple[int, ...]

DEFAULT_MAX_PARTS = 10


def _canonical(parts: Iterable[Iterable[int]]) -> Tuple[Part, ...]:
    ordered = [tuple(sorted(part)) for part in parts]
    ordered.sort(key=lambda part: (part[0] if part else -1, part))
    return tuple(ordered)


def mask_of(items: Iterable[int]) -> int:
    """Bitmask with one bit per item index."""
    mask = 0
    for item in items:
        mask |= 1 << item
    return mask


def items_of(mask: int) -> Part:
    """Sorted item indices of a bitmask."""
    items = []
    index = 0
    while mask:
        if mask & 1:
            items.append(index)
        mask >>= 1
        index += 1
    return tuple(items)


@dataclass(frozen=True, order=True)
class Partition:
    """
    A partition of item indices in canonical form: items sorted inside each
    part, parts sorted by smallest member. Equality is structural.

    Construction canonicalizes but does not validate; call check() (or use
    the instance-level validation) before trusting an externally built one.
    """
    parts: Tuple[Part, ...]

    def __post_init__(self):
        object.__setattr__(self, 'parts', _canonical(self.parts))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        """The silent report {I}."""
        return cls((tuple(range(n)),))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((j,) for j in range(n)))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Partition":
        return cls(tuple(items_of(mask) for mask in masks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Group items by label: item j goes to the part labelled labels[j]."""
        groups: dict = {}
        for item, label in enumerate(labels):
            groups.setdefault(label, []).append(item)
        return cls(tuple(tuple(group) for group in groups.values()))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of str(): '{{0,1},{2,3}}'."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise PartitionError(f"cannot parse partition {text!r}")
        inner = body[1:-1].strip()
        parts = []
        for chunk in re.findall(r"\{([^{}]*)\}", inner):
            tokens = [token.strip() for token in chunk.split(",") if token.strip()]
            try:
                parts.append(tuple(int(token) for token in tokens))
            except ValueError:
                raise PartitionError(f"cannot parse partition {text!r}")
        if re.sub(r"\{[^{}]*\}", "", inner).replace(",", "").strip():
            raise PartitionError(f"cannot parse partition {text!r}")
        return cls(tuple(parts))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(part) for part in self.parts)

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(item for part in self.parts for item in part)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Part]:
        return iter(self.parts)

    def is_trivial(self) -> bool:
        return len(self.parts) == 1

    def problems(self, n: int = None) -> List[str]:
        """Violated partition invariants, in checking order."""
        found = []
        if any(len(part) == 0 for part in self.parts):
            found.append("empty part")
        seen: set = set()
        for part in self.parts:
            if seen.intersection(part) or len(set(part)) != len(part):
                found.append("overlapping parts")
                break
            seen.update(part)
        if any(item < 0 for item in seen):
            found.append("negative item index")
        expected = n if n is not None else (max(seen) + 1 if seen else 0)
        if n is not None and any(item >= n for item in seen):
            found.append(f"item index out of range for {n} items")
        if not seen.issuperset(range(expected)):
            found.append("gap: parts do not cover every item")
        if n is not None and n > 0 and not self.parts:
            found.append("no parts")
        return found

    def check(self, n: int = None) -> "Partition":
        found = self.problems(n)
        if found:
            raise PartitionError(f"invalid partition {self}: {found[0]}")
        return self

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, part)) + "}" for part in self.parts) + "}"

    def to_list(self) -> List[List[int]]:
        return [list(part) for part in self.parts]


def _same_ground(partitions: Sequence[Partition]) -> None:
    ground = partitions[0].ground
    for other in partitions[1:]:
        if other.ground != ground:
            raise PartitionError("ground-set mismatch between partitions")


def meet_masks(first: Sequence[int], second: Sequence[int]) -> List[int]:
    """Nonempty pairwise intersections of two part-mask lists."""
    return [a & b for a in first for b in second if a & b]


def meet(partitions: Sequence[Partition]) -> Partition:
    """
    Joint partition: all nonempty intersections of one part per input.
    The result refines every input.
    """
    if not partitions:
        raise PartitionError("need at least one partition")
    _same_ground(partitions)
    masks = reduce(meet_masks, (p.masks for p in partitions[1:]), list(partitions[0].masks))
    return Partition.from_masks(masks)


def is_refinement(fine: Partition, coarse: Partition) -> bool:
    """True iff every part of `fine` lies inside some part of `coarse`."""
    _same_ground([fine, coarse])
    return all(any(a & ~b == 0 for b in coarse.masks) for a in fine.masks)


def set_partitions(elements: Sequence) -> Iterator[List[list]]:
    """
    Every partition of `elements` as a list of blocks.
    The first element is inserted into each block of every partition of the
    rest, or placed in a block of its own.
    """
    if not elements:
        yield []
        return
    if len(elements) == 1:
        yield [[elements[0]]]
        return
    first = elements[0]
    for smaller in set_partitions(elements[1:]):
        for index, block in enumerate(smaller):
            yield smaller[:index] + [[first] + block] + smaller[index + 1:]
        yield [[first]] + smaller


def bell(q: int) -> int:
    """Bell number via the Bell triangle."""
    if q < 0:
        raise ValueError("Bell numbers need q >= 0")
    row = [1]
    for _ in range(q):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def coarsenings(partition: Partition, max_parts: int = DEFAULT_MAX_PARTS) -> List[Partition]:
    """
    Every partition obtained by merging parts of `partition`, sorted in
    canonical-lexicographic order. Includes the input and the trivial partition.
    """
    q = len(partition.parts)
    if q > max_parts:
        raise CapExceededError(
            f"strategy space too large: {q} parts gives Bell({q}) = {bell(q)} coarsenings "
            f"(max_parts = {max_parts})"
        )
    result = [
        Partition.from_masks(reduce(lambda acc, mask: acc | mask, block, 0) for block in blocks)
        for blocks in set_partitions(list(partition.masks))
    ]
    result.sort()
    return result

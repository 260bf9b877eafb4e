"""
Tests for partitions: canonical form, meet, refinement and coarsenings.
"""

import itertools

import pytest

from src.exceptions import CapExceededError, PartitionError
from src.partition import (Partition, bell, coarsenings, is_refinement, meet, set_partitions)

PAIRS = Partition(((0, 1), (2, 3)))
CROSS = Partition(((0, 2), (1, 3)))
TRIVIAL = Partition.trivial(4)


def all_partitions(n):
    return [Partition(tuple(tuple(block) for block in blocks))
            for blocks in set_partitions(list(range(n)))]


def test_canonical_form():
    p = Partition(((3, 2), (1, 0)))
    assert p.parts == ((0, 1), (2, 3))
    assert p == PAIRS
    assert Partition(((2,), (0, 1))).parts == ((0, 1), (2,))


def test_format_and_parse():
    assert str(PAIRS) == "{{0,1},{2,3}}"
    assert Partition.parse("{{2,3},{1,0}}") == PAIRS
    assert Partition.parse(" { {0} , {1,2} } ") == Partition(((0,), (1, 2)))
    with pytest.raises(PartitionError):
        Partition.parse("{0,1}")
    with pytest.raises(PartitionError):
        Partition.parse("{{a}}")


@pytest.mark.parametrize("p", all_partitions(4))
def test_parse_inverts_format(p):
    assert Partition.parse(str(p)) == p


def test_problems_in_checking_order():
    assert Partition(((0, 1), (1, 2, 3))).problems(4)[0] == "overlapping parts"
    assert Partition(((0, 1), (3,))).problems(4) == ["gap: parts do not cover every item"]
    assert "empty part" in Partition(((0, 1, 2, 3), ())).problems(4)
    assert Partition(((0, 1, 2, 3, 4),)).problems(4) == ["item index out of range for 4 items"]
    assert PAIRS.problems(4) == []
    with pytest.raises(PartitionError, match="overlapping parts"):
        Partition(((0, 1), (1, 2, 3))).check(4)


def test_meet_of_crossing_pairs_is_singletons():
    assert meet([PAIRS, CROSS]) == Partition.singletons(4)


def test_meet_identity_and_idempotence():
    assert meet([PAIRS, TRIVIAL]) == PAIRS
    assert meet([PAIRS, PAIRS]) == PAIRS
    assert meet([PAIRS]) == PAIRS


def test_meet_errors():
    with pytest.raises(PartitionError, match="need at least one partition"):
        meet([])
    with pytest.raises(PartitionError, match="ground-set mismatch"):
        meet([PAIRS, Partition.trivial(3)])


def test_meet_is_commutative_and_associative():
    partitions = all_partitions(4)
    for p, q in itertools.product(partitions, repeat=2):
        assert meet([p, q]) == meet([q, p])
        assert is_refinement(meet([p, q]), p)
    sample = partitions[::3]
    for p, q, r in itertools.product(sample, repeat=3):
        assert meet([meet([p, q]), r]) == meet([p, meet([q, r])])


def test_is_refinement_examples():
    assert is_refinement(PAIRS, PAIRS)
    assert is_refinement(Partition.singletons(4), CROSS)
    assert is_refinement(PAIRS, TRIVIAL)
    assert not is_refinement(PAIRS, CROSS)
    with pytest.raises(PartitionError):
        is_refinement(PAIRS, Partition.trivial(5))


def test_bell_numbers():
    assert [bell(q) for q in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert bell(10) == 115975


def test_coarsenings_small_cases():
    assert coarsenings(TRIVIAL) == [TRIVIAL]
    assert set(coarsenings(PAIRS)) == {PAIRS, TRIVIAL}
    assert len(coarsenings(Partition(((0,), (1,), (2, 3))))) == 5


def test_coarsenings_sorted_and_complete():
    base = Partition.singletons(4)
    result = coarsenings(base)
    assert result == sorted(result)
    assert len(result) == bell(4)
    assert base in result and TRIVIAL in result


@pytest.mark.parametrize("p", all_partitions(4))
def test_coarsenings_are_exactly_the_coarser_partitions(p):
    coarser = {q for q in all_partitions(4) if is_refinement(p, q)}
    assert set(coarsenings(p)) == coarser
    assert len(coarsenings(p)) == bell(len(p))


def test_coarsenings_cap():
    with pytest.raises(CapExceededError, match="strategy space too large"):
        coarsenings(Partition.singletons(11))
    assert len(coarsenings(Partition.singletons(5), max_parts=5)) == 52
    with pytest.raises(CapExceededError):
        coarsenings(Partition.singletons(5), max_parts=4)


def test_from_labels_and_masks():
    assert Partition.from_labels([0, 0, 1, 1]) == PAIRS
    assert Partition.from_labels([7, 3, 7, 3]) == CROSS
    assert Partition.from_masks([0b0011, 0b1100]) == PAIRS
    assert PAIRS.masks == (0b0011, 0b1100)

"""
Finite games with a designated null strategy
Players choose strategy indices; index 0 is always the null strategy. The
value function maps a full index tuple to an exact rational.
"""

import itertools
import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_LIMITS, Limits
from ..dsp_instance import DSPInstance
from ..exceptions import CapExceededError, ProfileError
from ..partition import Partition, coarsenings, meet_masks
from ..solution import StrategyProfile

logger = logging.getLogger(__name__)

Profile = Tuple[int, ...]


class Game(ABC):
    """
    A game of m players with finite strategy lists and a total value function.
    """

    def __init__(self, strategy_counts: Sequence[int], name: str = "game"):
        if any(count < 1 for count in strategy_counts):
            raise ValueError("every player needs at least one strategy")
        self.strategy_counts: Tuple[int, ...] = tuple(strategy_counts)
        self.name = name

    @property
    def m(self) -> int:
        return len(self.strategy_counts)

    @property
    def profile_count(self) -> int:
        return math.prod(self.strategy_counts)

    @abstractmethod
    def value(self, profile: Profile) -> Fraction:
        """v(a) for a full strategy-index tuple."""

    def null_profile(self) -> Profile:
        return (0,) * self.m

    def null_value(self) -> Fraction:
        """v of the all-null profile."""
        return self.value(self.null_profile())

    def restrict(self, profile: Profile, coalition: Iterable[int]) -> Profile:
        """a_J: players outside J switched to the null strategy."""
        members = set(coalition)
        return tuple(s if t in members else 0 for t, s in enumerate(profile))

    def profiles(self) -> Iterator[Profile]:
        """Every profile in lexicographic index order."""
        return itertools.product(*(range(count) for count in self.strategy_counts))

    def check_profile(self, profile: Sequence[int]) -> Profile:
        profile = tuple(profile)
        if len(profile) != self.m:
            raise ProfileError(f"profile has {len(profile)} strategies for {self.m} players")
        for t, (s, count) in enumerate(zip(profile, self.strategy_counts)):
            if not 0 <= s < count:
                raise ProfileError(f"player {t}: strategy {s} outside 0..{count - 1}")
        return profile

    def strategy_label(self, player: int, strategy: int) -> str:
        return str(strategy)

    def check_profile_cap(self, limits: Limits) -> None:
        if self.profile_count > limits.max_profiles:
            sizes = " x ".join(map(str, self.strategy_counts))
            raise CapExceededError(
                f"profile space {sizes} = {self.profile_count} exceeds max_profiles = {limits.max_profiles}")

    def value_table(self, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
        """Dense object array of v over the full profile space."""
        self.check_profile_cap(limits)
        table = np.empty(self.strategy_counts, dtype=object)
        for profile in np.ndindex(*self.strategy_counts):
            table[profile] = self.value(profile)
        return table


class TableGame(Game):
    """A game whose value function is an explicit table."""

    def __init__(self, table: np.ndarray, name: str = "table_game"):
        table = np.asarray(table, dtype=object)
        super().__init__(table.shape, name=name)
        self.table = table

    def value(self, profile: Profile) -> Fraction:
        return self.table[tuple(profile)]

    def value_table(self, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
        self.check_profile_cap(limits)
        return self.table


class BumpGame(Game):
    """
    v(a) = base everywhere except at a_star, where it is base + surplus.
    """

    def __init__(self, strategy_counts: Sequence[int], a_star: Sequence[int],
                 base: Fraction, surplus: Fraction, name: str = "bump_game"):
        super().__init__(strategy_counts, name=name)
        self.a_star = self.check_profile(a_star)
        self.base = Fraction(base)
        self.surplus = Fraction(surplus)

    def value(self, profile: Profile) -> Fraction:
        return self.base + self.surplus if tuple(profile) == self.a_star else self.base


class DSPGame(Game):
    """
    The signaling game of a DSP instance: player t picks a coarsening of her
    base partition and the value is the revenue of the meet.

    Strategy 0 is the silent report {I}; the remaining coarsenings follow in
    canonical-lexicographic order.
    """

    def __init__(self, instance: DSPInstance, limits: Limits = DEFAULT_LIMITS):
        self.instance = instance
        self.strategies: List[List[Partition]] = []
        silent = Partition.trivial(instance.n)
        for base in instance.mediators:
            options = coarsenings(base, limits.max_parts)
            self.strategies.append([silent] + [p for p in options if p != silent])
        self._masks = [[p.masks for p in options] for options in self.strategies]
        super().__init__([len(options) for options in self.strategies], name=instance.name)
        logger.info(f"DSP game {instance.name}: strategy counts {self.strategy_counts}")

    def value(self, profile: Profile) -> Fraction:
        masks = [(1 << self.instance.n) - 1]
        for t, s in enumerate(profile):
            masks = meet_masks(masks, self._masks[t][s])
        return self.instance.revenue_of_masks(masks)

    def strategy_label(self, player: int, strategy: int) -> str:
        return str(self.strategies[player][strategy])

    def to_profile(self, profile: Profile) -> StrategyProfile:
        return StrategyProfile(tuple(self.strategies[t][s] for t, s in enumerate(profile)))

    def index_of(self, profile: StrategyProfile) -> Profile:
        """Strategy indices of a profile; every report must coarsen its base partition."""
        if len(profile.reports) != self.m:
            raise ProfileError(f"profile has {len(profile.reports)} reports for {self.m} mediators")
        indices = []
        for t, report in enumerate(profile.reports):
            try:
                indices.append(self.strategies[t].index(report))
            except ValueError:
                raise ProfileError(
                    f"mediator {t}: report {report} does not coarsen base partition "
                    f"{self.instance.mediators[t]}")
        return tuple(indices)

    def silent_profile(self) -> Profile:
        return self.null_profile()

    def full_profile(self) -> Profile:
        return self.index_of(StrategyProfile.full(self.instance))

    def value_table(self, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
        """Depth-first fill sharing meet prefixes between profiles."""
        self.check_profile_cap(limits)
        table = np.empty(self.strategy_counts, dtype=object)
        revenue = self.instance.revenue_of_masks

        def fill(t: int, masks: List[int], index: Profile):
            if t == self.m:
                table[index] = revenue(masks)
                return
            for s, report in enumerate(self._masks[t]):
                fill(t + 1, meet_masks(masks, report), index + (s,))

        fill(0, [(1 << self.instance.n) - 1], ())
        return table

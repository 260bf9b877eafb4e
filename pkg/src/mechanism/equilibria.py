"""
Pure Nash equilibria, efficiency ratios and the anonymity property
Equilibria are read off the potential table: a profile is an equilibrium of
the Shapley mechanism exactly when no single player can raise the potential.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Union

import numpy as np

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import PreconditionError
from .game import Game, Profile
from .shapley import PaymentVector, potential_weight, shapley_subsets

logger = logging.getLogger(__name__)


def value_table(game: Game, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
    """v over the whole profile space as an object array of Fractions."""
    return game.value_table(limits)


def potential_table(game: Game, limits: Limits = DEFAULT_LIMITS,
                    values: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Phi over the whole profile space. v(a_J) only depends on the axes in J,
    so each coalition term is a slice at index 0 on the other axes,
    broadcast back to the full shape.
    """
    values = value_table(game, limits) if values is None else values
    m = game.m
    table = np.full(game.strategy_counts, Fraction(0), dtype=object)
    for coalition in range(1, 1 << m):
        members = [t for t in range(m) if coalition >> t & 1]
        index = tuple(slice(None) if coalition >> t & 1 else slice(0, 1) for t in range(m))
        table = table + potential_weight(len(members), m) * values[index]
    return table


class Equilibrium(NamedTuple):
    profile: Profile
    value: Fraction
    payments: PaymentVector


@dataclass(frozen=True)
class Ratio:
    """An efficiency ratio; value None stands for an infinite ratio."""
    value: Optional[Fraction]

    @classmethod
    def of(cls, numerator: Fraction, denominator: Fraction) -> "Ratio":
        if denominator == 0:
            return cls(None) if numerator > 0 else cls(Fraction(1))
        return cls(Fraction(numerator) / Fraction(denominator))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __le__(self, other: Union[int, Fraction]) -> bool:
        return not self.is_infinite and self.value <= other

    def __ge__(self, other: Union[int, Fraction]) -> bool:
        return self.is_infinite or self.value >= other

    def __str__(self) -> str:
        return "infinite" if self.is_infinite else str(self.value)


class EfficiencyReport(NamedTuple):
    poa: Ratio
    pos: Ratio
    opt: Fraction


def enumerate_equilibria(game: Game, limits: Limits = DEFAULT_LIMITS,
                         values: Optional[np.ndarray] = None) -> List[Equilibrium]:
    """
    Every pure Nash equilibrium of the Shapley mechanism, in lexicographic
    profile order, with its value and payments.
    """
    values = value_table(game, limits) if values is None else values
    logger.info(f"Enumerating equilibria of {game.name} over {values.size} profiles")
    phi = potential_table(game, limits, values)

    stable = np.ones(game.strategy_counts, dtype=bool)
    for axis in range(game.m):
        best = phi.max(axis=axis, keepdims=True)
        stable &= (phi == best).astype(bool)

    def lookup(profile: Profile) -> Fraction:
        return values[profile]

    equilibria = []
    for index in np.argwhere(stable):
        profile = tuple(int(s) for s in index)
        payments = shapley_subsets(game, profile, limits, value=lookup)
        equilibria.append(Equilibrium(profile, values[profile], payments))
    logger.info(f"Found {len(equilibria)} equilibria")
    return equilibria


def poa_pos(game: Game, limits: Limits = DEFAULT_LIMITS,
            equilibria: Optional[List[Equilibrium]] = None,
            values: Optional[np.ndarray] = None) -> EfficiencyReport:
    """Optimal value over the worst and over the best equilibrium value."""
    values = value_table(game, limits) if values is None else values
    if equilibria is None:
        equilibria = enumerate_equilibria(game, limits, values)
    opt = max(values.flat) if values.size else Fraction(0)
    worst = min(eq.value for eq in equilibria)
    best = max(eq.value for eq in equilibria)
    report = EfficiencyReport(poa=Ratio.of(opt, worst), pos=Ratio.of(opt, best), opt=opt)
    if report.poa.is_infinite:
        logger.warning(f"Price of anarchy of {game.name} is infinite (an equilibrium has value 0)")
    return report


def anonymity_check(game: Game, a_star: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> bool:
    """
    On a single-bump game (every profile other than a_star shares one
    value), each non-null player of a_star receives an equal share of
    v(a_star) - v(null) and null players receive nothing.
    """
    a_star = game.check_profile(a_star)
    game.check_profile_cap(limits)
    common: Optional[Fraction] = None
    for profile in game.profiles():
        if profile == a_star:
            continue
        value = game.value(profile)
        if common is None:
            common = value
        elif value != common:
            raise PreconditionError(
                f"not a single-bump game: profile {profile} has value {value}, expected {common}")

    payments = shapley_subsets(game, a_star, limits)
    active = [t for t, s in enumerate(a_star) if s != 0]
    share = (game.value(a_star) - game.null_value()) / len(active) if active else Fraction(0)
    return all(payments[t] == (share if t in active else 0) for t in range(game.m))

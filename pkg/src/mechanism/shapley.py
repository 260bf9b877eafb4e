"""
Shapley payments and the exact potential
Two evaluations of the same payment rule (average over player orderings, and
the weighted sum over coalitions) plus the potential whose unilateral
differences equal the payment differences.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import CapExceededError
from .game import Game, Profile

logger = logging.getLogger(__name__)

ValueFunction = Callable[[Profile], Fraction]


@dataclass(frozen=True)
class PaymentVector:
    """One payment per player."""
    payments: Tuple[Fraction, ...]

    def total(self) -> Fraction:
        return sum(self.payments, Fraction(0))

    def __getitem__(self, player: int) -> Fraction:
        return self.payments[player]

    def __len__(self) -> int:
        return len(self.payments)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.payments)

    def to_list(self) -> List[Fraction]:
        return list(self.payments)


def _check_players(game: Game, cap: int, kind: str) -> None:
    if game.m > cap:
        raise CapExceededError(f"{kind} Shapley sum over {game.m} players exceeds the cap of {cap}")


class _CoalitionValues:
    """v(a_J) keyed by the bitmask of J, evaluated lazily."""

    def __init__(self, game: Game, profile: Profile, value: Optional[ValueFunction] = None):
        self.game = game
        self.profile = tuple(profile)
        self.value = value or game.value
        self.cache: Dict[int, Fraction] = {}

    def __call__(self, coalition: int) -> Fraction:
        cached = self.cache.get(coalition)
        if cached is None:
            restricted = tuple(s if coalition >> t & 1 else 0 for t, s in enumerate(self.profile))
            cached = self.cache[coalition] = self.value(restricted)
        return cached


def shapley_permutation(game: Game, profile: Sequence[int], limits: Limits = DEFAULT_LIMITS,
                        value: Optional[ValueFunction] = None) -> PaymentVector:
    """
    Average marginal contribution over all m! orderings of the players.
    """
    _check_players(game, limits.max_permutation_players, "permutation")
    profile = game.check_profile(profile)
    m = game.m
    v = _CoalitionValues(game, profile, value)
    logger.debug(f"Permutation Shapley at {profile}: {factorial(m)} orderings")
    totals = [Fraction(0)] * m
    for order in itertools.permutations(range(m)):
        prefix = 0
        for t in order:
            before = v(prefix)
            prefix |= 1 << t
            totals[t] += v(prefix) - before
    orderings = factorial(m)
    return PaymentVector(tuple(total / orderings for total in totals))


def _subset_weight(size: int, m: int) -> Fraction:
    """gamma_J = |J|! (m - |J| - 1)! / m!"""
    return Fraction(factorial(size) * factorial(m - size - 1), factorial(m))


def _player_payment(m: int, player: int, v: _CoalitionValues) -> Fraction:
    others = [t for t in range(m) if t != player]
    payment = Fraction(0)
    bit = 1 << player
    for size in range(len(others) + 1):
        weight = _subset_weight(size, m)
        for members in itertools.combinations(others, size):
            coalition = sum(1 << t for t in members)
            payment += weight * (v(coalition | bit) - v(coalition))
    return payment


def shapley_subsets(game: Game, profile: Sequence[int], limits: Limits = DEFAULT_LIMITS,
                    value: Optional[ValueFunction] = None) -> PaymentVector:
    """
    Pi_t = sum over J not containing t of gamma_J (v(a_{J+t}) - v(a_J)).
    """
    _check_players(game, limits.max_subset_players, "subset")
    profile = game.check_profile(profile)
    v = _CoalitionValues(game, profile, value)
    return PaymentVector(tuple(_player_payment(game.m, t, v) for t in range(game.m)))


def shapley_payment(game: Game, profile: Sequence[int], player: int,
                    limits: Limits = DEFAULT_LIMITS,
                    value: Optional[ValueFunction] = None) -> Fraction:
    """Pi_t alone, through the coalition sum."""
    _check_players(game, limits.max_subset_players, "subset")
    profile = game.check_profile(profile)
    return _player_payment(game.m, player, _CoalitionValues(game, profile, value))


def potential_weight(size: int, m: int) -> Fraction:
    """beta_J = (|J| - 1)! (m - |J|)! / m! for nonempty J."""
    return Fraction(factorial(size - 1) * factorial(m - size), factorial(m))


def potential(game: Game, profile: Sequence[int], limits: Limits = DEFAULT_LIMITS,
              value: Optional[ValueFunction] = None) -> Fraction:
    """
    Phi(a) = sum over nonempty J of beta_J v(a_J).

    The empty coalition is left out; v(a_empty) does not depend on a, so
    this only shifts Phi by a constant.
    """
    _check_players(game, limits.max_subset_players, "subset")
    profile = game.check_profile(profile)
    m = game.m
    v = _CoalitionValues(game, profile, value)
    total = Fraction(0)
    for coalition in range(1, 1 << m):
        total += potential_weight(bin(coalition).count("1"), m) * v(coalition)
    return total


PAYMENT_RULES: Dict[str, Callable[..., PaymentVector]] = {
    "perm": shapley_permutation,
    "subset": shapley_subsets,
}


def payment_rule(name: str) -> Callable[..., PaymentVector]:
    try:
        return PAYMENT_RULES[name]
    except KeyError:
        raise ValueError(f"Unknown payment rule: {name}")

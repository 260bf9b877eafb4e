"""
Best-response dynamics under Shapley payments
Round-robin improving moves; every recorded step strictly raises the potential.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..config import DEFAULT_LIMITS, Limits
from .game import Game, Profile
from .shapley import payment_rule, potential, shapley_payment

logger = logging.getLogger(__name__)


def _payment(game: Game, profile: Profile, player: int, rule: str, limits: Limits) -> Fraction:
    if rule == "subset":
        return shapley_payment(game, profile, player, limits)
    return payment_rule(rule)(game, profile, limits)[player]


def _deviate(profile: Sequence[int], player: int, strategy: int) -> Profile:
    return tuple(strategy if t == player else s for t, s in enumerate(profile))


def best_response(game: Game, profile: Sequence[int], player: int, rule: str = "subset",
                  limits: Limits = DEFAULT_LIMITS) -> int:
    """
    Strategy of `player` maximizing her payment against the others. The
    current strategy is kept when it attains the maximum; otherwise the
    lowest maximizing index wins.
    """
    profile = game.check_profile(profile)
    current = profile[player]
    payments = [_payment(game, _deviate(profile, player, s), player, rule, limits)
                for s in range(game.strategy_counts[player])]
    best = max(payments)
    if payments[current] == best:
        return current
    return payments.index(best)


def is_nash(game: Game, profile: Sequence[int], rule: str = "subset",
            limits: Limits = DEFAULT_LIMITS) -> bool:
    """No player has a unilateral deviation with a strictly larger payment."""
    profile = game.check_profile(profile)
    for player in range(game.m):
        current = _payment(game, profile, player, rule, limits)
        for s in range(game.strategy_counts[player]):
            if s != profile[player] and \
                    _payment(game, _deviate(profile, player, s), player, rule, limits) > current:
                return False
    return True


@dataclass(frozen=True)
class DynamicsStep:
    player: int
    old: int
    new: int
    phi_before: Fraction
    phi_after: Fraction


@dataclass
class DynamicsTrace:
    """Improving steps of one run, the final profile and whether it converged."""
    steps: List[DynamicsStep]
    final: Profile
    converged: bool
    passes: int = 0
    labels: Dict[Tuple[int, int], str] = field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        """One row per improving step; rationals as exact strings."""
        rows = []
        for number, step in enumerate(self.steps, 1):
            rows.append({
                'step': number,
                'player': step.player,
                'old': step.old,
                'new': step.new,
                'old_label': self.labels.get((step.player, step.old), str(step.old)),
                'new_label': self.labels.get((step.player, step.new), str(step.new)),
                'phi_before': str(step.phi_before),
                'phi_after': str(step.phi_after),
            })
        columns = ['step', 'player', 'old', 'new', 'old_label', 'new_label',
                   'phi_before', 'phi_after']
        return pd.DataFrame(rows, columns=columns)


class BestResponseDynamics:
    """
    Round-robin best-response dynamics. Only strictly improving moves are
    taken, so the potential rises at every step and the run terminates.
    """

    def __init__(self, game: Game, rule: str = "subset", order: Optional[Sequence[int]] = None,
                 limits: Limits = DEFAULT_LIMITS):
        self.game = game
        self.rule = rule
        self.limits = limits
        self.order = list(order) if order is not None else list(range(game.m))
        if sorted(self.order) != list(range(game.m)):
            raise ValueError(f"player order {self.order} is not a permutation of 0..{game.m - 1}")
        self.logger = logging.getLogger(__name__)
        self.stats: Dict[str, Any] = {'passes': 0, 'steps': 0}

    def run(self, start: Sequence[int]) -> DynamicsTrace:
        current = list(self.game.check_profile(start))
        phi = potential(self.game, tuple(current), self.limits)
        steps: List[DynamicsStep] = []
        labels: Dict[Tuple[int, int], str] = {}
        passes = 0

        improved = True
        while improved:
            improved = False
            passes += 1
            for player in self.order:
                choice = best_response(self.game, current, player, self.rule, self.limits)
                if choice == current[player]:
                    continue
                old = current[player]
                current[player] = choice
                phi_after = potential(self.game, tuple(current), self.limits)
                steps.append(DynamicsStep(player, old, choice, phi, phi_after))
                for s in (old, choice):
                    labels[(player, s)] = self.game.strategy_label(player, s)
                self.logger.debug(f"Player {player}: {old} -> {choice}, potential {phi} -> {phi_after}")
                phi = phi_after
                improved = True

        self.stats = {'passes': passes, 'steps': len(steps)}
        self.logger.info(f"Best-response dynamics converged after {len(steps)} steps "
                         f"in {passes} passes")
        return DynamicsTrace(steps=steps, final=tuple(current), converged=True,
                             passes=passes, labels=labels)

    def get_stats(self) -> Dict[str, Any]:
        """Get dynamics statistics."""
        return self.stats.copy()


def run_brd(game: Game, start: Sequence[int], order: Optional[Sequence[int]] = None,
            rule: str = "subset", limits: Limits = DEFAULT_LIMITS) -> DynamicsTrace:
    return BestResponseDynamics(game, rule=rule, order=order, limits=limits).run(start)

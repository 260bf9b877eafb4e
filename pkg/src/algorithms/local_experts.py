"""
Local experts algorithm for DSP
Greedy cover-pairing for instances whose mediators are all local experts,
combined with the silent and all-report profiles into a 5-approximation.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..constraints.local_expert import LocalExpertConstraint
from ..dsp_instance import DSPInstance
from ..exceptions import PreconditionError
from ..partition import Partition
from ..solution import Solution, StrategyProfile
from .baselines import AllReport, SilentBaseline

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpertView:
    """
    Per-item quantities of a local-expert instance.

    h[j] and s[j] are mu(j) times the largest and second-largest value any
    bidder has for j; owner[j] is the lowest-index bidder attaining h[j]
    (this assignment defines the disjoint sets H_i). expert_sets[t] is I_t
    and hat_I their union.
    """
    hat_I: FrozenSet[int]
    h: Tuple[Fraction, ...]
    s: Tuple[Fraction, ...]
    owner: Tuple[int, ...]
    expert_sets: Tuple[FrozenSet[int], ...]

    def holdings(self, bidder: int) -> FrozenSet[int]:
        """H_i: items of hat_I owned by `bidder`."""
        return frozenset(j for j in self.hat_I if self.owner[j] == bidder)

    def h_sum(self, items: Iterable[int]) -> Fraction:
        return sum((self.h[j] for j in items), Fraction(0))


def expert_view(instance: DSPInstance) -> ExpertView:
    sets = LocalExpertConstraint(instance).expert_sets()
    h, s, owner = [], [], []
    for j in range(instance.n):
        column = [instance.valuations[i][j] for i in range(instance.k)]
        top = max(column)
        second = sorted(column, reverse=True)[1] if instance.k > 1 else Fraction(0)
        h.append(instance.mu(j) * top)
        s.append(instance.mu(j) * second)
        owner.append(column.index(top))
    hat_I = frozenset().union(*sets) if sets else frozenset()
    return ExpertView(hat_I=hat_I, h=tuple(h), s=tuple(s), owner=tuple(owner), expert_sets=sets)


def all_talk_bound(view: ExpertView) -> Fraction:
    """Sum of s_j over hat_I; the all-report profile earns at least this much."""
    return sum((view.s[j] for j in view.hat_I), Fraction(0))


def phi(instance: DSPInstance, view: ExpertView, items: Iterable[int]) -> Fraction:
    """Sum of the k-1 smallest per-bidder sums of h over H_i intersected with S."""
    bundle = set(items)
    sums = [view.h_sum(view.holdings(i) & bundle) for i in range(instance.k)]
    if not sums:
        return Fraction(0)
    return sum(sums, Fraction(0)) - max(sums)


def _candidate_covers(instance: DSPInstance, view: ExpertView, item: int,
                      alive: Set[int]) -> List[Tuple[int, int, FrozenSet[int]]]:
    candidates = []
    for t, domain in enumerate(view.expert_sets):
        if item not in domain:
            continue
        for bidder in range(instance.k):
            if bidder == view.owner[item]:
                continue
            candidates.append((t, bidder, frozenset(domain & view.holdings(bidder) & alive)))
    return candidates


def find_cover(instance: DSPInstance, view: ExpertView, item: int,
               alive: Iterable[int]) -> FrozenSet[int]:
    """
    A cover of `item` among the alive items: a subset of some
    I_t & H_i' & alive with item in I_t and i' != owner[item].

    The best candidate (largest h-sum, ties to lowest t then lowest i') is
    trimmed into [h_j, 2 h_j] when it reaches h_j; otherwise it is returned
    whole, possibly empty.
    """
    alive = set(alive)
    if item not in alive:
        raise PreconditionError(f"item {item} is not alive")
    if item not in view.hat_I:
        raise PreconditionError(f"item {item} is outside every expert domain")

    best: Optional[FrozenSet[int]] = None
    best_total = Fraction(-1)
    for t, bidder, candidate in _candidate_covers(instance, view, item, alive):
        total = view.h_sum(candidate)
        if total > best_total:
            best, best_total = candidate, total
    if best is None:
        return frozenset()

    target = view.h[item]
    if best_total < target:
        return best

    cover = set(best)
    # drop the largest h first, higher index first on ties
    for j in sorted(best, key=lambda x: (view.h[x], x), reverse=True):
        if best_total <= 2 * target:
            break
        cover.discard(j)
        best_total -= view.h[j]
    return frozenset(cover)


class LocalExpertsAlgorithm:
    """
    Best of the silent profile, the all-report profile and the auxiliary
    greedy partition; at least a fifth of the optimum on local-expert
    instances.
    """

    def __init__(self, instance: DSPInstance):
        self.instance = instance
        self.view = expert_view(instance)
        self.stats: Dict[str, Any] = {
            'iterations': 0,
            'trace': [],
            'candidates': {},
        }

    def auxiliary(self) -> Solution:
        """
        Greedy pairing: repeatedly take the alive item with the largest h,
        merge it with a cover, and retire both. The resulting partition is
        realized by assigning each part to the lowest-index mediator whose
        domain contains it.
        """
        instance, view = self.instance, self.view
        alive: Set[int] = set(view.hat_I)
        remainder = tuple(j for j in range(instance.n) if j not in view.hat_I)
        parts: List[Tuple[int, ...]] = [remainder] if remainder else []
        assigned: Dict[int, List[Tuple[int, ...]]] = {t: [] for t in range(instance.m)}
        trace = []

        while alive:
            item = max(alive, key=lambda j: (view.h[j], -j))
            cover = find_cover(instance, view, item, alive)
            part = tuple(sorted(cover | {item}))
            parts.append(part)
            alive.difference_update(part)
            owner = min(t for t, domain in enumerate(view.expert_sets) if domain.issuperset(part))
            assigned[owner].append(part)
            contribution = instance.contribution(part)
            trace.append({'item': item, 'cover': sorted(cover), 'mediator': owner,
                          'contribution': contribution})
            logger.debug(f"Item {item} paired with cover {sorted(cover)} "
                         f"(mediator {owner}, contribution {contribution})")

        reports = []
        for t in range(instance.m):
            if not assigned[t]:
                reports.append(Partition.trivial(instance.n))
                continue
            used = {j for part in assigned[t] for j in part}
            rest = tuple(j for j in range(instance.n) if j not in used)
            reports.append(Partition(tuple(assigned[t]) + ((rest,) if rest else ())))

        joint = Partition(tuple(parts)) if parts else Partition.trivial(instance.n)
        self.stats['iterations'] = len(trace)
        self.stats['trace'] = trace
        return Solution(profile=StrategyProfile(tuple(reports)), joint=joint,
                        revenue=instance.revenue(joint), method="local-experts-auxiliary",
                        stats={'iterations': len(trace), 'trace': trace})

    def solve(self) -> Solution:
        start_time = time.time()
        candidates = [
            ('silent', SilentBaseline(self.instance).construct()),
            ('all-report', AllReport(self.instance).construct()),
            ('auxiliary', self.auxiliary()),
        ]
        best_name, best = candidates[0]
        for name, solution in candidates[1:]:
            if solution.revenue > best.revenue:
                best_name, best = name, solution
        self.stats['candidates'] = {name: solution.revenue for name, solution in candidates}
        self.stats['candidate'] = best_name
        self.stats['solve_time'] = time.time() - start_time
        logger.info(f"Local experts: best candidate {best_name} with revenue {best.revenue}")
        return Solution(profile=best.profile, joint=best.joint, revenue=best.revenue,
                        method="local-experts",
                        stats={'candidate': best_name, 'profiles_examined': len(candidates),
                               'elapsed': self.stats['solve_time']})

    def get_stats(self) -> Dict[str, Any]:
        """Get algorithm statistics."""
        return self.stats.copy()


def local_expert_auxiliary(instance: DSPInstance) -> Solution:
    return LocalExpertsAlgorithm(instance).auxiliary()


def local_expert_solve(instance: DSPInstance) -> Solution:
    return LocalExpertsAlgorithm(instance).solve()

"""
Exhaustive search for DSP
Enumerates every strategy profile (one coarsening per mediator) and keeps a
maximum-revenue one. Serves as the exact oracle for the approximation tests.
"""

import logging
import math
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed, effective_n_jobs
from tqdm import tqdm

from ..config import DEFAULT_LIMITS, Limits
from ..dsp_instance import DSPInstance
from ..exceptions import CapExceededError
from ..partition import Partition, bell, coarsenings, meet_masks
from ..solution import Solution, StrategyProfile

logger = logging.getLogger(__name__)

ScanResult = Tuple[Optional[Fraction], Optional[Tuple[int, ...]], int]


def _scan_block(instance: DSPInstance, strategy_masks: Sequence[Sequence[Sequence[int]]],
                first_indices: Sequence[int]) -> ScanResult:
    """
    Depth-first scan of all profiles whose first report is in `first_indices`.
    The meet is extended one mediator at a time, so prefixes are shared.
    Returns the first maximum in lexicographic index order.
    """
    m = len(strategy_masks)
    best_revenue: Optional[Fraction] = None
    best_index: Optional[Tuple[int, ...]] = None
    examined = 0

    def visit(t: int, masks: List[int], index: Tuple[int, ...]):
        nonlocal best_revenue, best_index, examined
        if t == m:
            examined += 1
            revenue = instance.revenue_of_masks(masks)
            if best_revenue is None or revenue > best_revenue:
                best_revenue, best_index = revenue, index
            return
        for s, report in enumerate(strategy_masks[t]):
            visit(t + 1, meet_masks(masks, report), index + (s,))

    full = [(1 << instance.n) - 1]
    for s in first_indices:
        visit(1, meet_masks(full, strategy_masks[0][s]), (s,))
    return best_revenue, best_index, examined


class ExhaustiveSearch:
    """
    Brute-force optimum over the product of the mediators' coarsening lists.
    Ties go to the first profile in canonical-lexicographic order, including
    under parallel execution.
    """

    def __init__(self, instance: DSPInstance, limits: Limits = DEFAULT_LIMITS):
        self.instance = instance
        self.limits = limits
        self.stats: Dict[str, Any] = {
            'profiles_examined': 0,
            'strategy_counts': [],
            'workers': 1,
        }

    def profile_space_size(self) -> int:
        return math.prod(bell(len(p.parts)) for p in self.instance.mediators)

    def _strategies(self) -> List[List[Partition]]:
        size = self.profile_space_size()
        if size > self.limits.max_profiles:
            sizes = " x ".join(f"Bell({len(p.parts)})" for p in self.instance.mediators)
            raise CapExceededError(
                f"profile space {sizes} = {size} exceeds max_profiles = {self.limits.max_profiles}")
        return [coarsenings(p, self.limits.max_parts) for p in self.instance.mediators]

    def solve(self) -> Solution:
        """
        Enumerate every profile and return a maximum-revenue one.
        """
        start_time = time.time()
        if self.instance.m == 0:
            solution = Solution.from_profile(self.instance, StrategyProfile(()), "exact",
                                             profiles_examined=1)
            self.stats['profiles_examined'] = 1
            return solution

        strategies = self._strategies()
        strategy_masks = [[report.masks for report in reports] for reports in strategies]
        self.stats['strategy_counts'] = [len(reports) for reports in strategies]
        total = math.prod(self.stats['strategy_counts'])
        logger.info(f"Exhaustive search over {total} profiles of {self.instance!r}")

        first = list(range(len(strategies[0])))
        if self.limits.use_parallel(total) and len(first) > 1:
            results = self._scan_parallel(strategy_masks, first)
        else:
            results = [_scan_block(self.instance, strategy_masks, [s])
                       for s in tqdm(first, desc="exact", disable=not self.limits.show_progress)]

        best_revenue, best_index, examined = None, None, 0
        for revenue, index, count in results:
            examined += count
            if revenue is not None and (best_revenue is None or revenue > best_revenue):
                best_revenue, best_index = revenue, index

        profile = StrategyProfile(tuple(strategies[t][s] for t, s in enumerate(best_index)))
        self.stats['profiles_examined'] = examined
        self.stats['solve_time'] = time.time() - start_time
        logger.info(f"Exhaustive optimum {best_revenue} after {examined} profiles")
        return Solution.from_profile(self.instance, profile, "exact",
                                     profiles_examined=examined, elapsed=self.stats['solve_time'])

    def _scan_parallel(self, strategy_masks, first: List[int]) -> List[ScanResult]:
        n_jobs = self.limits.n_jobs
        workers = effective_n_jobs(n_jobs)
        chunk = max(1, math.ceil(len(first) / (4 * workers)))
        blocks = [first[i:i + chunk] for i in range(0, len(first), chunk)]
        self.stats['workers'] = workers
        # blocks are contiguous and returned in order, so the sequential
        # reduction keeps the lexicographically first maximum
        return Parallel(n_jobs=n_jobs)(
            delayed(_scan_block)(self.instance, strategy_masks, block) for block in blocks)

    def get_stats(self) -> Dict[str, Any]:
        """Get algorithm statistics."""
        return self.stats.copy()


def solve_exact(instance: DSPInstance, limits: Limits = DEFAULT_LIMITS) -> Solution:
    return ExhaustiveSearch(instance, limits).solve()

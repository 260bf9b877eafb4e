"""
Baseline constructions for DSP
The all-silent profile and the all-report profile.
"""

import logging

from ..dsp_instance import DSPInstance
from ..solution import Solution, StrategyProfile

logger = logging.getLogger(__name__)


class SilentBaseline:
    """
    Every mediator stays silent, so the joint partition is {I}.
    Within a factor max{1, min{n, k-1}} of the optimum.
    """

    def __init__(self, instance: DSPInstance):
        self.instance = instance

    def construct(self) -> Solution:
        solution = Solution.from_profile(self.instance, StrategyProfile.silent(self.instance),
                                         "silent", profiles_examined=1)
        logger.info(f"Silent baseline revenue {solution.revenue}")
        return solution

    def guarantee(self) -> int:
        """Approximation factor certified for the silent profile."""
        return max(1, min(self.instance.n, self.instance.k - 1))


class AllReport:
    """
    Every mediator reports her base partition; the joint partition is the
    meet of all base partitions.
    """

    def __init__(self, instance: DSPInstance):
        self.instance = instance

    def construct(self) -> Solution:
        solution = Solution.from_profile(self.instance, StrategyProfile.full(self.instance),
                                         "all-report", profiles_examined=1)
        logger.info(f"All-report revenue {solution.revenue}")
        return solution


def baseline_silent(instance: DSPInstance) -> Solution:
    return SilentBaseline(instance).construct()


def all_report(instance: DSPInstance) -> Solution:
    return AllReport(instance).construct()

"""
DSP Solver
Main solver class dispatching to the exact, baseline and local-experts algorithms.
"""

import logging
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .algorithms.baselines import AllReport, SilentBaseline
from .algorithms.exhaustive_search import ExhaustiveSearch
from .algorithms.local_experts import LocalExpertsAlgorithm
from .config import DEFAULT_LIMITS, Limits
from .dsp_instance import DSPInstance
from .solution import Solution

logger = logging.getLogger(__name__)

METHODS = ("exact", "silent", "all-report", "local-experts")


class DSPSolver:
    """
    Main DSP solver: picks an algorithm by name and records its statistics.
    """

    def __init__(self, instance: DSPInstance, limits: Limits = DEFAULT_LIMITS):
        self.instance = instance
        self.limits = limits
        self.best_solution: Optional[Solution] = None
        self.algorithm_stats: Dict[str, Any] = {}

    def solve(self, method: str = "exact", **kwargs) -> Solution:
        """
        Solve the DSP instance using the specified method.

        Args:
            method: One of 'exact', 'silent', 'all-report', 'local-experts'
            **kwargs: Limit overrides for the exact search (max_profiles, max_parts, n_jobs)

        Returns:
            The solution found
        """
        start_time = time.time()

        if method == "exact":
            search = ExhaustiveSearch(self.instance, self.limits.with_overrides(**kwargs))
            solution = search.solve()
            self.algorithm_stats = search.get_stats()
        elif method == "silent":
            solution = SilentBaseline(self.instance).construct()
            self.algorithm_stats = {}
        elif method == "all-report":
            solution = AllReport(self.instance).construct()
            self.algorithm_stats = {}
        elif method == "local-experts":
            algorithm = LocalExpertsAlgorithm(self.instance)
            solution = algorithm.solve()
            self.algorithm_stats = algorithm.get_stats()
        else:
            raise ValueError(f"Unknown method: {method}")

        solve_time = time.time() - start_time
        self.algorithm_stats.update({
            'method': method,
            'solve_time': solve_time,
            'revenue': solution.revenue,
        })
        solution.stats.setdefault('elapsed', solve_time)

        self.best_solution = solution
        return solution

    def get_stats(self) -> Dict[str, Any]:
        """Get solving statistics."""
        return self.algorithm_stats.copy()

    def compare_methods(self, methods: List[str] = None) -> Dict[str, Dict[str, Any]]:
        """
        Run several methods on the instance and compare them with the exact optimum.

        Returns:
            Per method: revenue, ratio revenue / OPT (None when OPT = 0) and time
        """
        if methods is None:
            methods = [m for m in METHODS if m != "exact"]

        start_time = time.time()
        optimum = self.solve("exact").revenue
        exact_time = time.time() - start_time
        results = {}
        for method in methods:
            start_time = time.time()
            solution = self.solve(method)
            results[method] = {
                'revenue': solution.revenue,
                'ratio': solution.revenue / optimum if optimum > 0 else None,
                'time': time.time() - start_time,
            }
            logger.info(f"{method}: revenue {solution.revenue} (OPT {optimum})")
        results['exact'] = {'revenue': optimum, 'ratio': Fraction(1) if optimum > 0 else None,
                            'time': exact_time}
        return results

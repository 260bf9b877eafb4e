"""
Algorithms package for DSP solving
"""

from .baselines import AllReport, SilentBaseline, all_report, baseline_silent
from .exhaustive_search import ExhaustiveSearch, solve_exact
from .local_experts import (ExpertView, LocalExpertsAlgorithm, all_talk_bound, expert_view,
                            find_cover, local_expert_auxiliary, local_expert_solve, phi)

__all__ = ['SilentBaseline', 'AllReport', 'ExhaustiveSearch', 'LocalExpertsAlgorithm',
           'ExpertView', 'baseline_silent', 'all_report', 'solve_exact', 'expert_view',
           'find_cover', 'local_expert_auxiliary', 'local_expert_solve', 'phi',
           'all_talk_bound']

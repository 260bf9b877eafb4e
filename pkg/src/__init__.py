"""
DSP Lab Package
Exact revenue, solvers and the Shapley mechanism for distributed signaling
games over second-price auctions.
"""

__version__ = "1.0.0"

from .dsp_instance import DSPInstance
from .dsp_solver import DSPSolver
from .partition import Partition, coarsenings, is_refinement, meet
from .solution import Solution, StrategyProfile

__all__ = ['DSPSolver', 'DSPInstance', 'Solution', 'StrategyProfile', 'Partition', 'meet',
           'is_refinement', 'coarsenings']

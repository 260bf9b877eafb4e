"""
Shapley payment mechanism over finite games with a null strategy
"""

from .dynamics import (BestResponseDynamics, DynamicsStep, DynamicsTrace, best_response,
                       is_nash, run_brd)
from .equilibria import (EfficiencyReport, Equilibrium, Ratio, anonymity_check,
                         enumerate_equilibria, poa_pos, potential_table, value_table)
from .game import BumpGame, DSPGame, Game, TableGame
from .shapley import (PAYMENT_RULES, PaymentVector, potential, shapley_payment,
                      shapley_permutation, shapley_subsets)

__all__ = ['Game', 'TableGame', 'BumpGame', 'DSPGame', 'PaymentVector', 'shapley_permutation',
           'shapley_subsets', 'shapley_payment', 'potential', 'PAYMENT_RULES', 'best_response',
           'is_nash', 'run_brd', 'BestResponseDynamics', 'DynamicsStep', 'DynamicsTrace',
           'value_table', 'potential_table', 'enumerate_equilibria', 'poa_pos',
           'anonymity_check', 'Equilibrium', 'Ratio', 'EfficiencyReport']

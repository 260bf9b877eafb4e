"""
Constraints package for DSP
Feasibility checks for instances, strategy profiles and local-expert structure.
"""

from .instance_validity import InstanceConstraint
from .refinement import RefinementConstraint
from .local_expert import LocalExpertConstraint, expert_set, is_local_expert

__all__ = ['InstanceConstraint', 'RefinementConstraint', 'LocalExpertConstraint',
           'expert_set', 'is_local_expert']

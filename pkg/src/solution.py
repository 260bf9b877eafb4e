"""
Solution representation for DSP
Strategy profiles (one report per mediator) and solver results.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .dsp_instance import DSPInstance
from .partition import Partition, meet


@dataclass(frozen=True)
class StrategyProfile:
    """
    One reported partition per mediator. Feasibility (each report coarsens
    its mediator's base partition) is checked by RefinementConstraint.
    """
    reports: Tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, 'reports', tuple(self.reports))

    @classmethod
    def silent(cls, instance: DSPInstance) -> "StrategyProfile":
        return cls(tuple(Partition.trivial(instance.n) for _ in range(instance.m)))

    @classmethod
    def full(cls, instance: DSPInstance) -> "StrategyProfile":
        """Every mediator reports her base partition."""
        return cls(instance.mediators)

    def joint(self) -> Partition:
        return meet(self.reports)

    def speaking(self) -> List[int]:
        """Mediators whose report differs from the silent {I}."""
        return [t for t, report in enumerate(self.reports) if not report.is_trivial()]

    def to_list(self) -> List[List[List[int]]]:
        return [report.to_list() for report in self.reports]

    def __str__(self) -> str:
        return "(" + ", ".join(str(report) for report in self.reports) + ")"


@dataclass
class Solution:
    """
    A solved DSP: the profile, its joint partition and its exact revenue.
    """
    profile: StrategyProfile
    joint: Partition
    revenue: Fraction
    method: str
    stats: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_profile(cls, instance: DSPInstance, profile: StrategyProfile, method: str,
                     **stats: Any) -> "Solution":
        joint = profile.joint() if profile.reports else Partition.trivial(instance.n)
        return cls(profile=profile, joint=joint, revenue=instance.revenue(joint),
                   method=method, stats=dict(stats))

    def is_consistent(self, instance: DSPInstance) -> bool:
        """revenue = R(joint) and joint = meet(reports), exactly."""
        joint = self.profile.joint() if self.profile.reports else Partition.trivial(instance.n)
        return joint == self.joint and instance.revenue(joint) == self.revenue

    def to_dict(self) -> Dict:
        """Convert solution to dictionary for serialization."""
        return {
            'method': self.method,
            'revenue': self.revenue,
            'profile': self.profile.to_list(),
            'joint': self.joint.to_list(),
            'stats': dict(self.stats),
        }

    def __str__(self) -> str:
        result = f"DSP Solution ({self.method})\n"
        result += f"Revenue: {self.revenue}\n"
        result += f"Joint partition: {self.joint}\n"
        for t, report in enumerate(self.profile.reports):
            result += f"Mediator {t}: {report}\n"
        return result

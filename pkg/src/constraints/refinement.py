"""
Refinement constraints for strategy profiles
A mediator may only report a coarsening of her base partition.
"""

from typing import List

from ..dsp_instance import DSPInstance
from ..exceptions import PartitionError, ProfileError
from ..partition import is_refinement


class RefinementConstraint:
    """
    Checks that every report of a profile coarsens its mediator's base partition.
    """

    def __init__(self, instance: DSPInstance):
        self.instance = instance

    def is_feasible(self, profile) -> bool:
        return len(self.get_violations(profile)) == 0

    def get_violations(self, profile) -> List[str]:
        violations = []
        if len(profile.reports) != self.instance.m:
            violations.append(
                f"profile has {len(profile.reports)} reports for {self.instance.m} mediators")
            return violations

        for t, (base, report) in enumerate(zip(self.instance.mediators, profile.reports)):
            problems = report.problems(self.instance.n)
            if problems:
                violations.append(f"mediator {t}: report {report} is invalid ({problems[0]})")
                continue
            try:
                coarsens = is_refinement(base, report)
            except PartitionError as error:
                violations.append(f"mediator {t}: {error}")
                continue
            if not coarsens:
                violations.append(f"mediator {t}: report {report} does not coarsen base partition {base}")
        return violations

    def check(self, profile) -> None:
        violations = self.get_violations(profile)
        if violations:
            raise ProfileError(violations[0])

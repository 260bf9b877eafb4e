"""
Instance validity constraints
Checks dimensions, signs, prior mass and the mediators' base partitions.
"""

from typing import List

from ..dsp_instance import DSPInstance


class InstanceConstraint:
    """
    Structural invariants of a DSP instance.
    Violations are reported in a fixed order so the first one is stable.
    """

    def is_feasible(self, instance: DSPInstance) -> bool:
        return len(self.get_violations(instance)) == 0

    def get_violations(self, instance: DSPInstance) -> List[str]:
        violations = []
        violations.extend(self._dimension_violations(instance))
        if violations:
            return violations

        if any(w < 0 for w in instance.weights):
            violations.append("negative weight")
        if any(v < 0 for row in instance.valuations for v in row):
            violations.append("negative valuation")
        if instance.total_weight <= 0 and not any(w < 0 for w in instance.weights):
            violations.append("zero total weight")

        for t, partition in enumerate(instance.mediators):
            for problem in partition.problems(instance.n):
                violations.append(f"mediator {t}: {problem}")
        return violations

    def _dimension_violations(self, instance: DSPInstance) -> List[str]:
        violations = []
        n = instance.n
        if n < 1:
            violations.append("dimension mismatch: at least one item is required")
        if instance.k < 1:
            violations.append("dimension mismatch: at least one bidder is required")
        for i, row in enumerate(instance.valuations):
            if len(row) != n:
                violations.append(
                    f"dimension mismatch: valuations row {i} has {len(row)} entries, expected {n}")
        if len(instance.item_names) != n:
            violations.append(f"dimension mismatch: {len(instance.item_names)} item names for {n} items")
        if len(instance.bidder_names) != instance.k:
            violations.append(
                f"dimension mismatch: {len(instance.bidder_names)} bidder names for {instance.k} bidders")
        if len(instance.mediator_names) != instance.m:
            violations.append(
                f"dimension mismatch: {len(instance.mediator_names)} mediator names for {instance.m} mediators")
        return violations

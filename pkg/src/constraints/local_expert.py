"""
Local expert constraints
A local expert knows a set I_t perfectly and nothing outside it:
P_t = {{j} | j in I_t} + {I minus I_t}.
"""

from typing import FrozenSet, List, Optional, Tuple

from ..dsp_instance import DSPInstance
from ..exceptions import LocalExpertError


def expert_set(instance: DSPInstance, mediator: int) -> Optional[FrozenSet[int]]:
    """I_t when mediator t is a local expert, else None."""
    parts = instance.mediators[mediator].parts
    if sum(1 for part in parts if len(part) > 1) > 1:
        return None
    return frozenset(part[0] for part in parts if len(part) == 1)


def is_local_expert(instance: DSPInstance, mediator: int) -> Tuple[bool, Optional[FrozenSet[int]]]:
    """(True, I_t) for a local expert, (False, None) otherwise."""
    items = expert_set(instance, mediator)
    return items is not None, items


class LocalExpertConstraint:
    """
    Requires every mediator of an instance to be a local expert.
    """

    def __init__(self, instance: DSPInstance):
        self.instance = instance

    def is_feasible(self) -> bool:
        return len(self.get_violations()) == 0

    def get_violations(self) -> List[str]:
        return [f"mediator {t} is not a local expert"
                for t in range(self.instance.m) if expert_set(self.instance, t) is None]

    def expert_sets(self) -> Tuple[FrozenSet[int], ...]:
        """All I_t, raising on the first mediator that is not a local expert."""
        sets = []
        for t in range(self.instance.m):
            items = expert_set(self.instance, t)
            if items is None:
                raise LocalExpertError(t)
            sets.append(items)
        return tuple(sets)

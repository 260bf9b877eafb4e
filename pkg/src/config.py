"""
Enumeration limits and execution settings.
"""

import os
from dataclasses import dataclass, replace
from typing import Any

MAX_PROFILES_ENV = "DSPLAB_MAX_PROFILES"


@dataclass(frozen=True)
class Limits:
    """
    Caps on the Bell- and factorial-sized spaces the lab enumerates.

    max_parts bounds the part count of a partition whose coarsenings are
    enumerated (Bell(10) = 115975). max_profiles bounds the product of the
    per-mediator strategy counts. The two player caps bound the m! and
    2^(m-1) Shapley sums.
    """
    max_parts: int = 10
    max_profiles: int = 10 ** 7
    max_permutation_players: int = 9
    max_subset_players: int = 20
    max_mis_nodes: int = 20
    n_jobs: int = 1
    parallel_threshold: int = 50_000
    show_progress: bool = False

    @classmethod
    def from_env(cls, **overrides: Any) -> "Limits":
        """Defaults, then the environment, then explicit overrides."""
        values: dict = {}
        raw = os.environ.get(MAX_PROFILES_ENV)
        if raw:
            try:
                values['max_profiles'] = int(raw)
            except ValueError:
                raise ValueError(f"{MAX_PROFILES_ENV} must be an integer, got {raw!r}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_overrides(self, **overrides: Any) -> "Limits":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def use_parallel(self, work_items: int) -> bool:
        """Parallel enumeration only pays off on large spaces."""
        return self.n_jobs != 1 and work_items >= self.parallel_threshold


DEFAULT_LIMITS = Limits()

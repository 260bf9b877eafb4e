"""
Machine-readable experiment reports
Every rational appears as its exact string with a decimal rendering next to it.
JSON output is key-sorted; CSV output is a flat (record, field, exact, decimal) table.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd

from ..mechanism.equilibria import Ratio
from ..mechanism.shapley import PaymentVector
from ..partition import Partition
from ..solution import StrategyProfile
from .rationals import rational_field

TIMING_KEYS = ('elapsed', 'solve_time', 'time')


def to_jsonable(value: Any) -> Any:
    """Recursive conversion of domain values to JSON-ready structures."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return rational_field(value)
    if isinstance(value, Ratio):
        if value.is_infinite:
            return {'exact': "infinite", 'decimal': "inf"}
        return rational_field(value.value)
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, StrategyProfile):
        return [str(report) for report in value.reports]
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(item) for item in items]
    if isinstance(value, PaymentVector):
        return [to_jsonable(p) for p in value.payments]
    return str(value)


def _strip_timings(stats: Dict[str, Any]) -> Dict[str, Any]:
    return {key: value for key, value in stats.items() if key not in TIMING_KEYS}


@dataclass
class Report:
    """
    Result of one command. Only the fields a command fills are rendered.
    """
    command: str
    method: Optional[str] = None
    revenue: Optional[Fraction] = None
    profile: Optional[Any] = None
    joint: Optional[Partition] = None
    payments: Optional[List[Fraction]] = None
    equilibria: Optional[List[Dict[str, Any]]] = None
    poa: Optional[Ratio] = None
    pos: Optional[Ratio] = None
    opt: Optional[Fraction] = None
    extra: Dict[str, Any] = field(default_factory=dict)
    stats: Dict[str, Any] = field(default_factory=dict)
    deterministic: bool = True

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {'command': self.command}
        for key in ('method', 'revenue', 'profile', 'joint', 'payments', 'equilibria',
                    'poa', 'pos', 'opt'):
            value = getattr(self, key)
            if value is not None:
                doc[key] = to_jsonable(value)
        doc.update({key: to_jsonable(value) for key, value in self.extra.items()})
        stats = _strip_timings(self.stats) if self.deterministic else self.stats
        if stats:
            doc['stats'] = to_jsonable(stats)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=True) + "\n"

    def to_frame(self) -> pd.DataFrame:
        rows: List[Dict[str, str]] = []
        _flatten(self.to_document(), "", rows)
        return pd.DataFrame(rows, columns=['record', 'field', 'exact', 'decimal'])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def render(self, fmt: str = "json") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"Unknown format: {fmt}")


def _flatten(value: Any, path: str, rows: List[Dict[str, str]]) -> None:
    if isinstance(value, dict) and set(value) == {'exact', 'decimal'}:
        record, _, name = path.rpartition("/")
        rows.append({'record': record or "report", 'field': name,
                     'exact': value['exact'], 'decimal': value['decimal']})
    elif isinstance(value, dict):
        for key in sorted(value):
            _flatten(value[key], f"{path}/{key}" if path else key, rows)
    elif isinstance(value, list):
        for position, item in enumerate(value):
            _flatten(item, f"{path}/{position}", rows)
    else:
        record, _, name = path.rpartition("/")
        rows.append({'record': record or "report", 'field': name,
                     'exact': "" if value is None else str(value), 'decimal': ""})


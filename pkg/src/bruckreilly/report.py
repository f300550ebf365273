"""Outcome record shared by the structure, topology and verify modules."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .intset import IntSet

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CheckResult:
    status: str
    witness: object = None
    counterexample: object = None
    counts: dict = field(default_factory=dict)
    detail: str = ""

    def __bool__(self):
        return self.status == PASS

    @property
    def passed(self):
        return self.status == PASS


def jsonable(obj):
    """Convert results into plain JSON types with a stable layout."""
    if isinstance(obj, IntSet):
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(v) for v in obj), key=repr)
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    if hasattr(obj, "item"):
        return obj.item()
    return obj

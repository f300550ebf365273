"""Independent reference models used to cross-check the closed formulas."""
from __future__ import annotations

from typing import NamedTuple


class PartialShift(NamedTuple):
    """The partial map ``x -> x + shift`` on ``{x >= lo}`` of the integers."""
    lo: int
    shift: int


def as_shift(pair):
    """``(a, b)`` acts as ``x -> x - b + a`` on ``{x >= b}``."""
    a, b = pair
    return PartialShift(b, a - b)


def as_pair(f: PartialShift):
    return (f.lo + f.shift, f.lo)


def compose(f: PartialShift, g: PartialShift):
    """``f o g``: apply ``g`` first, then ``f`` where defined."""
    # x is in the domain when x >= g.lo and x + g.shift >= f.lo
    return PartialShift(max(g.lo, f.lo - g.shift), f.shift + g.shift)


def mul_by_shifts(x, y):
    """Product of two pairs computed by composing their partial shifts."""
    return as_pair(compose(as_shift(x), as_shift(y)))


def apply(f: PartialShift, x):
    return x + f.shift if x >= f.lo else None

"""Sets of integers that are finite unions of intervals.

An interval end may be infinite, so the class covers finite sets, upper and
lower tails, two-sided tails, and all Boolean combinations of them.  Every
operation here is exact; anything that would leave the class (for instance
scaling an infinite set by 2) raises :class:`UndecidableForm`.
"""
from __future__ import annotations

import math
from itertools import islice

from .errors import UndecidableForm

INF = math.inf


def _norm(intervals):
    if type(intervals) is list and len(intervals) == 1:
        lo, hi = intervals[0]
        return ((lo, hi),) if lo <= hi else ()
    ivs = sorted((lo, hi) for lo, hi in intervals if lo <= hi)
    out = []
    for lo, hi in ivs:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return tuple(out)


class IntSet:
    __slots__ = ("intervals",)

    def __init__(self, intervals=()):
        self.intervals = _norm(intervals)

    @classmethod
    def _normal(cls, intervals):
        # caller guarantees sorted, disjoint, non-adjacent intervals
        out = cls.__new__(cls)
        out.intervals = tuple(intervals)
        return out

    # constructors
    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def full(cls):
        return cls([(-INF, INF)])

    @classmethod
    def point(cls, k):
        return cls([(k, k)])

    @classmethod
    def points(cls, ks):
        return cls((k, k) for k in ks)

    @classmethod
    def interval(cls, lo, hi):
        return cls([(lo, hi)])

    @classmethod
    def upper(cls, n):
        """``{k : k >= n}``"""
        return cls([(n, INF)])

    @classmethod
    def lower(cls, n):
        """``{k : k <= n}``"""
        return cls([(-INF, n)])

    # comparisons
    def __eq__(self, other):
        return isinstance(other, IntSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        if not self.intervals:
            return "IntSet(∅)"
        parts = []
        for lo, hi in self.intervals:
            a = "-inf" if lo == -INF else str(lo)
            b = "inf" if hi == INF else str(hi)
            parts.append(a if lo == hi else f"[{a},{b}]")
        return "IntSet(" + " ∪ ".join(parts) + ")"

    def __contains__(self, k):
        for lo, hi in self.intervals:
            if k < lo:
                return False
            if k <= hi:
                return True
        return False

    def __bool__(self):
        return bool(self.intervals)

    def is_empty(self):
        return not self.intervals

    def is_finite(self):
        return all(lo != -INF and hi != INF for lo, hi in self.intervals)

    def bounded_below(self):
        return not self.intervals or self.intervals[0][0] != -INF

    def bounded_above(self):
        return not self.intervals or self.intervals[-1][1] != INF

    def __iter__(self):
        if not self.is_finite():
            raise UndecidableForm(f"cannot enumerate infinite set {self!r}")
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    def __len__(self):
        if not self.is_finite():
            raise UndecidableForm(f"infinite set {self!r} has no length")
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def sample(self, n):
        """First ``n`` members nearest the origin, for diagnostics."""
        members = []
        for lo, hi in self.intervals:
            a = max(lo, -n) if lo == -INF else lo
            b = min(hi, a + n) if hi == INF else hi
            members.extend(islice(range(int(a), int(b) + 1), n))
        return sorted(members, key=lambda k: (abs(k), k))[:n]

    # Boolean algebra
    def union(self, other):
        return IntSet(self.intervals + other.intervals)

    __or__ = union

    def intersection(self, other):
        out = []
        a, b = self.intervals, other.intervals
        p = q = 0
        while p < len(a) and q < len(b):
            lo = max(a[p][0], b[q][0])
            hi = min(a[p][1], b[q][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[p][1] < b[q][1]:
                p += 1
            else:
                q += 1
        return IntSet._normal(out)

    __and__ = intersection

    def complement(self):
        out = []
        prev = -INF
        for lo, hi in self.intervals:
            if lo != -INF:
                out.append((prev, lo - 1))
            prev = hi + 1
        if prev != INF:
            out.append((prev, INF))
        return IntSet._normal(out)

    def difference(self, other):
        return self.intersection(other.complement())

    __sub__ = difference

    def issubset(self, other):
        # an interval lies in a normalized union only if it lies in one piece
        return all(any(lo <= a and b <= hi for lo, hi in other.intervals)
                   for a, b in self.intervals)

    __le__ = issubset

    def isdisjoint(self, other):
        return all(b < lo or hi < a for a, b in self.intervals for lo, hi in other.intervals)

    # arithmetic images
    def shift(self, c):
        return IntSet._normal((lo + c, hi + c) for lo, hi in self.intervals)

    def negate(self):
        return IntSet._normal((-hi, -lo) for lo, hi in reversed(self.intervals))

    def minkowski_sum(self, other):
        if len(self.intervals) == 1 and len(other.intervals) == 1:
            (a, b), (c, d) = self.intervals[0], other.intervals[0]
            return IntSet._normal([(a + c, b + d)])
        return IntSet(
            (a + c, b + d) for a, b in self.intervals for c, d in other.intervals
        )

    def pairwise_max(self, other):
        # the max over a box [a,b]x[c,d] attains every value of [max(a,c), max(b,d)]
        if len(self.intervals) == 1 and len(other.intervals) == 1:
            (a, b), (c, d) = self.intervals[0], other.intervals[0]
            return IntSet._normal([(max(a, c), max(b, d))])
        return IntSet(
            (max(a, c), max(b, d)) for a, b in self.intervals for c, d in other.intervals
        )

    def scale(self, c):
        if self.is_empty():
            return self
        if c == 0:
            return IntSet.point(0)
        if c == 1:
            return self
        if c == -1:
            return self.negate()
        if not self.is_finite():
            raise UndecidableForm(f"{c}·{self!r} is not a finite union of intervals")
        return IntSet.points(c * k for k in self)

import math

import pytest
from hypothesis import given, strategies as st

from bruckreilly.errors import UndecidableForm
from bruckreilly.intset import IntSet

R = range(-25, 26)
ends = st.one_of(st.integers(-15, 15), st.just(math.inf), st.just(-math.inf))


@st.composite
def intsets(draw):
    ivs = draw(st.lists(st.tuples(ends, ends), max_size=4))
    return IntSet([(min(a, b), max(a, b)) for a, b in ivs if not (a == b and math.isinf(a))])


def members(A):
    return {k for k in R if k in A}


def naive_contains(A, k):
    return any(lo <= k <= hi for lo, hi in A.intervals)


@given(intsets())
def test_normal_form(A):
    iv = A.intervals
    for (a, b), (c, d) in zip(iv, iv[1:]):
        assert b + 1 < c
    assert IntSet(iv) == A


@given(intsets(), intsets())
def test_boolean_ops_pointwise(A, B):
    for k in R:
        assert (k in A | B) == (k in A or k in B)
        assert (k in A & B) == (k in A and k in B)
        assert (k in A - B) == (k in A and k not in B)
        assert (k in A.complement()) == (k not in A)
        assert (k in A) == naive_contains(A, k)


@given(intsets(), intsets())
def test_subset_and_disjoint_agree_with_samples(A, B):
    if A <= B:
        assert members(A) <= members(B)
    if A.isdisjoint(B):
        assert not members(A) & members(B)
    assert (A <= B) == (A - B).is_empty()
    assert A.isdisjoint(B) == (A & B).is_empty()


@given(intsets(), st.integers(-5, 5))
def test_shift_and_negate(A, c):
    for k in R:
        assert (k + c in A.shift(c)) == (k in A)
        assert (-k in A.negate()) == (k in A)


@given(intsets(), intsets())
def test_minkowski_and_max_on_finite_parts(A, B):
    box = IntSet.interval(-6, 6)
    a, b = A & box, B & box
    assert set(a.minkowski_sum(b)) == {x + y for x in a for y in b}
    assert set(a.pairwise_max(b)) == {max(x, y) for x in a for y in b}


def test_tails():
    assert IntSet.upper(5) <= IntSet.upper(3)
    assert not IntSet.upper(3) <= IntSet.upper(5)
    two = lambda n: IntSet.lower(-n) | IntSet.upper(n)
    assert two(4) <= two(2) and not two(2) <= two(4)
    assert two(4).isdisjoint(IntSet.points([0, 1, 2, 3, -3]))
    assert not IntSet.full() <= IntSet.upper(0)
    assert IntSet.upper(2).minkowski_sum(IntSet.upper(3)) == IntSet.upper(5)
    assert IntSet.upper(2).pairwise_max(IntSet.point(7)) == IntSet.upper(7)


def test_infinite_sets_refuse_enumeration():
    with pytest.raises(UndecidableForm):
        list(IntSet.upper(0))
    with pytest.raises(UndecidableForm):
        IntSet.upper(0).scale(2)
    assert IntSet.points([1, 2]).scale(3) == IntSet.points([3, 6])
    assert IntSet.upper(1).scale(0) == IntSet.point(0)

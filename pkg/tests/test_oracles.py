from hypothesis import given, strategies as st

from bruckreilly.extensions import mul_ext_bicyclic
from bruckreilly.oracles import apply, as_shift, compose, mul_by_shifts

ints = st.integers(-40, 40)


@given(ints, ints, ints, ints, st.integers(-100, 100))
def test_compose_acts_pointwise(a, b, c, d, x):
    f, g = as_shift((a, b)), as_shift((c, d))
    gx = apply(g, x)
    want = None if gx is None else apply(f, gx)
    assert apply(compose(f, g), x) == want


@given(ints, ints, ints, ints)
def test_three_case_product_matches_composition(a, b, c, d):
    assert tuple(mul_ext_bicyclic((a, b), (c, d))) == mul_by_shifts((a, b), (c, d))


def test_examples():
    assert mul_by_shifts((2, 3), (1, 4)) == (2, 6)
    assert mul_by_shifts((1, 4), (2, 3)) == (1, 5)

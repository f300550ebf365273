import numpy as np

from bruckreilly.extensions import BicyclicPair, BruckReilly, ExtendedBicyclic, ZBruck
from bruckreilly.exhaustive import (
    check_associativity,
    check_branch_agreement,
    check_f_identity,
    check_grading_fuzz,
    check_oracle_equivalence,
    check_scalar_matches_vector,
    check_warne_matches_zbruck,
    check_zbruck_agreement,
)
from bruckreilly.monoid import INT_GROUP, cyclic, identity_hom, semilattice2


class SwappedTies(ExtendedBicyclic):
    """Breaks the ``b > c`` branch: the result keeps ``d`` instead of shifting it."""

    def mul(self, x, y):
        (a, b), (c, d) = x, y
        if b < c:
            return BicyclicPair(a - b + c, d)
        return BicyclicPair(a, d)

    def mul_arrays(self, X, Y):
        a, b = X
        c, d = Y
        return np.where(b < c, a - b + c, a), d


def test_ext_bicyclic_window_counts():
    res = check_associativity(ExtendedBicyclic(), -4, 4)
    assert res.passed
    assert res.counts["triples"] == 531441
    assert res.counts["grading_violations"] == 0


def test_broken_product_is_caught():
    res = check_associativity(SwappedTies(), -1, 1)
    assert not res.passed
    x, y, z = res.counterexample
    sg = SwappedTies()
    assert sg.mul(sg.mul(x, y), z) != sg.mul(x, sg.mul(y, z))
    assert res.counts["grading_violations"] > 0


def test_vector_scalar_and_oracle():
    assert check_scalar_matches_vector(ExtendedBicyclic(), -2, 2).passed
    assert check_scalar_matches_vector(ZBruck(INT_GROUP), -1, 1, 2).passed
    assert check_oracle_equivalence(-4, 4).passed


def test_zbruck_agreement():
    assert check_zbruck_agreement(semilattice2(), -2, 2).passed
    assert check_zbruck_agreement(INT_GROUP, -1, 1, 2).passed
    assert check_warne_matches_zbruck(-1, 1, 2).passed


def test_warne_checks(warne_c6):
    assert check_f_identity(warne_c6).passed
    assert check_branch_agreement(warne_c6, -2, 2).passed
    res = check_grading_fuzz(warne_c6, n=5000, seed=1)
    assert res.passed and res.counts["products"] == 5000


def test_grading_fuzz_other_constructions():
    C2 = cyclic(2)
    assert check_grading_fuzz(BruckReilly(C2, identity_hom(C2)), n=2000).passed
    assert check_grading_fuzz(ZBruck(INT_GROUP), n=2000).passed
    assert check_grading_fuzz(ExtendedBicyclic(), n=2000).passed



from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bruckreilly.errors import UsageError
from bruckreilly.extensions import (
    BruckReilly,
    ExtendedBicyclic,
    ExtElement,
    WarneSystem,
    ZBruck,
    bicyclic_right_solutions,
    cayley_window,
    f_coeff,
    invert_zbr,
    layer,
    mul_ext_bicyclic,
    mul_warne,
    mul_zbr,
    mul_zbruck,
)
from bruckreilly.monoid import (
    INT_GROUP,
    IntGroupEndo,
    annihilating,
    cyclic,
    identity_hom,
    leftzero2_plus1,
    semilattice2,
    trivial,
)

ints = st.integers(-30, 30)


def test_ext_bicyclic_examples():
    assert mul_ext_bicyclic((0, 0), (0, 0)) == (0, 0)
    assert mul_ext_bicyclic((2, 3), (1, 4)) == (2, 6)
    assert mul_ext_bicyclic((1, 4), (2, 3)) == (1, 5)


@given(ints, ints, ints, ints, ints, ints)
def test_ext_bicyclic_associative(a, b, c, d, e, f):
    x, y, z = (a, b), (c, d), (e, f)
    assert mul_ext_bicyclic(mul_ext_bicyclic(x, y), z) == mul_ext_bicyclic(x, mul_ext_bicyclic(y, z))


def test_right_solutions_match_brute_force():
    lo, hi = -4, 4
    r = range(lo, hi + 1)
    for z in product(r, r):
        for t in product(r, r):
            brute = sorted((m, n) for m in r for n in r if mul_ext_bicyclic(z, (m, n)) == t)
            assert sorted(bicyclic_right_solutions(z, t, lo, hi)) == brute


def test_zbr_examples():
    S = semilattice2()
    assert mul_zbr(S, annihilating(S), (3, 0, 3), (3, 0, 3)) == (3, 0, 3)
    assert mul_zbr(S, annihilating(S), (0, 1, 0), (2, 1, 5)) == (2, 1, 5)
    C2 = cyclic(2)
    assert mul_zbr(C2, identity_hom(C2), (0, 1, 3), (1, 1, 0)) == (0, 0, 2)


def test_zbruck_examples_over_integers():
    assert mul_zbruck(INT_GROUP, (4, 9, 1), (3, -2, 7)) == (6, -2, 7)
    assert mul_zbruck(INT_GROUP, (0, 2, 1), (1, 3, 0)) == (0, 5, 0)
    assert mul_zbruck(INT_GROUP, (0, 2, 3), (1, 7, 0)) == (0, 2, 2)


def test_zbruck_equals_annihilating_zbr():
    for S in (semilattice2(), leftzero2_plus1(), cyclic(3)):
        lit, gen = ZBruck(S), BruckReilly(S, annihilating(S))
        els = lit.elements(-2, 2)
        for x, y in product(els, els):
            assert lit.mul(x, y) == gen.mul(x, y)


def test_invalid_theta_rejected():
    S = semilattice2()
    from bruckreilly.monoid import UnitHom
    with pytest.raises(UsageError):
        BruckReilly(S, UnitHom(S, [0, 1]))
    with pytest.raises(UsageError):
        BruckReilly(S, IntGroupEndo())


def test_f_coeff():
    W = WarneSystem(INT_GROUP, IntGroupEndo("annihilating"), {-1: 5})
    assert f_coeff(W, 2, -3) == 5
    assert all(f_coeff(W, 0, n) == 0 for n in range(-5, 6))
    trivial_u = WarneSystem(cyclic(6), identity_hom(cyclic(6)))
    assert all(f_coeff(trivial_u, m, n) == 0 for m in range(5) for n in range(-5, 6))
    with pytest.raises(UsageError):
        f_coeff(W, -1, 0)


def test_f_coeff_expands_term_by_term(warne_c6):
    W = warne_c6
    th = W.endo
    for m, n in product(range(6), range(-6, 3)):
        acc = 0
        for t in range(1, m + 1):
            acc = (acc + th.power(m - t, W.u_at(n + t))) % 6
        assert W.f(m, n) == acc


def test_warne_examples():
    C6 = cyclic(6)
    from bruckreilly.monoid import UnitHom
    doubling = UnitHom(C6, [(2 * x) % 6 for x in range(6)])
    W = WarneSystem(C6, doubling)
    assert mul_warne(W, (0, 1, 2), (0, 3, 0)) == (0, 1, 2)
    assert mul_warne(W, (1, 2, 4), (4, 5, 0)) == (1, 1, 0)


def test_warne_over_integers_matches_zbruck():
    W = WarneSystem(INT_GROUP, IntGroupEndo("annihilating"), {})
    Z = ZBruck(INT_GROUP)
    els = W.elements(-2, 2, 2)
    for x, y in product(els, els):
        assert tuple(W.mul(x, y)) == tuple(Z.mul(x, y))


def test_warne_rejects_bad_input():
    with pytest.raises(UsageError):
        WarneSystem(semilattice2(), annihilating(semilattice2()))
    with pytest.raises(UsageError):
        WarneSystem(cyclic(6), identity_hom(cyclic(6)), {1: 2})
    with pytest.raises(UsageError):
        WarneSystem(cyclic(6), identity_hom(cyclic(6)), {-1: 9})


def test_warne_branches_agree(warne_c6):
    W = warne_c6
    for x, y in product(W.elements(-2, 2), W.elements(-2, 2)):
        if x[2] == y[0]:
            ge, le = W.branches(x, y)
            assert ge == le == (x[0], (x[1] + y[1]) % 6, y[2])
    with pytest.raises(UsageError):
        W.branches((0, 0, 1), (0, 0, 0))


def test_invert_zbr():
    C2 = cyclic(2)
    assert invert_zbr(C2, (0, 1, 3)) == (3, 1, 0)
    assert invert_zbr(semilattice2(), (2, 0, 2)) == (2, 0, 2)
    assert invert_zbr(INT_GROUP, (1, 4, -2)) == (-2, -4, 1)
    with pytest.raises(UsageError):
        invert_zbr(leftzero2_plus1(), (0, 1, 0))


@pytest.mark.parametrize("S", [semilattice2(), cyclic(2), cyclic(3)], ids=lambda S: S.name)
def test_inverse_is_unique_on_window(S):
    sg = BruckReilly(S, identity_hom(S) if S.is_group else annihilating(S))
    els = sg.elements(-2, 2)
    for x in els:
        y = sg.inverse(x)
        assert sg.mul(sg.mul(x, y), x) == x and sg.mul(sg.mul(y, x), y) == y
        others = [z for z in els if sg.mul(sg.mul(x, z), x) == x and sg.mul(sg.mul(z, x), z) == z]
        assert others == [y]


def test_layer():
    assert layer(0, 0, {0}) == {ExtElement(0, 0, 0)}
    assert layer(1, 2, set()) == set()
    assert layer(-1, -1, semilattice2().idempotents()) == {(-1, 0, -1), (-1, 1, -1)}


def test_grading_on_random_products(warne_c6):
    rng = np.random.default_rng(3)
    sgs = [ExtendedBicyclic(), BruckReilly(cyclic(2), identity_hom(cyclic(2))), ZBruck(INT_GROUP), warne_c6]
    for sg in sgs:
        els = sg.elements(-5, 5, 3)
        for _ in range(2000):
            x = els[rng.integers(len(els))]
            y = els[rng.integers(len(els))]
            z = sg.mul(x, y)
            assert z[0] - z[-1] == x[0] - x[-1] + y[0] - y[-1]


def test_cayley_lines():
    lines = cayley_window(ExtendedBicyclic(), 0, 1)
    assert len(lines) == 16
    assert lines[0] == "0 0 0 0 -> 0 0"
    lines = cayley_window(ZBruck(semilattice2()), 0, 0)
    assert lines == ["0 0 0 0 0 0 -> 0 0 0", "0 0 0 0 1 0 -> 0 1 0",
                     "0 1 0 0 0 0 -> 0 1 0", "0 1 0 0 1 0 -> 0 1 0"]
    assert cayley_window(ZBruck(trivial()), 0, 1) == cayley_window(ZBruck(trivial()), 0, 1)
    with pytest.raises(UsageError):
        cayley_window(ExtendedBicyclic(), -20, 20)

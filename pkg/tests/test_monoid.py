from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bruckreilly.errors import MonoidError, UsageError
from bruckreilly.monoid import (
    INT_GROUP,
    N_MAX,
    N_PLUS,
    FiniteMonoid,
    IntGroupEndo,
    UnitHom,
    adjoin_unit,
    annihilating,
    chain3,
    check_homomorphism,
    cyclic,
    homomorphism_violation,
    identity_hom,
    leftzero2_plus1,
    nil3,
    semilattice2,
    theta_power,
    trivial,
    validate_hom,
)

BUILTINS = [trivial(), semilattice2(), chain3(), cyclic(2), cyclic(6), leftzero2_plus1(), nil3()]


def test_unit_times_x():
    for m in BUILTINS:
        for x in range(m.size):
            assert m.mul(m.unit, x) == x == m.mul(x, m.unit)


def test_small_products():
    assert semilattice2().mul(1, 1) == 1
    assert leftzero2_plus1().mul(1, 2) == 1
    assert nil3().mul(1, 1) == 2


@pytest.mark.parametrize("m", BUILTINS, ids=lambda m: m.name)
def test_associative_exhaustively(m):
    for x, y, z in product(range(m.size), repeat=3):
        assert m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z))


def test_rejects_bad_tables():
    with pytest.raises(MonoidError):
        FiniteMonoid([[0, 1], [1, 2]])
    with pytest.raises(MonoidError):
        FiniteMonoid([[0, 1, 2], [1, 1, 1], [2, 2, 1]])
    with pytest.raises(MonoidError):
        FiniteMonoid([[1, 1], [1, 1]])
    with pytest.raises(MonoidError):
        FiniteMonoid([[0, 1], [1, 1]], unit=1)
    # a non-associative table with identity 0: 1*(1*2) != (1*1)*2
    with pytest.raises(MonoidError):
        FiniteMonoid([[0, 1, 2], [1, 2, 0], [2, 2, 2]])


def test_group_of_units():
    assert semilattice2().units() == {0}
    assert cyclic(2).units() == {0, 1}
    assert leftzero2_plus1().units() == {0}


@pytest.mark.parametrize("m", BUILTINS, ids=lambda m: m.name)
def test_units_form_a_group(m):
    U = m.units()
    assert m.unit in U
    for a in U:
        assert m.mul(a, m.unit_inverse(a)) == m.unit
        for b in U:
            assert m.mul(a, b) in U


def test_check_homomorphism():
    S = semilattice2()
    assert check_homomorphism(annihilating(S))
    assert check_homomorphism(identity_hom(cyclic(2)))
    bad = UnitHom(S, [0, 1])
    assert not check_homomorphism(bad)
    assert homomorphism_violation(bad) == ("range", 1)
    assert homomorphism_violation(UnitHom(cyclic(2), [1, 0]))[0] == "unit"
    C3 = cyclic(3)
    assert homomorphism_violation(UnitHom(C3, [0, 1, 1]))[0] == "multiplicative"


def test_theta_power():
    S = semilattice2()
    assert theta_power(annihilating(S), 0, 1) == 1
    assert theta_power(annihilating(S), 3, 1) == 0
    assert theta_power(identity_hom(cyclic(2)), 5, 1) == 1
    with pytest.raises(UsageError):
        theta_power(annihilating(S), -1, 0)


def test_theta_power_composes_past_cache():
    C6 = cyclic(6)
    h = UnitHom(C6, [(5 * x) % 6 for x in range(6)])
    for m, n, s in product([0, 1, 7, 40, 64], [0, 3, 30, 70], range(6)):
        assert h.power(m + n, s) == h.power(m, h.power(n, s))
    assert h.power(131, 1) == 5


def test_idempotents_and_order():
    S = semilattice2()
    assert S.idempotents() == {0, 1}
    assert S.natural_leq(1, 0)
    assert cyclic(2).idempotents() == {0}
    C = chain3()
    assert C.natural_leq(2, 1) and C.natural_leq(1, 0)
    assert not C.natural_leq(1, 2)
    with pytest.raises(UsageError):
        nil3().natural_leq(1, 0)


@pytest.mark.parametrize("m", BUILTINS, ids=lambda m: m.name)
def test_natural_order_is_partial_order(m):
    E = sorted(m.idempotents())
    for e in E:
        assert m.natural_leq(e, e)
    for e, f in product(E, E):
        if m.natural_leq(e, f) and m.natural_leq(f, e):
            assert e == f
    for e, f, g in product(E, E, E):
        if m.natural_leq(e, f) and m.natural_leq(f, g):
            assert m.natural_leq(e, g)


def test_classify():
    c = semilattice2().classify()
    assert c.is_regular and c.is_inverse and c.is_clifford
    assert c.inverse_map == (0, 1)
    c = leftzero2_plus1().classify()
    assert c.is_regular and not c.is_inverse and c.inverse_map is None
    c = cyclic(2).classify()
    assert c.is_regular and c.is_inverse and c.is_clifford
    assert not nil3().classify().is_regular


@pytest.mark.parametrize("m", [m for m in BUILTINS if m.is_inverse], ids=lambda m: m.name)
def test_inverse_map_is_antiautomorphic_involution(m):
    inv = m.classify().inverse_map
    for x in range(m.size):
        assert inv[inv[x]] == x
    for x, y in product(range(m.size), repeat=2):
        assert inv[m.mul(x, y)] == m.mul(inv[y], inv[x])


@pytest.mark.parametrize("m", BUILTINS, ids=lambda m: m.name)
def test_text_round_trip(m):
    text = m.to_text()
    back = FiniteMonoid.from_text(text)
    assert back == m
    assert back.to_text() == text


def test_text_rejects_garbage():
    with pytest.raises(MonoidError):
        FiniteMonoid.from_text("2 0\n0 1\n")
    with pytest.raises(MonoidError):
        FiniteMonoid.from_text("x")


def test_adjoin_unit():
    m = adjoin_unit([[0, 0], [1, 1]])
    assert m.size == 3 and m.unit == 2
    assert m.classify().is_regular and not m.is_inverse


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30), st.integers(0, 5))
def test_int_group_endo_is_endomorphism(a, b, n):
    for th in (IntGroupEndo("annihilating"), IntGroupEndo("scale", -3), IntGroupEndo("scale", 2)):
        assert th.power(n, a + b) == th.power(n, a) + th.power(n, b)


def test_integer_carriers():
    assert N_MAX.mul(3, 5) == 5 and N_PLUS.mul(3, 5) == 8 and INT_GROUP.mul(-3, 5) == 2
    assert N_MAX.is_inverse and not N_PLUS.is_inverse and INT_GROUP.is_group
    with pytest.raises(UsageError):
        N_PLUS.mul(-1, 0)
    with pytest.raises(UsageError):
        validate_hom(N_PLUS, IntGroupEndo("scale", 1))
    validate_hom(INT_GROUP, IntGroupEndo("scale", 7))


def test_power_arrays_match_scalar():
    C6 = cyclic(6)
    h = UnitHom(C6, [(5 * x) % 6 for x in range(6)])
    k = np.array([0, 1, 2, 3, 70])
    s = np.array([1, 2, 3, 4, 5])
    assert list(h.power_arrays(k, s)) == [h.power(int(a), int(b)) for a, b in zip(k, s)]

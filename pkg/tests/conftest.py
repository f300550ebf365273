import pytest

from bruckreilly.monoid import cyclic, UnitHom
from bruckreilly.extensions import WarneSystem


@pytest.fixture
def warne_c6():
    C6 = cyclic(6)
    doubling = UnitHom(C6, [(2 * x) % 6 for x in range(6)], name="doubling")
    return WarneSystem(C6, doubling, {-1: 1, -2: 3})

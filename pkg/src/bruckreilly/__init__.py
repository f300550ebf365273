"""Bruck-Reilly type extensions over the integers: algebra, structure and topology checks."""
from .errors import MonoidError, UndecidableForm, UsageError
from .intset import IntSet
from .monoid import (
    INT_GROUP,
    N_MAX,
    N_PLUS,
    FiniteMonoid,
    IntegerMonoid,
    IntGroupEndo,
    UnitHom,
    adjoin_unit,
    annihilating,
    chain3,
    check_homomorphism,
    cyclic,
    identity_hom,
    leftzero2_plus1,
    nil3,
    semilattice2,
    theta_power,
    trivial,
)
from .extensions import (
    BicyclicPair,
    BruckReilly,
    ExtElement,
    ExtendedBicyclic,
    WarneElement,
    WarneSystem,
    ZBruck,
    cayley_window,
    f_coeff,
    invert_zbr,
    layer,
    mul_ext_bicyclic,
    mul_warne,
    mul_zbr,
    mul_zbruck,
)
from .report import CheckResult

__version__ = "0.1.0"

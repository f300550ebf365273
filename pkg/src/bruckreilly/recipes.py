"""Build carriers, homomorphisms and constructions from plain names and values."""
from __future__ import annotations

import re

from .errors import UsageError
from .extensions import BruckReilly, ExtendedBicyclic, WarneSystem, ZBruck
from .monoid import (
    INT_GROUP,
    N_MAX,
    N_PLUS,
    FiniteMonoid,
    IntGroupEndo,
    UnitHom,
    annihilating,
    chain3,
    cyclic,
    identity_hom,
    leftzero2_plus1,
    nil3,
    semilattice2,
    trivial,
)

CONSTRUCTIONS = ("ext-bicyclic", "zbr", "zbruck", "warne")

_NAMED = {
    "trivial": trivial,
    "semilattice2": semilattice2,
    "chain3": chain3,
    "leftzero2+1": leftzero2_plus1,
    "nil3": nil3,
    "int-group": lambda: INT_GROUP,
    "nplus": lambda: N_PLUS,
    "nmax": lambda: N_MAX,
}


def build_carrier(spec):
    """A named builtin (``c6`` for cyclic groups), or ``{"table": ..., "unit": ...}``."""
    if isinstance(spec, dict):
        if "table" not in spec:
            raise UsageError("inline carrier needs a 'table' field")
        return FiniteMonoid(spec["table"], spec.get("unit"), name=spec.get("name", "inline"))
    if not isinstance(spec, str):
        raise UsageError(f"carrier must be a name or a table, not {spec!r}")
    if spec in _NAMED:
        return _NAMED[spec]()
    m = re.fullmatch(r"c(\d+)", spec)
    if m and int(m.group(1)) >= 1:
        return cyclic(int(m.group(1)))
    raise UsageError(f"unknown carrier {spec!r}")


def build_theta(carrier, spec):
    """``annihilating``, ``identity``, ``scale(c)`` or ``{"table": [...]}``."""
    spec = "annihilating" if spec is None else spec
    if isinstance(carrier, FiniteMonoid):
        if isinstance(spec, dict):
            return UnitHom(carrier, spec.get("table", ()), name="table")
        if spec == "annihilating":
            return annihilating(carrier)
        if spec == "identity":
            return identity_hom(carrier)
        m = re.fullmatch(r"scale\((-?\d+)\)", str(spec))
        if m and carrier.name.startswith("c") and carrier.name[1:].isdigit():
            c, n = int(m.group(1)), carrier.size
            return UnitHom(carrier, [(c * x) % n for x in range(n)], name=f"scale({c})")
        raise UsageError(f"theta {spec!r} is not available on {carrier.name}")
    if spec == "annihilating":
        return IntGroupEndo("annihilating")
    if spec == "identity":
        return IntGroupEndo("scale", 1)
    m = re.fullmatch(r"scale\((-?\d+)\)", str(spec))
    if m:
        return IntGroupEndo("scale", int(m.group(1)))
    raise UsageError(f"theta {spec!r} is not available on {carrier.name}")


def parse_u(spec):
    """``{n: g}``, a list of ``"n:g"`` strings, or one comma-separated string."""
    if spec is None:
        return {}
    if isinstance(spec, dict):
        items = spec.items()
    else:
        parts = spec.split(",") if isinstance(spec, str) else spec
        items = []
        for p in parts:
            p = str(p).strip()
            if not p:
                continue
            if ":" not in p:
                raise UsageError(f"u entry {p!r} must look like n:g")
            k, v = p.split(":", 1)
            items.append((k, v))
    try:
        return {int(k): int(v) for k, v in items}
    except ValueError as exc:
        raise UsageError(f"u entries must be integers: {exc}") from None


def build_semigroup(construction, carrier=None, theta=None, u=None):
    if construction not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {construction!r}; choose from {', '.join(CONSTRUCTIONS)}")
    if construction == "ext-bicyclic":
        return ExtendedBicyclic()
    if carrier is None:
        raise UsageError(f"{construction} needs a carrier")
    S = build_carrier(carrier)
    if construction == "zbruck":
        if theta not in (None, "annihilating"):
            raise UsageError("zbruck fixes theta to the annihilating homomorphism")
        return ZBruck(S)
    th = build_theta(S, theta)
    if construction == "zbr":
        return BruckReilly(S, th)
    return WarneSystem(S, th, parse_u(u))

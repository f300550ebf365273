"""The four constructions: extended bicyclic, Z-Bruck-Reilly, Z-Bruck, Warne.

Every construction object offers the same surface:

``mul(x, y)``
    scalar product of two elements (named tuples);
``mul_arrays(X, Y)``
    the same product vectorised over numpy coordinate arrays;
``indices(x)``
    the outer pair ``(i, j)``; ``x -> indices(x)`` is a homomorphism onto the
    extended bicyclic semigroup for all four constructions;
``elements(lo, hi, gbound)``
    the window of elements with both indices in ``[lo, hi]``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import UsageError
from .intset import IntSet
from .monoid import (
    FiniteMonoid,
    IntegerMonoid,
    IntGroupEndo,
    annihilating,
    validate_hom,
)


class BicyclicPair(NamedTuple):
    a: int
    b: int


class ExtElement(NamedTuple):
    i: int
    s: int
    j: int


class WarneElement(NamedTuple):
    a: int
    g: int
    b: int


def element_key(x):
    """Sort key used to pick the smallest counterexample."""
    if len(x) == 2:
        return (abs(x[0]) + abs(x[1]), x[0], x[1])
    return (abs(x[0]) + abs(x[2]), x[0], x[2], x[1])


def mul_ext_bicyclic(x, y):
    a, b = x
    c, d = y
    if b < c:
        return BicyclicPair(a - b + c, d)
    if b == c:
        return BicyclicPair(a, d)
    return BicyclicPair(a, d - c + b)


def bicyclic_right_solutions(z, target, lo, hi):
    """All ``(m, n)`` with ``z * (m, n) == target`` and ``lo <= m, n <= hi``."""
    zi, zj = z
    ti, tj = target
    out = []
    if zi == ti:
        for m in range(lo, min(zj, hi) + 1):
            n = tj - zj + m
            if lo <= n <= hi:
                out.append((m, n))
    elif zi < ti:
        m = ti - zi + zj
        if lo <= m <= hi and lo <= tj <= hi:
            out.append((m, tj))
    return out


class ExtendedBicyclic:
    """``Z x Z`` with the three-case product."""

    name = "ext-bicyclic"
    carrier = None
    is_inverse = True
    is_regular = True

    def __repr__(self):
        return "ExtendedBicyclic()"

    def mul(self, x, y):
        return mul_ext_bicyclic(x, y)

    def mul_arrays(self, X, Y):
        a, b = X
        c, d = Y
        return np.where(b < c, a - b + c, a), np.where(b > c, d - c + b, d)

    def indices(self, x):
        return (x[0], x[1])

    def elements(self, lo, hi, gbound=None):
        return [BicyclicPair(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]

    def element_arrays(self, lo, hi, gbound=None):
        r = np.arange(lo, hi + 1)
        a, b = np.meshgrid(r, r, indexing="ij")
        return a.ravel(), b.ravel()

    def from_arrays(self, X, k):
        return BicyclicPair(int(X[0][k]), int(X[1][k]))

    def inverse(self, x):
        return BicyclicPair(x[1], x[0])

    def idempotent_closed_form(self, lo, hi, gbound=None):
        return {BicyclicPair(n, n) for n in range(lo, hi + 1)}

    def diagonal_unit(self, n):
        return BicyclicPair(n, n)

    def cayley_line(self, x, y):
        z = self.mul(x, y)
        return f"{x[0]} {x[1]} {y[0]} {y[1]} -> {z[0]} {z[1]}"


class BruckReilly:
    """``B(S, Z, theta)``: triples ``(i, s, j)`` with ``s`` in the carrier."""

    def __init__(self, carrier, theta, name=None):
        validate_hom(carrier, theta)
        self.carrier = carrier
        self.theta = theta
        self.name = name or f"zbr({carrier.name},{theta.name})"

    def __repr__(self):
        return f"BruckReilly({self.carrier!r}, {self.theta!r})"

    @property
    def is_inverse(self):
        return self.carrier.is_inverse

    @property
    def is_regular(self):
        if isinstance(self.carrier, FiniteMonoid):
            return self.carrier.classify().is_regular
        return self.carrier.is_inverse

    def mul(self, x, y):
        i, s, j = x
        m, t, n = y
        S, th = self.carrier, self.theta
        if j < m:
            return ExtElement(i - j + m, S.mul(th.power(m - j, s), t), n)
        if j == m:
            return ExtElement(i, S.mul(s, t), n)
        return ExtElement(i, S.mul(s, th.power(j - m, t)), n - m + j)

    def mul_arrays(self, X, Y):
        i, s, j = X
        m, t, n = Y
        left = self.theta.power_arrays(np.maximum(m - j, 0), s)
        right = self.theta.power_arrays(np.maximum(j - m, 0), t)
        d = self.carrier.mul_arrays(left, right)
        return np.where(j < m, i - j + m, i), d, np.where(j > m, n - m + j, n)

    def indices(self, x):
        return (x[0], x[2])

    def _values(self, gbound):
        return list(self.carrier.elements(gbound))

    def elements(self, lo, hi, gbound=None):
        vals = self._values(gbound)
        r = range(lo, hi + 1)
        return [ExtElement(i, s, j) for i in r for s in vals for j in r]

    def element_arrays(self, lo, hi, gbound=None):
        els = self.elements(lo, hi, gbound)
        arr = np.array(els, dtype=np.int64).reshape(-1, 3)
        return arr[:, 0], arr[:, 1], arr[:, 2]

    def from_arrays(self, X, k):
        return ExtElement(int(X[0][k]), int(X[1][k]), int(X[2][k]))

    def inverse(self, x):
        return invert_zbr(self.carrier, x)

    def idempotent_closed_form(self, lo, hi, gbound=None):
        S = self.carrier
        if isinstance(S, FiniteMonoid):
            idem = S.idempotents()
        elif S.kind == "nmax":
            idem = S.elements(gbound)
        else:
            idem = [0]
        return {ExtElement(n, e, n) for n in range(lo, hi + 1) for e in idem}

    def diagonal_unit(self, n):
        return ExtElement(n, self.carrier.unit, n)

    def layer(self, m, n, A):
        return layer(m, n, A)

    def layer_product(self, i, A: IntSet, j, m, B: IntSet, n):
        """``(i, A, j) * (m, B, n)`` as a layer ``(k, C, l)``."""
        S, th = self.carrier, self.theta
        if j < m:
            return i - j + m, S.set_mul(th.power_set(m - j, A), B), n
        if j == m:
            return i, S.set_mul(A, B), n
        return i, S.set_mul(A, th.power_set(j - m, B)), n - m + j

    def cayley_line(self, x, y):
        z = self.mul(x, y)
        return f"{x[0]} {x[1]} {x[2]} {y[0]} {y[1]} {y[2]} -> {z[0]} {z[1]} {z[2]}"


class ZBruck(BruckReilly):
    """``B(S, Z)``: the Bruck-Reilly extension with ``theta^n = 1`` for ``n > 0``."""

    def __init__(self, carrier, name=None):
        if isinstance(carrier, FiniteMonoid):
            theta = annihilating(carrier)
        else:
            theta = IntGroupEndo("annihilating")
        super().__init__(carrier, theta, name=name or f"zbruck({carrier.name})")

    def __repr__(self):
        return f"ZBruck({self.carrier!r})"

    def mul(self, x, y):
        i, s, j = x
        m, t, n = y
        S = self.carrier
        if j < m:
            return ExtElement(i - j + m, t, n)
        if j == m:
            return ExtElement(i, S.mul(s, t), n)
        return ExtElement(i, s, n - m + j)


def mul_zbr(S, theta, x, y):
    return BruckReilly(S, theta).mul(x, y)


def mul_zbruck(S, x, y):
    return ZBruck(S).mul(x, y)


def invert_zbr(S, x):
    """The inverse ``(j, s^-1, i)`` of ``x = (i, s, j)`` over an inverse monoid."""
    if not S.is_inverse:
        raise UsageError(f"{S.name} is not an inverse monoid")
    i, s, j = x
    return ExtElement(j, S.inverse(s), i)


def layer(m, n, A):
    return {ExtElement(m, s, n) for s in A}


class WarneSystem:
    """Warne's ``B_W = Z x G x Z`` for a group ``G``, endomorphism and ``u``.

    ``u`` maps indices ``n <= 0`` to group elements; every index absent from
    it (and every ``n >= 1``) carries the identity.
    """

    def __init__(self, group, endo, u=None, name=None):
        if isinstance(group, FiniteMonoid):
            if not group.is_group:
                raise UsageError(f"{group.name} is not a group")
        elif not (isinstance(group, IntegerMonoid) and group.is_group):
            raise UsageError("Warne's construction needs a group carrier")
        validate_hom(group, endo)
        e = group.unit
        u = {int(k): v for k, v in (u or {}).items() if v != e}
        for k, v in u.items():
            if k >= 1:
                raise UsageError(f"u_{k} must be the identity for positive k")
            if not group.contains(v):
                raise UsageError(f"u_{k} = {v!r} is not a group element")
        self.group = group
        self.carrier = group
        self.endo = endo
        self.u = u
        self.name = name or f"warne({group.name},{endo.name})"
        self.f = lru_cache(maxsize=None)(self._f)

    def __repr__(self):
        return f"WarneSystem({self.group!r}, {self.endo!r}, u={self.u})"

    is_inverse = True
    is_regular = True

    def _ginv(self, g):
        return self.group.unit_inverse(g)

    def u_at(self, n):
        return self.u.get(n, self.group.unit)

    def _f(self, m, n):
        if m < 0:
            raise UsageError("f_{m,n} needs m >= 0")
        G, th = self.group, self.endo
        acc = G.unit
        # factors theta^{m-t}(u_{n+t}) for t = 1..m; only the support contributes
        for t in range(1, m + 1):
            idx = n + t
            if idx in self.u:
                acc = G.mul(acc, th.power(m - t, self.u[idx]))
        return acc

    def mul(self, x, y):
        a, g, b = x
        c, h, d = y
        if b >= c:
            return self._branch_ge(a, g, b, c, h, d)
        return self._branch_le(a, g, b, c, h, d)

    def _branch_ge(self, a, g, b, c, h, d):
        G, th, f = self.group, self.endo, self.f
        k = b - c
        z = G.mul(G.mul(G.mul(g, self._ginv(f(k, c))), th.power(k, h)), f(k, d))
        return WarneElement(a, z, d - c + b)

    def _branch_le(self, a, g, b, c, h, d):
        G, th, f = self.group, self.endo, self.f
        k = c - b
        z = G.mul(G.mul(G.mul(self._ginv(f(k, a)), th.power(k, g)), f(k, b)), h)
        return WarneElement(a - b + c, z, d)

    def branches(self, x, y):
        """Both branch values of the product; only defined when ``b == c``."""
        if x[2] != y[0]:
            raise UsageError("branch agreement is only meaningful for b == c")
        return self._branch_ge(*x, *y), self._branch_le(*x, *y)

    def _group_arrays(self):
        G = self.group
        if isinstance(G, FiniteMonoid):
            inv = np.array([G.unit_inverse(g) for g in range(G.size)])
            return G.mul_arrays, lambda g: inv[g]
        return (lambda a, b: a + b), (lambda g: -g)

    def _f_table(self, kmax, nlo, nhi):
        F = np.array([[self.f(k, n) for n in range(nlo, nhi + 1)]
                      for k in range(kmax + 1)], dtype=np.int64)
        return F

    def mul_arrays(self, X, Y):
        a, g, b = X
        c, h, d = Y
        gm, ginv = self._group_arrays()
        th = self.endo
        k = np.abs(b - c)
        coords = [a, b, c, d]
        nlo = int(min(v.min() for v in coords))
        nhi = int(max(v.max() for v in coords))
        F = self._f_table(int(k.max()), nlo, nhi)

        def f(kk, nn):
            return F[kk, nn - nlo]

        ge = gm(gm(gm(g, ginv(f(k, c))), th.power_arrays(k, h)), f(k, d))
        le = gm(gm(gm(ginv(f(k, a)), th.power_arrays(k, g)), f(k, b)), h)
        cond = b >= c
        return (np.where(cond, a, a - b + c), np.where(cond, ge, le),
                np.where(cond, d - c + b, d))

    def indices(self, x):
        return (x[0], x[2])

    def elements(self, lo, hi, gbound=None):
        vals = list(self.group.elements(gbound))
        r = range(lo, hi + 1)
        return [WarneElement(a, g, b) for a in r for g in vals for b in r]

    def element_arrays(self, lo, hi, gbound=None):
        arr = np.array(self.elements(lo, hi, gbound), dtype=np.int64).reshape(-1, 3)
        return arr[:, 0], arr[:, 1], arr[:, 2]

    def from_arrays(self, X, k):
        return WarneElement(int(X[0][k]), int(X[1][k]), int(X[2][k]))

    def idempotent_closed_form(self, lo, hi, gbound=None):
        return {WarneElement(n, self.group.unit, n) for n in range(lo, hi + 1)}

    def diagonal_unit(self, n):
        return WarneElement(n, self.group.unit, n)

    def cayley_line(self, x, y):
        z = self.mul(x, y)
        return f"{x[0]} {x[1]} {x[2]} {y[0]} {y[1]} {y[2]} -> {z[0]} {z[1]} {z[2]}"


def f_coeff(W: WarneSystem, m, n):
    return W.f(m, n)


def mul_warne(W: WarneSystem, x, y):
    return W.mul(x, y)


def cayley_window(sg, lo, hi, gbound=None, cap=10**6):
    """Lines ``x y -> xy`` for every ordered pair in the window, row-major."""
    els = sg.elements(lo, hi, gbound)
    if len(els) ** 2 > cap:
        raise UsageError(f"window has {len(els) ** 2} products, above the cap of {cap}")
    return [sg.cayley_line(x, y) for x in els for y in els]

"""Exhaustive and fuzzed checks of the product formulas on windows.

Associativity runs over every ordered triple of window elements using the
vectorised products; any violation is re-evaluated with the scalar product
before it is reported.  Every computed product is also checked for the
grading ``k - l == i - j + m - n``.
"""
from __future__ import annotations

import numpy as np

from .extensions import ExtendedBicyclic, WarneSystem, ZBruck, BruckReilly, element_key, mul_ext_bicyclic
from .monoid import annihilating, IntGroupEndo, FiniteMonoid
from .oracles import mul_by_shifts
from .report import FAIL, PASS, CheckResult

CHUNK = 1 << 21


def _first(X):
    return X[0]


def _last(X):
    return X[-1]


def _grading_bad(X, Y, Z):
    """Mask of products ``Z = X * Y`` violating the grading identity."""
    return (_first(Z) - _last(Z)) != (_first(X) - _last(X) + _first(Y) - _last(Y))


def _take(X, idx):
    return tuple(c[idx] for c in X)


def _eq(A, B):
    ok = np.ones(len(A[0]), dtype=bool)
    for a, b in zip(A, B):
        ok &= a == b
    return ok


def check_associativity(sg, lo, hi, gbound=None):
    """``(xy)z == x(yz)`` over all window triples, plus grading of every product."""
    E = sg.element_arrays(lo, hi, gbound)
    N = len(E[0])
    pair_l = np.repeat(np.arange(N), N)
    pair_r = np.tile(np.arange(N), N)
    Ya, Za = _take(E, pair_l), _take(E, pair_r)
    YZ = sg.mul_arrays(Ya, Za)
    grading_bad = int(_grading_bad(Ya, Za, YZ).sum())
    products = N * N
    violations = 0
    first = None
    rows = max(1, CHUNK // (N * N))
    for start in range(0, N, rows):
        xs = np.arange(start, min(N, start + rows))
        # x * y for the chunk, then (x * y) * z and x * (y * z)
        xi = np.repeat(xs, N)
        yi = np.tile(np.arange(N), len(xs))
        Xa = _take(E, xi)
        XY = sg.mul_arrays(Xa, _take(E, yi))
        grading_bad += int(_grading_bad(Xa, _take(E, yi), XY).sum())
        big_xy = _take(XY, np.repeat(np.arange(len(xi)), N))
        big_z = _take(E, np.tile(np.arange(N), len(xi)))
        left = sg.mul_arrays(big_xy, big_z)
        big_x = _take(E, np.repeat(xs, N * N))
        big_yz = _take(YZ, np.tile(np.arange(N * N), len(xs)))
        right = sg.mul_arrays(big_x, big_yz)
        grading_bad += int(_grading_bad(big_xy, big_z, left).sum())
        grading_bad += int(_grading_bad(big_x, big_yz, right).sum())
        products += len(xi) + 2 * len(left[0])
        bad = ~_eq(left, right)
        if bad.any():
            for k in np.flatnonzero(bad):
                t = (int(xs[0]) + k // (N * N), (k // N) % N, k % N)
                x, y, z = (sg.from_arrays(E, q) for q in t)
                if sg.mul(sg.mul(x, y), z) != sg.mul(x, sg.mul(y, z)):
                    violations += 1
                    cand = (x, y, z)
                    if first is None or tuple(map(element_key, cand)) < tuple(map(element_key, first)):
                        first = cand
    counts = {"elements": N, "triples": N ** 3, "violations": violations,
              "products": products, "grading_violations": grading_bad}
    if violations or grading_bad:
        return CheckResult(FAIL, counterexample=first, counts=counts)
    return CheckResult(PASS, counts=counts)


def check_scalar_matches_vector(sg, lo, hi, gbound=None):
    """The vectorised product agrees with the scalar one on every window pair."""
    E = sg.element_arrays(lo, hi, gbound)
    N = len(E[0])
    li, ri = np.repeat(np.arange(N), N), np.tile(np.arange(N), N)
    P = sg.mul_arrays(_take(E, li), _take(E, ri))
    els = [sg.from_arrays(E, k) for k in range(N)]
    for k in range(N * N):
        got = sg.from_arrays(P, k)
        want = sg.mul(els[li[k]], els[ri[k]])
        if got != want:
            return CheckResult(FAIL, counterexample=(els[li[k]], els[ri[k]]))
    return CheckResult(PASS, counts={"pairs": N * N})


def check_oracle_equivalence(lo, hi):
    """The three-case product equals composition of partial shifts."""
    r = range(lo, hi + 1)
    pairs = [(a, b) for a in r for b in r]
    mismatches = [(x, y) for x in pairs for y in pairs if tuple(mul_ext_bicyclic(x, y)) != mul_by_shifts(x, y)]
    counts = {"pairs": len(pairs) ** 2, "mismatches": len(mismatches)}
    if mismatches:
        return CheckResult(FAIL, counterexample=min(mismatches), counts=counts)
    return CheckResult(PASS, counts=counts)


def random_elements(sg, rng, n, idx_bound, gbound):
    i = rng.integers(-idx_bound, idx_bound + 1, n)
    j = rng.integers(-idx_bound, idx_bound + 1, n)
    if isinstance(sg, ExtendedBicyclic):
        return i, j
    G = sg.carrier
    if isinstance(G, FiniteMonoid):
        s = rng.integers(0, G.size, n)
    elif G.kind == "int-group":
        s = rng.integers(-gbound, gbound + 1, n)
    else:
        s = rng.integers(0, gbound + 1, n)
    return i, s, j


def check_grading_fuzz(sg, n=100_000, idx_bound=50, gbound=50, seed=0, spot=200):
    """Grading on ``n`` random products; a sample is recomputed with the scalar product."""
    rng = np.random.default_rng(seed)
    X = random_elements(sg, rng, n, idx_bound, gbound)
    Y = random_elements(sg, rng, n, idx_bound, gbound)
    Z = sg.mul_arrays(X, Y)
    bad = _grading_bad(X, Y, Z)
    for k in rng.choice(n, size=min(spot, n), replace=False):
        if sg.mul(sg.from_arrays(X, k), sg.from_arrays(Y, k)) != sg.from_arrays(Z, k):
            return CheckResult(FAIL, counterexample=(sg.from_arrays(X, k), sg.from_arrays(Y, k)),
                               detail="vector and scalar products disagree")
    counts = {"products": n, "violations": int(bad.sum()), "seed": seed}
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        return CheckResult(FAIL, counterexample=(sg.from_arrays(X, k), sg.from_arrays(Y, k)), counts=counts)
    return CheckResult(PASS, counts=counts)


def check_f_identity(W: WarneSystem, lo=-5, hi=5):
    e = W.group.unit
    bad = [n for n in range(lo, hi + 1) if W.f(0, n) != e]
    if bad:
        return CheckResult(FAIL, counterexample=bad[0])
    return CheckResult(PASS, counts={"indices": hi - lo + 1})


def check_branch_agreement(W: WarneSystem, lo, hi, gbound=None):
    """Both branches of the product agree whenever ``b == c``."""
    els = W.elements(lo, hi, gbound)
    checked, bad = 0, []
    for x in els:
        for y in els:
            if x[2] != y[0]:
                continue
            checked += 1
            ge, le = W.branches(x, y)
            if ge != le or ge != (x[0], W.group.mul(x[1], y[1]), y[2]):
                bad.append((x, y))
    counts = {"pairs": checked, "violations": len(bad)}
    if bad:
        return CheckResult(FAIL, counterexample=min(bad, key=lambda p: tuple(map(element_key, p))), counts=counts)
    return CheckResult(PASS, counts=counts)


def check_zbruck_agreement(carrier, lo, hi, gbound=None):
    """The literal three-case product equals the annihilating-theta formula."""
    lit = ZBruck(carrier)
    theta = annihilating(carrier) if isinstance(carrier, FiniteMonoid) else IntGroupEndo("annihilating")
    gen = BruckReilly(carrier, theta)
    els = lit.elements(lo, hi, gbound)
    bad = [(x, y) for x in els for y in els if lit.mul(x, y) != gen.mul(x, y)]
    counts = {"pairs": len(els) ** 2, "violations": len(bad)}
    if bad:
        return CheckResult(FAIL, counterexample=bad[0], counts=counts)
    return CheckResult(PASS, counts=counts)


def check_warne_matches_zbruck(lo, hi, gbound):
    """Over the integers with annihilating theta and trivial ``u`` the two agree."""
    from .monoid import INT_GROUP
    W = WarneSystem(INT_GROUP, IntGroupEndo("annihilating"), {})
    Z = ZBruck(INT_GROUP)
    els = W.elements(lo, hi, gbound)
    bad = [(x, y) for x in els for y in els if tuple(W.mul(x, y)) != tuple(Z.mul(x, y))]
    if bad:
        return CheckResult(FAIL, counterexample=bad[0])
    return CheckResult(PASS, counts={"pairs": len(els) ** 2})

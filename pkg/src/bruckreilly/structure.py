"""Window-level structure checks on the extensions.

Every check runs on a finite :class:`Window`.  Products may leave the window;
searches for multipliers draw from an enlarged window whose index bound is
``multiplier_bound``.  A positive answer (a witness) is always sound, while a
negative answer only holds relative to that bound, and reports say so.

Searches are pruned with the index map ``x -> (i, j)``, which is a
homomorphism onto the extended bicyclic semigroup for every construction:
any equation between elements forces the same equation between index pairs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import UsageError
from .extensions import BicyclicPair, bicyclic_right_solutions, element_key, mul_ext_bicyclic
from .monoid import FiniteMonoid
from .report import FAIL, PASS, CheckResult


@dataclass(frozen=True)
class Window:
    semigroup: object
    lo: int
    hi: int
    gbound: int | None = None

    @cached_property
    def elements(self):
        return self.semigroup.elements(self.lo, self.hi, self.gbound)

    @cached_property
    def element_set(self):
        return frozenset(self.elements)

    @property
    def radius(self):
        return max(abs(self.lo), abs(self.hi))

    def multipliers(self, bound):
        """Elements of the enlarged window with indices in ``[-bound, bound]``."""
        if bound < self.radius:
            raise UsageError(f"multiplier bound {bound} is below the window radius {self.radius}")
        g = None if self.gbound is None else 2 * self.gbound
        return Window(self.semigroup, -bound, bound, g)

    def default_bound(self):
        return self.radius + 2


def _by_index(window):
    sg = window.semigroup
    groups = {}
    for x in window.elements:
        groups.setdefault(sg.indices(x), []).append(x)
    return groups


def idempotents_ext(w: Window):
    """Idempotents of the window found by brute force ``x*x == x``."""
    mul = w.semigroup.mul
    return {x for x in w.elements if mul(x, x) == x}


def check_idempotents(w: Window):
    brute = idempotents_ext(w)
    closed = w.semigroup.idempotent_closed_form(w.lo, w.hi, w.gbound)
    if brute == closed:
        return CheckResult(PASS, witness=len(brute), counts={"elements": len(w.elements)})
    diff = sorted(brute ^ closed, key=element_key)
    return CheckResult(FAIL, counterexample=diff[0], counts={"mismatches": len(diff)})


def natural_order_ext(sg, x, y):
    """``x <= y`` in the natural order; both must be idempotent."""
    mul = sg.mul
    if mul(x, x) != x or mul(y, y) != y:
        raise UsageError("natural order is defined on idempotents only")
    return mul(x, y) == x and mul(y, x) == x


@dataclass
class GreenClasses:
    relation: str
    classes: list
    multiplier_bound: int
    approximate: bool = True
    witnesses: dict = field(default_factory=dict, repr=False)

    def class_of(self, x):
        for c in self.classes:
            if x in c:
                return c
        raise KeyError(x)


def _principal_ideals(w, bound):
    """Right and left principal ideals of window elements, cut to the window.

    Returns maps ``x -> {y: multiplier}`` with ``None`` standing for the
    adjoined identity.
    """
    sg = w.semigroup
    M = w.multipliers(bound).elements
    inside = w.element_set
    right, left = {}, {}
    for x in w.elements:
        r = {x: None}
        l = {x: None}
        for m in M:
            y = sg.mul(x, m)
            if y in inside and y not in r:
                r[y] = m
            y = sg.mul(m, x)
            if y in inside and y not in l:
                l[y] = m
        right[x], left[x] = r, l
    return right, left


def _partition(elements, related):
    parent = {x: x for x in elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in elements:
        for y in related(x):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx
    cells = {}
    for x in elements:
        cells.setdefault(find(x), []).append(x)
    out = [tuple(sorted(c, key=element_key)) for c in cells.values()]
    return sorted(out, key=lambda c: element_key(c[0]))


def greens(w: Window, rel: str, multiplier_bound=None):
    """Window approximation of Green's ``R``, ``L``, ``H`` or ``D``."""
    rel = rel.upper()
    if rel not in ("R", "L", "H", "D"):
        raise UsageError(f"unknown Green relation {rel!r}")
    bound = w.default_bound() if multiplier_bound is None else multiplier_bound
    right, left = _principal_ideals(w, bound)
    els = w.elements

    def r_rel(x):
        return [y for y in right[x] if x in right[y]]

    def l_rel(x):
        return [y for y in left[x] if x in left[y]]

    if rel == "R":
        related = r_rel
    elif rel == "L":
        related = l_rel
    elif rel == "H":
        def related(x):
            ls = set(l_rel(x))
            return [y for y in r_rel(x) if y in ls]
    else:
        rsets = {x: set(r_rel(x)) for x in els}
        lsets = {x: set(l_rel(x)) for x in els}

        def related(x):
            return {y for z in rsets[x] for y in lsets[z]}

    witnesses = {}
    if rel in ("R", "L"):
        table = right if rel == "R" else left
        for x in els:
            for y in related(x):
                witnesses[(x, y)] = (table[x][y], table[y][x])
    return GreenClasses(rel, _partition(els, related), bound, witnesses=witnesses)


def check_greens_consistency(w: Window, multiplier_bound=None):
    """H = R ∩ L cell-wise, R∘L = L∘R on the window, witnesses re-multiply."""
    bound = w.default_bound() if multiplier_bound is None else multiplier_bound
    sg = w.semigroup
    R = greens(w, "R", bound)
    L = greens(w, "L", bound)
    H = greens(w, "H", bound)
    rcls = {x: c for c in R.classes for x in c}
    lcls = {x: c for c in L.classes for x in c}
    for cell in H.classes:
        x = cell[0]
        expected = set(rcls[x]) & set(lcls[x])
        if set(cell) != expected:
            return CheckResult(FAIL, counterexample={"H-cell": cell}, detail="H != R ∩ L")
    for (x, y), (m, m2) in R.witnesses.items():
        if (m is not None and sg.mul(x, m) != y) or (m2 is not None and sg.mul(y, m2) != x):
            return CheckResult(FAIL, counterexample={"R-pair": (x, y)}, detail="bad R witness")
    for (x, y), (m, m2) in L.witnesses.items():
        if (m is not None and sg.mul(m, x) != y) or (m2 is not None and sg.mul(m2, y) != x):
            return CheckResult(FAIL, counterexample={"L-pair": (x, y)}, detail="bad L witness")
    els = w.elements
    rl = {(x, y) for x in els for z in rcls[x] for y in lcls[z]}
    lr = {(x, y) for x in els for z in lcls[x] for y in rcls[z]}
    if rl != lr:
        bad = min(rl ^ lr, key=lambda p: (element_key(p[0]), element_key(p[1])))
        return CheckResult(FAIL, counterexample={"pair": bad}, detail="R∘L != L∘R on window")
    counts = {"R": len(R.classes), "L": len(L.classes), "H": len(H.classes),
              "D": len(greens(w, "D", bound).classes)}
    return CheckResult(PASS, counts=counts, detail=f"multiplier bound {bound}")


def check_h_classes_are_layers(w: Window, multiplier_bound=None):
    """Every H-cell is a full layer ``{(i, g, j) : g}`` cut to the window."""
    H = greens(w, "H", multiplier_bound)
    sg = w.semigroup
    layers = _by_index(w)
    for cell in H.classes:
        idx = {sg.indices(x) for x in cell}
        if len(idx) != 1 or set(cell) != set(layers[idx.pop()]):
            return CheckResult(FAIL, counterexample=cell)
    return CheckResult(PASS, counts={"H-classes": len(H.classes)})


def _find_simple_witness(sg, a, b, mgroups, bound):
    """``(x, y)`` with ``x*a*y == b`` from the multiplier groups, or None."""
    ia = sg.indices(a)
    ib = sg.indices(b)
    order = sorted(mgroups, key=lambda pq: (pq[0] != ib[0], abs(pq[0] - ib[0]) + abs(pq[1] - ia[0]), pq))
    for pq in order:
        z_idx = mul_ext_bicyclic(pq, ia)
        sols = bicyclic_right_solutions(z_idx, ib, -bound, bound)
        if not sols:
            continue
        for x in mgroups[pq]:
            z = sg.mul(x, a)
            for mn in sols:
                for y in mgroups.get(mn, ()):
                    if sg.mul(z, y) == b:
                        return x, y
    return None


def check_simple(w: Window, sample_pairs=None, multiplier_bound=None, n_samples=200, seed=0):
    """Two-sided divisibility: for each sampled ``(a, b)`` find ``x a y = b``."""
    sg = w.semigroup
    bound = w.default_bound() if multiplier_bound is None else multiplier_bound
    mgroups = _by_index(w.multipliers(bound))
    if sample_pairs is None:
        rng = random.Random(seed)
        els = w.elements
        sample_pairs = [(rng.choice(els), rng.choice(els)) for _ in range(n_samples)]
    witnesses, failures = [], []
    for a, b in sample_pairs:
        found = _find_simple_witness(sg, a, b, mgroups, bound)
        if found is None:
            failures.append((a, b))
        else:
            witnesses.append(((a, b), found))
    counts = {"pairs": len(sample_pairs), "failures": len(failures), "bound": bound}
    if failures:
        ce = min(failures, key=lambda p: (element_key(p[0]), element_key(p[1])))
        return CheckResult(FAIL, counterexample=ce, counts=counts,
                           detail=f"no witness within multiplier bound {bound}")
    return CheckResult(PASS, witness=witnesses[0] if witnesses else None, counts=counts)


def _inner_index_pairs(ix, bound):
    """Index pairs ``p`` in the bound with ``ix * p * ix == ix`` in the bicyclic part."""
    ix = BicyclicPair(*ix)
    r = range(-bound, bound + 1)
    return [(p, q) for p, q in product(r, r)
            if mul_ext_bicyclic(mul_ext_bicyclic(ix, (p, q)), ix) == ix]


def inverse_counts(w: Window, multiplier_bound=None):
    """For each window element, its inverses found in the enlarged window."""
    sg = w.semigroup
    bound = w.default_bound() if multiplier_bound is None else multiplier_bound
    mgroups = _by_index(w.multipliers(bound))
    mul = sg.mul
    out = {}
    for x in w.elements:
        i, j = sg.indices(x)
        # the bicyclic image of an inverse of x must be the unique inverse (j, i)
        cands = mgroups.get((j, i), [])
        out[x] = [y for y in cands if mul(mul(x, y), x) == x and mul(mul(y, x), y) == y]
    return out


def _carrier_is_inverse(sg):
    S = sg.carrier
    return True if S is None else S.is_inverse


def _carrier_is_regular(sg):
    S = sg.carrier
    if S is None:
        return True
    if isinstance(S, FiniteMonoid):
        return S.classify().is_regular
    return S.is_inverse


def check_inverse_transfer(w: Window, multiplier_bound=None):
    """The extension is inverse exactly when its carrier is."""
    sg = w.semigroup
    counts = inverse_counts(w, multiplier_bound)
    hist = {}
    for ys in counts.values():
        hist[len(ys)] = hist.get(len(ys), 0) + 1
    tally = {f"with_{k}_inverses": v for k, v in sorted(hist.items())}
    expect_inverse = _carrier_is_inverse(sg)
    odd = sorted((x for x, ys in counts.items() if len(ys) != 1),
                 key=lambda x: (-min(len(counts[x]), 2), element_key(x)))
    if expect_inverse:
        if odd:
            return CheckResult(FAIL, counterexample={"element": odd[0], "inverses": counts[odd[0]]},
                               counts=tally, detail="carrier inverse but uniqueness fails")
        return CheckResult(PASS, counts=tally, detail="every window element has one inverse")
    if not odd:
        return CheckResult(FAIL, counts=tally,
                           detail="carrier not inverse yet every element has one inverse")
    x = odd[0]
    return CheckResult(PASS, witness={"element": x, "inverses": counts[x]}, counts=tally,
                       detail="carrier not inverse; element without a unique inverse exhibited")


def check_regular_transfer(w: Window, multiplier_bound=None):
    """The extension is regular exactly when its carrier is."""
    sg = w.semigroup
    bound = w.default_bound() if multiplier_bound is None else multiplier_bound
    mgroups = _by_index(w.multipliers(bound))
    mul = sg.mul
    irregular = []
    pair_cache = {}
    for x in w.elements:
        ix = sg.indices(x)
        if ix not in pair_cache:
            pair_cache[ix] = _inner_index_pairs(ix, bound)
        ok = any(mul(mul(x, y), x) == x for pq in pair_cache[ix] for y in mgroups.get(pq, ()))
        if not ok:
            irregular.append(x)
    counts = {"elements": len(w.elements), "irregular": len(irregular), "bound": bound}
    if _carrier_is_regular(sg):
        if irregular:
            return CheckResult(FAIL, counterexample=min(irregular, key=element_key), counts=counts)
        return CheckResult(PASS, counts=counts)
    if not irregular:
        return CheckResult(FAIL, counts=counts, detail="carrier not regular yet window regular")
    return CheckResult(PASS, witness=min(irregular, key=element_key), counts=counts,
                       detail="carrier not regular; element with no inner inverse exhibited")


def check_I_bisimple(w: Window, multiplier_bound=None):
    """Idempotents form a chain reversing the index order, and one D-class."""
    sg = w.semigroup
    idem = sorted(idempotents_ext(w), key=element_key)
    index = {e: sg.indices(e)[0] for e in idem}
    injective = len(set(index.values())) == len(idem)
    chain = all(natural_order_ext(sg, e, f) or natural_order_ext(sg, f, e)
                for e in idem for f in idem)
    anti = injective and all(
        natural_order_ext(sg, e, f) == (index[e] >= index[f]) for e in idem for f in idem)
    D = greens(w, "D", multiplier_bound)
    shape = {"idempotents": len(idem), "chain": chain, "index_injective": injective,
             "order_reverses_index": anti, "d_classes": len(D.classes)}
    if anti and len(D.classes) == 1:
        return CheckResult(PASS, witness=shape, counts={"idempotents": len(idem)})
    return CheckResult(FAIL, counterexample=shape, counts={"idempotents": len(idem)})


def is_ideal_of_semilattice(S: FiniteMonoid, I):
    E = S.idempotents()
    if not set(I) <= E:
        return False
    return all(S.mul(e, i) in I and S.mul(i, e) in I for e in E for i in I)


def ideal_pullback(S: FiniteMonoid, I):
    """Preimage of an ideal of ``E(S)`` under ``x -> x x^-1``; an ideal of ``S``."""
    c = S.classify()
    if not c.is_clifford:
        raise UsageError(f"{S.name} is not a Clifford monoid")
    I = frozenset(I)
    if not is_ideal_of_semilattice(S, I):
        raise UsageError(f"{sorted(I)} is not an ideal of E(S)")
    inv = c.inverse_map
    result = frozenset(x for x in range(S.size) if S.mul(x, inv[x]) in I)
    for x in result:
        for s in range(S.size):
            if S.mul(x, s) not in result or S.mul(s, x) not in result:
                raise AssertionError(f"pullback not absorbing at ({x}, {s})")
    return result


def check_ideal_pullback(S: FiniteMonoid):
    """Pull back every ideal of ``E(S)`` and confirm the result absorbs."""
    E = sorted(S.idempotents())
    checked = 0
    for r in range(1, len(E) + 1):
        for sub in _subsets(E, r):
            if is_ideal_of_semilattice(S, sub):
                ideal_pullback(S, sub)
                checked += 1
    return CheckResult(PASS, counts={"ideals": checked})


def _subsets(items, r):
    from itertools import combinations
    return (frozenset(c) for c in combinations(items, r))

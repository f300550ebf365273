"""Neighbourhood bases on the extensions and symbolic continuity checks.

Every carrier handled here is discrete, so a base element is a finite union
of layers ``(i, D, j) = {(i, s, j) : s in D}`` where ``D`` is a set of carrier
elements.  Descriptors ``D`` are written as :class:`SetDescriptor` terms and
normalised into :class:`IntSet` values, on which subset and disjointness are
exact.  Products and inverses of layers are computed layer by layer, so a
containment such as ``x * V <= W`` is decided without enumerating anything.

Base families are nested and shrink as their parameter grows, so searches
try parameters from the strongest (smallest neighbourhood) down.  A search
that fails only says no witness exists within the recorded schedule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple

from .errors import UndecidableForm, UsageError
from .extensions import BruckReilly, ExtElement, ZBruck, element_key
from .intset import IntSet
from .monoid import INT_GROUP, N_MAX, N_PLUS, FiniteMonoid
from .report import FAIL, INCONCLUSIVE, PASS, CheckResult


# ---------------------------------------------------------------- descriptors

class SetDescriptor:
    """A term describing a set of carrier elements."""


@dataclass(frozen=True)
class Explicit(SetDescriptor):
    elements: tuple

    def __init__(self, elements):
        object.__setattr__(self, "elements", tuple(sorted(set(elements))))


@dataclass(frozen=True)
class UpperTail(SetDescriptor):
    n: int


@dataclass(frozen=True)
class LowerTail(SetDescriptor):
    n: int


@dataclass(frozen=True)
class TwoSidedTail(SetDescriptor):
    """``{k : k <= -n or k >= n}``; ``n = 0`` gives everything."""
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise UsageError("two-sided tail bound must be non-negative")


@dataclass(frozen=True)
class Preimage(SetDescriptor):
    theta: object
    inner: SetDescriptor


@dataclass(frozen=True)
class Intersect(SetDescriptor):
    parts: tuple


@dataclass(frozen=True)
class Union(SetDescriptor):
    parts: tuple


@dataclass(frozen=True)
class Full(SetDescriptor):
    pass


@dataclass(frozen=True)
class Empty(SetDescriptor):
    pass


def normalize(desc, carrier) -> IntSet:
    """The set a descriptor denotes, cut down to the carrier's elements."""
    return _raw(desc, carrier) & carrier.domain


def _raw(desc, carrier):
    if isinstance(desc, IntSet):
        return desc
    if isinstance(desc, Explicit):
        return IntSet.points(desc.elements)
    if isinstance(desc, UpperTail):
        return IntSet.upper(desc.n)
    if isinstance(desc, LowerTail):
        return IntSet.lower(desc.n)
    if isinstance(desc, TwoSidedTail):
        if desc.n == 0:
            return IntSet.full()
        return IntSet.lower(-desc.n) | IntSet.upper(desc.n)
    if isinstance(desc, Preimage):
        return desc.theta.preimage(normalize(desc.inner, carrier))
    if isinstance(desc, Intersect):
        out = IntSet.full()
        for p in desc.parts:
            out = out & _raw(p, carrier)
        return out
    if isinstance(desc, Union):
        out = IntSet.empty()
        for p in desc.parts:
            out = out | _raw(p, carrier)
        return out
    if isinstance(desc, Full):
        return IntSet.full()
    if isinstance(desc, Empty):
        return IntSet.empty()
    raise UndecidableForm(f"{desc!r} is outside the descriptor algebra")


def subset(A, B, carrier):
    return normalize(A, carrier) <= normalize(B, carrier)


def disjoint(A, B, carrier):
    return normalize(A, carrier).isdisjoint(normalize(B, carrier))


def describe(D: IntSet):
    return repr(D)


# ---------------------------------------------------------- layered sets

class Layer(NamedTuple):
    i: int
    D: IntSet
    j: int


class LayerSet:
    """A finite union of layers with at most one entry per index pair."""

    __slots__ = ("layers",)

    def __init__(self, layers=()):
        acc = {}
        for i, D, j in layers:
            if not D.intervals:
                continue
            key = (i, j)
            acc[key] = acc[key] | D if key in acc else D
        self.layers = acc

    def __iter__(self):
        items = self.layers.items()
        if len(items) > 1:
            items = sorted(items)
        for (i, j), D in items:
            yield Layer(i, D, j)

    def __repr__(self):
        return "{" + ", ".join(f"({i}, {D!r}, {j})" for i, D, j in self) + "}"

    def __eq__(self, other):
        return isinstance(other, LayerSet) and self.layers == other.layers

    def __contains__(self, x):
        D = self.layers.get((x[0], x[2]))
        return D is not None and x[1] in D

    def issubset(self, other):
        return all(ij in other.layers and D <= other.layers[ij] for ij, D in self.layers.items())

    __le__ = issubset

    def isdisjoint(self, other):
        return all(ij not in other.layers or D.isdisjoint(other.layers[ij])
                   for ij, D in self.layers.items())

    def restrict(self, i, j):
        return self.layers.get((i, j), IntSet.empty())

    def is_singleton(self, x):
        return self == LayerSet([Layer(x[0], IntSet.point(x[1]), x[2])])

    def as_json(self):
        return [[i, repr(D), j] for i, D, j in self]


@dataclass(frozen=True)
class BaseNbhd:
    anchor: ExtElement
    layers: LayerSet = field(compare=False)
    param: object = None

    def __contains__(self, x):
        return x in self.layers

    def __iter__(self):
        return iter(self.layers)


def member(N, x):
    return x in N


def point_set(x):
    return LayerSet([Layer(x[0], IntSet.point(x[1]), x[2])])


def _sets(N):
    return N.layers if isinstance(N, BaseNbhd) else N


def product_image(sg, A, B):
    """``A * B`` for layered sets, exact."""
    out = []
    for i, Da, j in _sets(A):
        for m, Db, n in _sets(B):
            k, C, l = sg.layer_product(i, Da, j, m, Db, n)
            out.append(Layer(k, C, l))
    return LayerSet(out)


def translate_image(sg, side, fixed, N):
    """``fixed * N`` (side ``left``) or ``N * fixed`` (side ``right``)."""
    if side == "left":
        return product_image(sg, point_set(fixed), N)
    if side == "right":
        return product_image(sg, N, point_set(fixed))
    raise UsageError(f"side must be left or right, not {side!r}")


def inverse_image(sg, N):
    S = sg.carrier
    if not S.is_inverse:
        raise UsageError(f"{S.name} is not an inverse monoid")
    return LayerSet(Layer(j, S.set_inverse(D), i) for i, D, j in _sets(N))


# ------------------------------------------------------------- OIP families

@dataclass(frozen=True)
class OIPFamily:
    """Ideals ``I_alpha`` of the carrier, with witnesses ``x -> (alpha, U(x))``.

    ``ideal`` maps an index to a descriptor.  ``alphas`` is the finite part of
    the index set that checks iterate over.  ``witness`` may be None, in which
    case checks search the sampled indices with ``U(x) = {x}``.
    """
    name: str
    carrier: object
    ideal: object
    alphas: tuple
    witness: object = None


def tail_ideals(carrier, bound):
    """``I_n = {k >= n}`` over ``N_+`` or ``N_max``; ``x`` is kept off ``I_{x+1}``."""
    if carrier not in (N_PLUS, N_MAX):
        raise UsageError("tail ideals are defined over N_+ and N_max")
    return OIPFamily(f"upper-tails({carrier.name})", carrier, UpperTail,
                     tuple(range(1, bound + 1)), lambda x: (x + 1, Explicit([x])))


def finite_ideals(S: FiniteMonoid):
    """All nonempty two-sided ideals of a finite monoid, indexed by position."""
    found = []
    for r in range(1, S.size + 1):
        for sub in combinations(range(S.size), r):
            sset = set(sub)
            if all(S.mul(x, s) in sset and S.mul(s, x) in sset for x in sub for s in range(S.size)):
                found.append(Explicit(sub))
    return OIPFamily(f"ideals({S.name})", S, lambda a: found[a], tuple(range(len(found))))


def check_oip(carrier, F: OIPFamily, gbound=6, fip_size=3):
    """Absorption, per-element disjointness witnesses and finite intersections."""
    dom = carrier.domain
    ideals = {a: normalize(F.ideal(a), carrier) for a in F.alphas}
    for a, I in ideals.items():
        if I.is_empty():
            return CheckResult(FAIL, counterexample={"alpha": a}, detail="empty ideal")
        if not (carrier.set_mul(I, dom) <= I and carrier.set_mul(dom, I) <= I):
            return CheckResult(FAIL, counterexample={"alpha": a}, detail="not absorbing")
    pts = list(carrier.elements(gbound))
    witnesses = {}
    for x in pts:
        if F.witness is not None:
            a, U = F.witness(x)
            I = normalize(F.ideal(a), carrier)
            Un = normalize(U, carrier)
            ok = x in Un and Un.isdisjoint(I)
            found = (a, U) if ok else None
        else:
            found = next(((a, Explicit([x])) for a, I in ideals.items() if x not in I), None)
        if found is None:
            return CheckResult(FAIL, counterexample={"element": x},
                               counts={"ideals": len(ideals), "elements": len(pts)},
                               detail="no ideal avoids a neighbourhood of this element")
        witnesses[x] = found
    for r in range(2, fip_size + 1):
        for sub in combinations(sorted(ideals), r):
            inter = IntSet.full()
            for a in sub:
                inter = inter & ideals[a]
            if inter.is_empty():
                return CheckResult(FAIL, counterexample={"alphas": sub}, detail="empty intersection")
    first = pts[0]
    return CheckResult(PASS, witness={"element": first, "alpha": witnesses[first][0]},
                       counts={"ideals": len(ideals), "elements": len(pts)})


# ------------------------------------------------------------ topologies

KINDS = ("direct-sum", "coarsened", "example-2.7", "example-2.8", "example-3.7", "example-3.9")


@dataclass(frozen=True)
class TopologySpec:
    kind: str
    semigroup: object
    oip: OIPFamily | None = None

    @property
    def carrier(self):
        return self.semigroup.carrier


def applicable_kinds(carrier):
    """Kinds whose base families are defined over this carrier."""
    kinds = ["direct-sum"]
    if carrier == N_PLUS:
        kinds += ["coarsened", "example-2.7"]
    elif carrier == N_MAX:
        kinds += ["coarsened", "example-2.8"]
    elif carrier == INT_GROUP:
        kinds += ["example-3.7", "example-3.9"]
    return kinds


def make_topology(kind, semigroup=None, oip_bound=16):
    """Build a :class:`TopologySpec`, choosing the canonical carrier when omitted."""
    if kind not in KINDS:
        raise UsageError(f"unknown topology kind {kind!r}")
    defaults = {"example-2.7": N_PLUS, "example-2.8": N_MAX, "example-3.7": INT_GROUP,
                "example-3.9": INT_GROUP, "coarsened": N_PLUS}
    if semigroup is None:
        if kind == "direct-sum":
            raise UsageError("the direct sum topology needs an explicit semigroup")
        semigroup = ZBruck(defaults[kind])
    carrier = semigroup.carrier
    if carrier is None or not getattr(carrier, "discrete", False):
        raise UsageError("topologies are built over discrete carriers only")
    if kind not in applicable_kinds(carrier):
        raise UsageError(f"{kind} is not defined over {carrier.name}")
    if kind != "direct-sum" and not isinstance(semigroup, BruckReilly):
        raise UsageError(f"{kind} needs a Bruck-Reilly extension")
    if kind.startswith("example") and not semigroup.theta.is_annihilating:
        raise UsageError(f"{kind} is built on the annihilating homomorphism")
    oip = tail_ideals(carrier, oip_bound) if kind == "coarsened" else None
    return TopologySpec(kind, semigroup, oip)


def is_special(T: TopologySpec, x):
    """Whether ``x`` has a base other than its singleton atom."""
    s = x[1]
    if T.kind == "direct-sum":
        return False
    if T.kind == "coarsened":
        return T.carrier.is_unit(s)
    return s == 0


@dataclass(frozen=True)
class Schedule:
    """Parameter bounds for base searches; recorded in every report."""
    bound: int
    witness_bound: int

    @classmethod
    def default(cls, lo, hi, gbound=0):
        radius = max(abs(lo), abs(hi))
        bound = radius + 4
        return cls(bound, bound + radius + (gbound or 0))

    def as_dict(self):
        return {"bound": self.bound, "witness_bound": self.witness_bound}


def param_range(T: TopologySpec, x, bound):
    """Base parameters at ``x`` up to ``bound``, strongest first."""
    if not is_special(T, x):
        return [None]
    if T.kind == "example-3.7":
        return list(range(bound, -bound - 1, -1))
    if T.kind == "example-3.9":
        return list(range(bound, -1, -1))
    return list(range(bound, 0, -1))


def _check_param(T, p):
    if T.kind in ("example-2.7", "example-2.8", "coarsened"):
        if not isinstance(p, int) or p < 1:
            raise UsageError(f"{T.kind} parameter must be an integer >= 1, got {p!r}")
    elif T.kind == "example-3.9":
        if not isinstance(p, int) or p < 0:
            raise UsageError(f"{T.kind} parameter must be an integer >= 0, got {p!r}")
    elif T.kind == "example-3.7":
        if not isinstance(p, int):
            raise UsageError(f"{T.kind} parameter must be an integer, got {p!r}")


def lower_descriptor(T: TopologySpec, x, p):
    """Descriptor of the ``(i-1, j-1)`` layer of the base element at a special point."""
    if T.kind in ("example-2.7", "example-2.8", "example-3.7"):
        return UpperTail(p)
    if T.kind == "example-3.9":
        return TwoSidedTail(p)
    return Intersect((Preimage(T.semigroup.theta, Explicit([x[1]])), T.oip.ideal(p)))


def base_at(T: TopologySpec, x, param=None):
    return _base_at(T, ExtElement(*x), param)


@lru_cache(maxsize=1 << 16)
def _base_at(T, x, param):
    C = T.carrier
    if not C.contains(x[1]):
        raise UsageError(f"{x!r} is not a point of the extension")
    if not is_special(T, x):
        if param is not None:
            raise UsageError(f"{x!r} is isolated; its base takes no parameter")
        return BaseNbhd(x, point_set(x), None)
    _check_param(T, param)
    low = normalize(lower_descriptor(T, x, param), C)
    return BaseNbhd(x, LayerSet([Layer(x.i, IntSet.point(x.s), x.j), Layer(x.i - 1, low, x.j - 1)]),
                    param)


def bases(T, x, bound):
    return [base_at(T, x, p) for p in param_range(T, x, bound)]


def window_points(T, lo, hi, gbound):
    return T.semigroup.elements(lo, hi, gbound)


# ----------------------------------------------------------------- checks

def _aggregate(results, counts, fail_key):
    """Fold per-instance outcomes; fail beats inconclusive beats pass."""
    fails = [r for r in results if r[0] == FAIL]
    if fails:
        worst = min(fails, key=fail_key)
        return CheckResult(FAIL, counterexample=worst[1], counts=counts)
    inconc = [r for r in results if r[0] == INCONCLUSIVE]
    if inconc:
        return CheckResult(INCONCLUSIVE, counterexample=min(inconc, key=fail_key)[1], counts=counts)
    witness = results[0][1] if results else None
    return CheckResult(PASS, witness=witness, counts=counts)


def _pair_key(r):
    d = r[1]
    return tuple(element_key(d[k]) for k in ("x", "y") if k in d) + (repr(d),)


def hausdorff_witness(T, x, y, sched: Schedule):
    """Parameters ``(p, q)`` with disjoint base elements at ``x`` and ``y``, or None."""
    px = param_range(T, x, sched.witness_bound)
    py = param_range(T, y, sched.witness_bound)
    if T.kind == "coarsened" and T.oip.witness is not None:
        # the OIP witness for the other point's carrier element separates it
        # from the lower layer; try that index before the generic schedule
        px = _witness_first(T, y, px)
        py = _witness_first(T, x, py)
    for p in px:
        U = base_at(T, x, p)
        for q in py:
            if U.layers.isdisjoint(base_at(T, y, q).layers):
                return p, q
    return None


def _witness_first(T, other, params):
    if params == [None]:
        return params
    a = T.oip.witness(other[1])[0]
    return ([a] if a in params else []) + [p for p in params if p != a]


def check_hausdorff(T, x, y, sched: Schedule):
    if x == y:
        raise UsageError("Hausdorff separation needs distinct points")
    w = hausdorff_witness(T, x, y, sched)
    if w is None:
        return CheckResult(FAIL, counterexample={"x": x, "y": y}, detail="schedule exhausted")
    return CheckResult(PASS, witness={"x": x, "y": y, "params": w})


def check_hausdorff_window(T, lo, hi, gbound, sched=None):
    sched = sched or Schedule.default(lo, hi, gbound)
    pts = window_points(T, lo, hi, gbound)
    results = []
    for x, y in combinations(pts, 2):
        w = hausdorff_witness(T, x, y, sched)
        if w is None:
            results.append((FAIL, {"x": x, "y": y}))
        else:
            results.append((PASS, {"x": x, "y": y, "params": w}))
    return _aggregate(results, {"pairs": len(results), **sched.as_dict()}, _pair_key)


def _search(candidates, test):
    for p in candidates:
        if test(p):
            return p, True
    return None, False


def separate_continuity(T, x, y, sched: Schedule):
    """One outcome tuple for the pair ``(x, y)``."""
    sg = T.semigroup
    z = sg.mul(x, y)
    try:
        for Wp in param_range(T, z, sched.bound):
            W = base_at(T, z, Wp).layers
            pv, ok = _search(param_range(T, y, sched.witness_bound),
                             lambda q: translate_image(sg, "left", x, base_at(T, y, q)) <= W)
            if not ok:
                return FAIL, {"x": x, "y": y, "W": Wp, "side": "left"}
            pu, ok = _search(param_range(T, x, sched.witness_bound),
                             lambda p: translate_image(sg, "right", y, base_at(T, x, p)) <= W)
            if not ok:
                return FAIL, {"x": x, "y": y, "W": Wp, "side": "right"}
    except UndecidableForm as exc:
        return INCONCLUSIVE, {"x": x, "y": y, "reason": str(exc)}
    return PASS, {"x": x, "y": y}


def check_separate_continuity(T, x, y, sched: Schedule):
    st, d = separate_continuity(T, x, y, sched)
    return CheckResult(st, witness=d if st == PASS else None, counterexample=None if st == PASS else d)


def joint_continuity(T, x, y, sched: Schedule):
    sg = T.semigroup
    z = sg.mul(x, y)
    try:
        for Wp in param_range(T, z, sched.bound):
            W = base_at(T, z, Wp).layers
            found = None
            for p in param_range(T, x, sched.witness_bound):
                U = base_at(T, x, p)
                for q in param_range(T, y, sched.witness_bound):
                    if product_image(sg, U, base_at(T, y, q)) <= W:
                        found = (p, q)
                        break
                if found:
                    break
            if found is None:
                return FAIL, {"x": x, "y": y, "W": Wp}
    except UndecidableForm as exc:
        return INCONCLUSIVE, {"x": x, "y": y, "reason": str(exc)}
    return PASS, {"x": x, "y": y}


def check_joint_continuity(T, x, y, sched: Schedule):
    st, d = joint_continuity(T, x, y, sched)
    return CheckResult(st, witness=d if st == PASS else None, counterexample=None if st == PASS else d)


def _pairwise_window(T, lo, hi, gbound, sched, fn):
    sched = sched or Schedule.default(lo, hi, gbound)
    pts = window_points(T, lo, hi, gbound)
    results = [fn(T, x, y, sched) for x in pts for y in pts]
    return _aggregate(results, {"pairs": len(results), **sched.as_dict()}, _pair_key)


def check_separate_continuity_window(T, lo, hi, gbound, sched=None):
    return _pairwise_window(T, lo, hi, gbound, sched, separate_continuity)


def check_joint_continuity_window(T, lo, hi, gbound, sched=None):
    return _pairwise_window(T, lo, hi, gbound, sched, joint_continuity)


def inversion_continuity(T, x, sched: Schedule):
    sg = T.semigroup
    xi = sg.inverse(x)
    try:
        for Wp in param_range(T, xi, sched.bound):
            W = base_at(T, xi, Wp)
            pv, ok = _search(param_range(T, x, sched.witness_bound),
                             lambda p: inverse_image(sg, base_at(T, x, p)) <= W.layers)
            if not ok:
                return FAIL, {"x": x, "W": Wp, "W_set": W.layers.as_json(),
                              "inverted_V": inverse_image(sg, base_at(T, x, param_range(
                                  T, x, sched.witness_bound)[0])).as_json()}
    except UndecidableForm as exc:
        return INCONCLUSIVE, {"x": x, "reason": str(exc)}
    return PASS, {"x": x}


def check_inversion_continuity(T, x, sched: Schedule):
    st, d = inversion_continuity(T, x, sched)
    return CheckResult(st, witness=d if st == PASS else None, counterexample=None if st == PASS else d)


def check_inversion_continuity_window(T, lo, hi, gbound, sched=None):
    if not T.carrier.is_inverse:
        raise UsageError(f"{T.carrier.name} is not an inverse monoid")
    sched = sched or Schedule.default(lo, hi, gbound)
    pts = window_points(T, lo, hi, gbound)
    results = [inversion_continuity(T, x, sched) for x in pts]
    return _aggregate(results, {"points": len(results), **sched.as_dict()},
                      lambda r: (element_key(r[1]["x"]), repr(r[1])))


def check_nbhd_lowerset(T, x, sched: Schedule):
    """Every base element at ``(i, s, j)`` lives in layers ``(i-k, j-k)``, ``k >= 0``."""
    for N in bases(T, x, sched.bound):
        for i, D, j in N:
            if not (x[0] - i == x[2] - j and x[0] >= i):
                return CheckResult(FAIL, counterexample={"x": x, "param": N.param, "layer": (i, j)})
    return CheckResult(PASS, counts={"bases": len(param_range(T, x, sched.bound))})


def check_nbhd_lowerset_window(T, lo, hi, gbound, sched=None):
    sched = sched or Schedule.default(lo, hi, gbound)
    for x in window_points(T, lo, hi, gbound):
        r = check_nbhd_lowerset(T, x, sched)
        if not r:
            return r
    return CheckResult(PASS, counts={"points": len(window_points(T, lo, hi, gbound))})


def check_coarser_strict(T, lo, hi, gbound, sched=None):
    """The topology is coarser than the direct sum one, and strictly so."""
    sched = sched or Schedule.default(lo, hi, gbound)
    if not T.carrier.discrete:
        return CheckResult(FAIL, detail="layers are direct-sum open only over discrete carriers")
    pts = window_points(T, lo, hi, gbound)
    # (a) base elements are finite unions of layers; each layer is open in
    # the direct sum topology because the carrier is discrete
    for x in pts:
        for N in bases(T, x, sched.bound):
            if x not in N or len(N.layers.layers) > 2:
                return CheckResult(FAIL, counterexample={"x": x, "param": N.param})
    # (b) a point whose atom contains no base element of the coarse topology
    for x in sorted(pts, key=element_key):
        if all(not N.layers.restrict(x[0] - 1, x[2] - 1).is_empty()
               for N in bases(T, x, sched.bound)):
            return CheckResult(PASS, witness={"x": x, "lower_layer": (x[0] - 1, x[2] - 1)},
                               counts={"points": len(pts), **sched.as_dict()})
    return CheckResult(FAIL, counts={"points": len(pts), **sched.as_dict()},
                       detail="every atom contains a base element: not strictly coarser")


def check_restriction_discrete(T, gbound, m=0, sched=None):
    """Base elements cut to the layer ``S_{m,m}`` recover the discrete carrier."""
    sched = sched or Schedule.default(m, m, gbound)
    C = T.carrier
    for s in C.elements(gbound):
        x = ExtElement(m, s, m)
        if not any(N.layers.restrict(m, m) == IntSet.point(s) for N in bases(T, x, sched.bound)):
            return CheckResult(FAIL, counterexample={"x": x})
    return CheckResult(PASS, counts={"points": len(list(C.elements(gbound)))})


def check_discrete(T, lo, hi, gbound=None):
    """Every window point has a singleton base element."""
    pts = window_points(T, lo, hi, gbound)
    sched = Schedule.default(lo, hi, gbound or 0)
    for x in pts:
        if not any(N.layers.is_singleton(x) for N in bases(T, x, sched.bound)):
            return CheckResult(FAIL, counterexample={"x": x})
    return CheckResult(PASS, counts={"points": len(pts)})


# ------------------------------------------------ the nine product claims

def _U(T, i, j, k):
    return base_at(T, ExtElement(i, 0, j), k).layers


def _recorder(sg, out):
    def record(name, x, y, expect, image, target):
        out.append((name, sg.mul(x, y) == expect and image <= target))
    return record


def example_37_translation_claims(T, i, j, m, n, g, k):
    """Cases a) and b): a non-identity point times an idempotent-layer point.

    Returns ``(claim, holds)`` pairs; each claim states the product of the
    anchors and a containment of a translated neighbourhood.
    """
    sg = T.semigroup
    out = []
    record = _recorder(sg, out)
    x, y = ExtElement(i, g, j), ExtElement(m, 0, n)
    img = translate_image(sg, "left", x, _U(T, m, n, k))
    if j < m - 1:
        record("a1", x, y, (i - j + m, 0, n), img, _U(T, i - j + m, n, k))
    elif j == m - 1:
        record("a2", x, y, (i + 1, 0, n), img, _U(T, i + 1, n, k + g))
    else:
        record("a3", x, y, (i, g, n - m + j), img, point_set((i, g, n - m + j)))
    x, y = ExtElement(i, 0, j), ExtElement(m, g, n)
    img = translate_image(sg, "right", y, _U(T, i, j, k))
    if j <= m:
        record("b1", x, y, (i - j + m, g, n), img, point_set((i - j + m, g, n)))
    elif j == m + 1:
        record("b2", x, y, (i, 0, n + 1), img, _U(T, i, n + 1, k + g))
    else:
        record("b3", x, y, (i, 0, n - m + j), img, _U(T, i, n - m + j, k))
    return out


def example_37_product_claims(T, i, j, m, n, k, l):
    """Case c): two idempotent-layer points and the product of neighbourhoods."""
    sg = T.semigroup
    out = []
    record = _recorder(sg, out)
    x, y = ExtElement(i, 0, j), ExtElement(m, 0, n)
    img = product_image(sg, _U(T, i, j, k), _U(T, m, n, l))
    if j < m:
        record("c1", x, y, (i - j + m, 0, n), img, _U(T, i - j + m, n, l))
    elif j == m:
        record("c2", x, y, (i, 0, n), img, _U(T, i, n, k + l))
    else:
        record("c3", x, y, (i, 0, n - m + j), img, _U(T, i, n - m + j, k))
    return out


CLAIMS = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3")


def check_example_37_claims(idx_lo=-3, idx_hi=3, tail_lo=-6, tail_hi=6, g_values=None):
    """Every applicable product claim over the index and tail ranges."""
    T = make_topology("example-3.7")
    gs = g_values or [g for g in range(-3, 4) if g != 0]
    r = range(idx_lo, idx_hi + 1)
    tails = range(tail_lo, tail_hi + 1)
    checked = dict.fromkeys(CLAIMS, 0)
    failures = []
    for i, j, m, n in product(r, r, r, r):
        outcomes = []
        for g, k in product(gs, tails):
            outcomes += example_37_translation_claims(T, i, j, m, n, g, k)
        for k, l in product(tails, tails):
            outcomes += example_37_product_claims(T, i, j, m, n, k, l)
        for name, ok in outcomes:
            checked[name] += 1
            if not ok:
                failures.append((name, (i, j, m, n)))
    counts = {c: checked[c] for c in CLAIMS}
    if failures:
        return CheckResult(FAIL, counterexample=min(failures), counts=counts)
    if not all(checked.values()):
        return CheckResult(FAIL, counts=counts, detail="some claim never applied")
    return CheckResult(PASS, counts=counts)

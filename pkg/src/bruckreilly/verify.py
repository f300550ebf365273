"""Named suites of checks and the report they produce.

A :class:`Suite` is plain data: a construction recipe, a window, a schedule
and a list of :class:`CheckSpec`.  Each check names a registered kind and
the outcome it expects.  Most expect ``pass``; a few expect ``fail`` because
the claim under test is a negative one (a discontinuity, a missing
witness), and the suite verdict is whether the observed outcome matched.

Reports are a pure function of the suite apart from the ``time`` field.
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from . import exhaustive, structure, topology
from .errors import UndecidableForm, UsageError
from .monoid import FiniteMonoid
from .recipes import build_carrier, build_semigroup, parse_u
from .report import FAIL, INCONCLUSIVE, PASS, CheckResult, jsonable

CONSTRUCTION_ERROR = "construction-error"
FIELDS = ("suite", "check", "status", "witness", "counts", "time")


@dataclass
class CheckSpec:
    kind: str
    params: dict = field(default_factory=dict)
    expect: str = PASS
    name: str | None = None

    @property
    def label(self):
        return self.name or self.kind


@dataclass
class Suite:
    name: str
    construction: str | None = None
    carrier: object = None
    theta: object = None
    u: object = None
    window: tuple = (-1, 1)
    gbound: int | None = None
    schedule: int | None = None
    checks: list = field(default_factory=list)

    def to_dict(self):
        d = asdict(self)
        d["window"] = list(self.window)
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["window"] = tuple(d.get("window", (-1, 1)))
        d["checks"] = [c if isinstance(c, CheckSpec) else CheckSpec(**c) for c in d.get("checks", [])]
        if isinstance(d.get("u"), dict):
            # JSON object keys come back as strings
            d["u"] = parse_u(d["u"])
        return cls(**d)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class Context:
    suite: Suite
    semigroup: object

    @property
    def lo(self):
        return self.suite.window[0]

    @property
    def hi(self):
        return self.suite.window[1]

    @property
    def gbound(self):
        return self.suite.gbound

    def window(self, params):
        lo, hi = params.get("window", self.suite.window)
        return structure.Window(self.semigroup, lo, hi, params.get("gbound", self.gbound))

    def schedule(self):
        sched = topology.Schedule.default(self.lo, self.hi, self.gbound or 0)
        if self.suite.schedule is not None:
            radius = max(abs(self.lo), abs(self.hi))
            b = self.suite.schedule
            sched = topology.Schedule(b, b + radius + (self.gbound or 0))
        return sched

    def topology(self, params):
        return topology.make_topology(params["topology"], self.semigroup)


def _window_args(ctx, p):
    lo, hi = p.get("window", ctx.suite.window)
    return lo, hi, p.get("gbound", ctx.gbound)


CHECKS = {}


def check_kind(name):
    def register(fn):
        CHECKS[name] = fn
        return fn
    return register


@check_kind("associativity")
def _assoc(ctx, p):
    return exhaustive.check_associativity(ctx.semigroup, *_window_args(ctx, p))


@check_kind("vector-scalar-agreement")
def _vec(ctx, p):
    return exhaustive.check_scalar_matches_vector(ctx.semigroup, *_window_args(ctx, p))


@check_kind("oracle-equivalence")
def _oracle(ctx, p):
    lo, hi, _ = _window_args(ctx, p)
    return exhaustive.check_oracle_equivalence(lo, hi)


@check_kind("grading-fuzz")
def _fuzz(ctx, p):
    return exhaustive.check_grading_fuzz(ctx.semigroup, n=p.get("n", 100_000),
                                         idx_bound=p.get("idx_bound", 50),
                                         gbound=p.get("gbound", 50), seed=p.get("seed", 0))


@check_kind("f-zero-identity")
def _f0(ctx, p):
    lo, hi = p.get("range", (-5, 5))
    return exhaustive.check_f_identity(ctx.semigroup, lo, hi)


@check_kind("branch-agreement")
def _branches(ctx, p):
    return exhaustive.check_branch_agreement(ctx.semigroup, *_window_args(ctx, p))


@check_kind("zbruck-agreement")
def _zbruck(ctx, p):
    return exhaustive.check_zbruck_agreement(ctx.semigroup.carrier, *_window_args(ctx, p))


@check_kind("idempotents")
def _idem(ctx, p):
    return structure.check_idempotents(ctx.window(p))


@check_kind("greens-consistency")
def _greens(ctx, p):
    return structure.check_greens_consistency(ctx.window(p), p.get("multiplier_bound"))


@check_kind("h-classes-are-layers")
def _hlayers(ctx, p):
    return structure.check_h_classes_are_layers(ctx.window(p), p.get("multiplier_bound"))


@check_kind("simple")
def _simple(ctx, p):
    return structure.check_simple(ctx.window(p), multiplier_bound=p.get("multiplier_bound"),
                                  n_samples=p.get("samples", 200), seed=p.get("seed", 0))


@check_kind("inverse-transfer")
def _inv(ctx, p):
    return structure.check_inverse_transfer(ctx.window(p), p.get("multiplier_bound"))


@check_kind("regular-transfer")
def _reg(ctx, p):
    return structure.check_regular_transfer(ctx.window(p), p.get("multiplier_bound"))


@check_kind("i-bisimple")
def _bisimple(ctx, p):
    return structure.check_I_bisimple(ctx.window(p), p.get("multiplier_bound"))


@check_kind("ideal-pullback")
def _pullback(ctx, p):
    S = build_carrier(p["carrier"]) if "carrier" in p else ctx.semigroup.carrier
    return structure.check_ideal_pullback(S)


@check_kind("hausdorff")
def _haus(ctx, p):
    return topology.check_hausdorff_window(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("separate-continuity")
def _sep(ctx, p):
    return topology.check_separate_continuity_window(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("joint-continuity")
def _joint(ctx, p):
    return topology.check_joint_continuity_window(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("inversion-continuity")
def _inversion(ctx, p):
    return topology.check_inversion_continuity_window(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("nbhd-lowerset")
def _lower(ctx, p):
    return topology.check_nbhd_lowerset_window(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("coarser-strict")
def _strict(ctx, p):
    return topology.check_coarser_strict(ctx.topology(p), *_window_args(ctx, p), ctx.schedule())


@check_kind("restriction-discrete")
def _restrict(ctx, p):
    return topology.check_restriction_discrete(ctx.topology(p), _window_args(ctx, p)[2] or 0)


@check_kind("discrete")
def _discrete(ctx, p):
    S = ctx.semigroup.carrier
    kinds = topology.applicable_kinds(S)
    if kinds != ["direct-sum"]:
        return CheckResult(FAIL, counterexample={"applicable": kinds})
    r = topology.check_discrete(ctx.topology({"topology": "direct-sum"}), *_window_args(ctx, p))
    r.witness = {"applicable": kinds}
    return r


@check_kind("oip")
def _oip(ctx, p):
    S = ctx.semigroup.carrier
    F = topology.finite_ideals(S) if isinstance(S, FiniteMonoid) else topology.tail_ideals(S, p.get("alphas", 16))
    return topology.check_oip(S, F, gbound=p.get("gbound", ctx.gbound or 6))


@check_kind("example-3.7-claims")
def _claims(ctx, p):
    lo, hi = p.get("indices", (-3, 3))
    tlo, thi = p.get("tails", (-6, 6))
    return topology.check_example_37_claims(lo, hi, tlo, thi)


@dataclass
class Record:
    suite: str
    check: str
    status: str
    witness: object
    counts: dict
    time: float

    def as_dict(self, with_time=True):
        d = {k: getattr(self, k) for k in FIELDS}
        if not with_time:
            d.pop("time")
        return d


@dataclass
class VerificationReport:
    records: list = field(default_factory=list)

    def extend(self, other):
        self.records.extend(other.records)

    @property
    def statuses(self):
        return [r.status for r in self.records]

    @property
    def passed(self):
        return all(s == PASS for s in self.statuses)

    def exit_code(self):
        st = set(self.statuses)
        if CONSTRUCTION_ERROR in st:
            return 3
        if FAIL in st:
            return 1
        if INCONCLUSIVE in st:
            return 2
        return 0

    def text(self):
        lines = []
        for r in self.records:
            cells = [r.suite, r.check, r.status, _compact(r.witness), _compact(r.counts), f"{r.time:.3f}s"]
            lines.append(" | ".join(cells))
        return "\n".join(lines)

    def machine(self, with_time=True):
        return "\n".join(json.dumps(r.as_dict(with_time), ensure_ascii=False) for r in self.records)


def _compact(obj):
    if obj is None:
        return "-"
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _verdict(res: CheckResult, expect):
    if res.status == INCONCLUSIVE:
        return INCONCLUSIVE
    return PASS if res.status == expect else FAIL


def _evidence(res: CheckResult, spec: CheckSpec):
    ev = res.witness if res.status == PASS else res.counterexample
    if spec.expect != PASS:
        return jsonable({"expected": spec.expect, "observed": res.status, "evidence": ev,
                         "detail": res.detail or None})
    if res.status != PASS and res.detail:
        return jsonable({"counterexample": ev, "detail": res.detail})
    return jsonable(ev)


def run_check(ctx, spec: CheckSpec):
    if spec.kind not in CHECKS:
        raise UsageError(f"unknown check kind {spec.kind!r}")
    t0 = time.perf_counter()
    try:
        res = CHECKS[spec.kind](ctx, spec.params)
    except UndecidableForm as exc:
        res = CheckResult(INCONCLUSIVE, counterexample={"reason": str(exc)})
    elapsed = time.perf_counter() - t0
    return Record(ctx.suite.name, spec.label, _verdict(res, spec.expect),
                  _evidence(res, spec), jsonable(res.counts), elapsed)


def build(suite: Suite):
    if suite.construction is None:
        return None
    return build_semigroup(suite.construction, suite.carrier, suite.theta, suite.u)


def run_suite(suite: Suite) -> VerificationReport:
    report = VerificationReport()
    try:
        sg = build(suite)
    except (UsageError, ValueError) as exc:
        report.records.append(Record(suite.name, "construction", CONSTRUCTION_ERROR,
                                     {"error": str(exc)}, {}, 0.0))
        return report
    ctx = Context(suite, sg)
    for spec in suite.checks:
        report.records.append(run_check(ctx, spec))
    return report


def run_suites(suites):
    report = VerificationReport()
    for s in suites:
        report.extend(run_suite(s))
    return report


def _c(kind, expect=PASS, name=None, **params):
    return CheckSpec(kind, params, expect, name)


WARNE = dict(construction="warne", carrier="c6", theta="scale(2)", u={-1: 1, -2: 3})


def builtin_suites():
    """The acceptance-level suites, each runnable on its own."""
    suites = [
        Suite("ext-bicyclic-assoc", "ext-bicyclic", window=(-4, 4), checks=[
            _c("associativity"), _c("oracle-equivalence")]),
        Suite("zbr-assoc-semilattice2", "zbr", "semilattice2", "annihilating", window=(-3, 3),
              checks=[_c("associativity"), _c("zbruck-agreement")]),
        Suite("zbr-assoc-c2-identity", "zbr", "c2", "identity", window=(-3, 3),
              checks=[_c("associativity")]),
        Suite("zbr-assoc-leftzero2+1", "zbr", "leftzero2+1", "annihilating", window=(-3, 3),
              checks=[_c("associativity")]),
        Suite("zbruck-int-group", "zbruck", "int-group", window=(-2, 2), gbound=3,
              checks=[_c("associativity"), _c("zbruck-agreement")]),
        Suite("warne-branch-agreement", **WARNE, window=(-3, 3),
              checks=[_c("f-zero-identity", range=(-5, 5)), _c("branch-agreement")]),
        Suite("warne-assoc", **WARNE, window=(-3, 3),
              checks=[_c("associativity"), _c("grading-fuzz", n=100_000, seed=0)]),
        Suite("prop-1.1-i-simple-ext-bicyclic", "ext-bicyclic", window=(-3, 3),
              checks=[_c("simple", samples=200, seed=1)]),
        Suite("prop-1.1-i-simple-semilattice2", "zbr", "semilattice2", window=(-3, 3),
              checks=[_c("simple", samples=200, seed=1)]),
        Suite("prop-1.1-i-simple-c2-identity", "zbr", "c2", "identity", window=(-3, 3),
              checks=[_c("simple", samples=200, seed=1)]),
        Suite("prop-1.1-i-simple-leftzero2+1", "zbr", "leftzero2+1", window=(-3, 3),
              checks=[_c("simple", samples=200, seed=1)]),
        Suite("prop-1.1-i-simple-warne", **WARNE, window=(-3, 3),
              checks=[_c("simple", samples=200, seed=1)]),
        Suite("prop-1.1-ii-semilattice2", "zbr", "semilattice2", window=(-3, 3),
              checks=[_c("inverse-transfer"), _c("idempotents")]),
        Suite("prop-1.1-ii-leftzero", "zbr", "leftzero2+1", window=(-1, 1),
              checks=[_c("inverse-transfer")]),
        Suite("prop-1.1-iii-leftzero", "zbr", "leftzero2+1", window=(-1, 1),
              checks=[_c("regular-transfer")]),
        Suite("prop-1.1-iii-nil3", "zbr", "nil3", window=(-1, 1),
              checks=[_c("regular-transfer")]),
        Suite("i-bisimple-ext-bicyclic", "ext-bicyclic", window=(-2, 2),
              checks=[_c("i-bisimple"), _c("greens-consistency")]),
        Suite("i-bisimple-warne", **WARNE, window=(-1, 1),
              checks=[_c("i-bisimple"), _c("h-classes-are-layers"), _c("idempotents")]),
        Suite("i-bisimple-zbr-semilattice2", "zbr", "semilattice2", window=(-1, 1),
              checks=[_c("i-bisimple", expect=FAIL)]),
        Suite("ideal-pullback", "zbr", "chain3", window=(0, 0),
              checks=[_c("ideal-pullback"), _c("ideal-pullback", name="ideal-pullback-c2", carrier="c2")]),
    ]
    topo = [
        ("direct-sum", "zbr", "semilattice2", None, False, False),
        ("example-2.7", "zbruck", "nplus", 2, True, False),
        ("example-2.8", "zbruck", "nmax", 2, True, True),
        ("example-3.7", "zbruck", "int-group", 2, True, None),
        ("example-3.9", "zbruck", "int-group", 2, None, True),
        ("coarsened", "zbr", "nplus", 2, True, False),
    ]
    for kind, cons, carrier, g, joint, inversion in topo:
        name = f"topology-{kind}" + (f"-{carrier}" if kind in ("coarsened", "direct-sum") else "")
        checks = [_c("hausdorff", topology=kind), _c("separate-continuity", topology=kind),
                  _c("nbhd-lowerset", topology=kind), _c("restriction-discrete", topology=kind)]
        if joint:
            checks.append(_c("joint-continuity", topology=kind))
        if inversion:
            checks.append(_c("inversion-continuity", topology=kind))
        suites.append(Suite(name, cons, carrier, window=(-1, 1), gbound=g, checks=checks))
    suites += [
        Suite("topology-coarsened-nmax", "zbr", "nmax", window=(-1, 1), gbound=2, checks=[
            _c(k, topology="coarsened") for k in
            ("hausdorff", "separate-continuity", "joint-continuity", "nbhd-lowerset",
             "restriction-discrete")]),
        Suite("example-3.7-inversion-discontinuity", "zbruck", "int-group", window=(-1, 1), gbound=2,
              checks=[_c("inversion-continuity", expect=FAIL, topology="example-3.7")]),
        Suite("example-3.9-joint-discontinuity", "zbruck", "int-group", window=(-1, 1), gbound=2,
              checks=[_c("joint-continuity", expect=FAIL, topology="example-3.9")]),
        Suite("example-3.7-claims", "zbruck", "int-group", checks=[
            _c("example-3.7-claims", indices=(-2, 2), tails=(-4, 4))]),
        Suite("coarsened-strict-nplus", "zbr", "nplus", window=(-1, 1), gbound=2,
              checks=[_c("coarser-strict", topology="coarsened"), _c("oip")]),
        Suite("coarsened-strict-nmax", "zbr", "nmax", window=(-1, 1), gbound=2,
              checks=[_c("coarser-strict", topology="coarsened"), _c("oip")]),
        Suite("direct-sum-not-strict", "zbr", "nplus", window=(-1, 1), gbound=2,
              checks=[_c("coarser-strict", expect=FAIL, topology="direct-sum")]),
        Suite("oip-nplus", "zbr", "nplus", gbound=8, checks=[_c("oip")]),
        Suite("oip-nmax", "zbr", "nmax", gbound=8, checks=[_c("oip")]),
        Suite("oip-bounded-semilattice", "zbr", "chain3", checks=[_c("oip", expect=FAIL)]),
        Suite("discrete-trivial", "zbr", "trivial", window=(-2, 2), checks=[_c("discrete")]),
    ]
    return suites


def builtin_suite(name):
    for s in builtin_suites():
        if s.name == name:
            return s
    raise UsageError(f"unknown suite {name!r}")

"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import io
import json
import time

import pytest

from bruckreilly.cli import main
from bruckreilly.exhaustive import (
    check_associativity,
    check_branch_agreement,
    check_f_identity,
    check_grading_fuzz,
    check_oracle_equivalence,
)
from bruckreilly.extensions import ExtendedBicyclic
from bruckreilly.recipes import build_semigroup
from bruckreilly.structure import Window, check_I_bisimple, check_inverse_transfer, check_simple, inverse_counts
from bruckreilly.topology import check_example_37_claims
from bruckreilly.verify import WARNE, builtin_suite, run_suites

BR_CARRIERS = [("semilattice2", "annihilating"), ("c2", "identity"), ("leftzero2+1", "annihilating")]


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def warne():
    return build_semigroup(WARNE["construction"], WARNE["carrier"], WARNE["theta"], WARNE["u"])


def test_c01_ext_bicyclic_associativity(verdict):
    t0 = time.perf_counter()
    res = check_associativity(ExtendedBicyclic(), -4, 4)
    dt = time.perf_counter() - t0
    c = res.counts
    verdict(1, res.passed and c["triples"] == 531441 and c["violations"] == 0 and dt <= 5,
            f"{c['triples']} triples, {c['violations']} violations, {dt:.2f}s (budget 5s)")


def test_c02_oracle_equivalence(verdict):
    res = check_oracle_equivalence(-4, 4)
    verdict(2, res.passed and res.counts["mismatches"] == 0,
            f"{res.counts['pairs']} pairs, {res.counts['mismatches']} mismatches")


def test_c03_bruck_reilly_associativity(verdict):
    t0 = time.perf_counter()
    results = {c: check_associativity(build_semigroup("zbr", c, th), -3, 3) for c, th in BR_CARRIERS}
    dt = time.perf_counter() - t0
    viol = {c: r.counts["violations"] for c, r in results.items()}
    verdict(3, all(r.passed for r in results.values()) and dt <= 30,
            f"violations {viol}, {dt:.2f}s (budget 30s)")


def test_c04_grading(verdict):
    graded = [check_associativity(ExtendedBicyclic(), -4, 4)]
    graded += [check_associativity(build_semigroup("zbr", c, th), -3, 3) for c, th in BR_CARRIERS]
    window_bad = sum(r.counts["grading_violations"] for r in graded)
    window_products = sum(r.counts["products"] for r in graded)
    fuzz = check_grading_fuzz(warne(), n=100_000, seed=0)
    verdict(4, window_bad == 0 and fuzz.passed and fuzz.counts["violations"] == 0,
            f"{window_products} window products and {fuzz.counts['products']} fuzzed Warne products, "
            f"{window_bad + fuzz.counts['violations']} violations")


def test_c05_inverse_transfer(verdict):
    w_sl = Window(build_semigroup("zbr", "semilattice2"), -3, 3)
    unique = all(len(v) == 1 for v in inverse_counts(w_sl).values())
    w_lz = Window(build_semigroup("zbr", "leftzero2+1"), -3, 3)
    res = check_inverse_transfer(w_lz)
    many = res.passed and len(res.witness["inverses"]) >= 2
    verdict(5, unique and check_inverse_transfer(w_sl).passed and many,
            f"semilattice2 unique inverses: {unique}; leftzero2+1 witness {res.witness}")


def test_c06_simple_witnesses(verdict):
    sgs = {"ext-bicyclic": ExtendedBicyclic(), "warne": warne()}
    sgs.update({c: build_semigroup("zbr", c, th) for c, th in BR_CARRIERS})
    fails = {}
    for name, sg in sgs.items():
        w = Window(sg, -3, 3)
        res = check_simple(w, multiplier_bound=w.radius + 2, n_samples=200, seed=1)
        fails[name] = res.counts["failures"]
    verdict(6, not any(fails.values()), f"failures per carrier over 200 pairs: {fails}")


def test_c07_warne(verdict):
    W = warne()
    t0 = time.perf_counter()
    f0 = check_f_identity(W, -5, 5)
    br = check_branch_agreement(W, -3, 3)
    assoc = check_associativity(W, -3, 3)
    dt = time.perf_counter() - t0
    verdict(7, f0.passed and br.passed and assoc.passed and dt <= 60,
            f"f(0,n)=e: {f0.status}; {br.counts['pairs']} branch pairs; "
            f"{assoc.counts['triples']} triples, {assoc.counts['violations']} violations; {dt:.2f}s (budget 60s)")


def test_c08_i_bisimple(verdict):
    a = check_I_bisimple(Window(ExtendedBicyclic(), -3, 3))
    b = check_I_bisimple(Window(warne(), -2, 2))
    verdict(8, a.passed and b.passed, f"ext-bicyclic {a.witness}; warne {b.witness}")


def test_c09_example_37_claims(verdict):
    res = check_example_37_claims(-3, 3, -6, 6)
    verdict(9, res.passed, f"claims checked {res.counts}")


TOPOLOGY_SUITES = [
    "topology-direct-sum-semilattice2", "topology-example-2.7", "topology-example-2.8",
    "topology-example-3.7", "topology-example-3.9", "topology-coarsened-nplus",
    "topology-coarsened-nmax", "example-3.7-inversion-discontinuity",
]


def test_c10_topology(verdict):
    rep = run_suites([builtin_suite(n) for n in TOPOLOGY_SUITES])
    kinds = {r.check for r in rep.records}
    bad = [(r.suite, r.check, r.status) for r in rep.records if r.status != "pass"]
    verdict(10, rep.passed and {"hausdorff", "separate-continuity", "joint-continuity",
                                "inversion-continuity"} <= kinds,
            f"{len(rep.records)} topology checks, non-passing {bad}")


def test_c11_strict_coarseness_and_oip(verdict):
    names = ["coarsened-strict-nplus", "coarsened-strict-nmax", "oip-nplus", "oip-nmax",
             "oip-bounded-semilattice"]
    rep = run_suites([builtin_suite(n) for n in names])
    bounded = [r for r in rep.records if r.suite == "oip-bounded-semilattice"][0]
    verdict(11, rep.passed and bounded.witness["observed"] == "fail",
            f"{len(rep.records)} checks; bounded semilattice OIP observed {bounded.witness['observed']}")


def test_c12_trivial_carrier_discrete(verdict):
    rep = run_suites([builtin_suite("discrete-trivial")])
    r = rep.records[0]
    verdict(12, rep.passed and r.witness == {"applicable": ["direct-sum"]},
            f"applicable kinds {r.witness}, points {r.counts}")


def _machine_run():
    out, err = io.StringIO(), io.StringIO()
    code = main(["verify", "--suite", "all", "--format", "machine"], out, err)
    rows = [json.loads(l) for l in out.getvalue().splitlines()]
    for r in rows:
        r.pop("time")
    return code, rows


def test_c13_determinism(verdict):
    code1, first = _machine_run()
    code2, second = _machine_run()
    verdict(13, code1 == code2 == 0 and first == second,
            f"{len(first)} records, exit codes {code1}/{code2}, identical: {first == second}")

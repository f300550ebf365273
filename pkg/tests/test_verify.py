import json

import pytest

from bruckreilly.errors import UndecidableForm, UsageError
from bruckreilly.monoid import INT_GROUP, IntGroupEndo
from bruckreilly.report import CheckResult
from bruckreilly.topology import Preimage, UpperTail, normalize
from bruckreilly.verify import (
    CHECKS,
    CheckSpec,
    Suite,
    builtin_suite,
    builtin_suites,
    run_suite,
    run_suites,
)


def test_empty_suite_passes():
    rep = run_suite(Suite("empty"))
    assert rep.records == []
    assert rep.passed and rep.exit_code() == 0


def test_builtin_names():
    names = [s.name for s in builtin_suites()]
    assert len(names) == len(set(names))
    for n in ("warne-branch-agreement", "example-3.7-inversion-discontinuity", "oip-nmax",
              "ext-bicyclic-assoc", "prop-1.1-ii-leftzero"):
        assert n in names
    with pytest.raises(UsageError):
        builtin_suite("nope")


def test_suite_round_trip():
    for s in builtin_suites():
        back = Suite.from_dict(json.loads(s.to_json()))
        assert back.to_json() == s.to_json()


def test_ext_bicyclic_suite_counts():
    rep = run_suite(builtin_suite("ext-bicyclic-assoc"))
    assert rep.passed
    assert rep.records[0].counts["triples"] == 531441


def test_leftzero_suite_records_double_inverse():
    rep = run_suite(builtin_suite("prop-1.1-ii-leftzero"))
    assert rep.passed
    assert any("inverses" in json.dumps(r.witness) for r in rep.records)


def test_expected_failure_suite():
    rep = run_suite(builtin_suite("example-3.7-inversion-discontinuity"))
    assert rep.exit_code() == 0
    w = rep.records[0].witness
    assert w["expected"] == "fail" and w["observed"] == "fail"


def test_expectation_mismatch_fails():
    s = Suite("flip", "zbruck", "int-group", window=(-1, 1), gbound=2,
              checks=[CheckSpec("inversion-continuity", {"topology": "example-3.7"})])
    assert run_suite(s).exit_code() == 1


def test_undecidable_forms_are_inconclusive(monkeypatch):
    with pytest.raises(UndecidableForm):
        normalize(Preimage(IntGroupEndo("scale", 2), UpperTail(3)), INT_GROUP)

    def scaled_preimage(ctx, p):
        normalize(Preimage(IntGroupEndo("scale", 2), UpperTail(3)), INT_GROUP)
        return CheckResult("pass")

    monkeypatch.setitem(CHECKS, "scaled-preimage", scaled_preimage)
    rep = run_suite(Suite("undecidable", "ext-bicyclic", checks=[CheckSpec("scaled-preimage")]))
    assert rep.statuses == ["inconclusive"]
    assert rep.exit_code() == 2


def test_construction_error_record():
    rep = run_suite(Suite("broken", "warne", "semilattice2", checks=[CheckSpec("associativity")]))
    assert rep.statuses == ["construction-error"]
    assert rep.exit_code() == 3


def test_unknown_check_kind():
    with pytest.raises(UsageError):
        run_suite(Suite("x", "ext-bicyclic", checks=[CheckSpec("bogus")]))


def test_report_formats():
    rep = run_suites([builtin_suite("zbr-assoc-c2-identity"), builtin_suite("discrete-trivial")])
    lines = rep.text().splitlines()
    assert len(lines) == 2
    assert lines[0].split(" | ")[:3] == ["zbr-assoc-c2-identity", "associativity", "pass"]
    rows = [json.loads(l) for l in rep.machine().splitlines()]
    assert list(rows[0]) == ["suite", "check", "status", "witness", "counts", "time"]
    assert "time" not in json.loads(rep.machine(with_time=False).splitlines()[0])


def test_deterministic_reports():
    suites = [builtin_suite(n) for n in ("prop-1.1-ii-leftzero", "topology-example-3.9", "oip-bounded-semilattice")]
    assert run_suites(suites).machine(False) == run_suites(suites).machine(False)

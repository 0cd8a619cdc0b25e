import json
from fractions import Fraction

import pytest

from hookschur.polyring import HalfSeries, LaurentPoly, X
from hookschur.report import IDENTITIES, VerificationReport, first_mismatch, run_check, verify_all, verify_identity


def test_report_requires_mismatch_on_fail():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "fail")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "maybe")


def test_report_json_round_trip_is_byte_identical():
    rep = verify_identity("q-identity", 2, 2, lam=1)
    text = rep.to_json()
    again = VerificationReport.from_json(text)
    assert again == rep
    assert again.to_json() == text
    assert json.dumps(json.loads(text), sort_keys=True) == text


def test_first_mismatch_kinds():
    a = LaurentPoly.var(X(1)) + 1
    assert first_mismatch(a, a) is None
    assert first_mismatch(a, a + LaurentPoly.var(X(2))) == ("x2", 0, 1)
    s = HalfSeries({0: 1, 3: 2}, 4)
    assert first_mismatch(s, s + HalfSeries({3: 1}, 4)) == ("q^3/2", 2, 3)
    assert first_mismatch({"a": 1}, {"a": 2}) == ("a", 1, 2)
    assert first_mismatch(3, 4) == ("value", 3, 4)


def test_run_check_stops_at_first_mismatch():
    cases = iter([("one", 1, 1), ("two", 2, 3), ("three", 3, 4)])
    rep = run_check("demo", {}, cases)
    assert rep.status == "fail"
    assert rep.checks == 2
    assert rep.first_mismatch["case"] == "two"


def test_zero_budgets_pass():
    reports = verify_all(0, 0)
    assert [r.identity_name for r in reports] == list(IDENTITIES)
    assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]


def test_perturbation_gives_exactly_one_failure():
    reports = verify_all(1, 1, perturb="q-identity")
    failed = [r for r in reports if not r.passed]
    assert [r.identity_name for r in failed] == ["q-identity"]
    mm = failed[0].first_mismatch
    assert mm["case"] == "lambda=-3"
    assert mm["at"] == "q^0"
    assert int(mm["actual"]) == int(mm["expected"]) + 1


def test_unknown_identity_and_bad_budget():
    with pytest.raises(KeyError):
        verify_identity("nope")
    with pytest.raises(ValueError):
        verify_identity("lr", -1, 1)


def test_fraction_parameters_serialize():
    rep = verify_identity("q-identity", Fraction(3, 2), 1, lam=0)
    assert rep.parameters["order"] == "3/2"
    json.loads(rep.to_json())

import json
from fractions import Fraction

import pytest

import verlinde as v


def test_root_system_data():
    e8 = v.build_root_system("E8")
    assert e8.rank == 8
    assert e8.connection_index == 1
    assert e8.dual_coxeter_number == 30
    assert all(check["passed"] for check in v.validate(e8))
    a1 = v.build_root_system("A1")
    assert v.gram(a1) == [[Fraction(1, 2)]]
    assert v.inner_product(a1, [1], [3]) == Fraction(3, 2)
    assert v.theta_level(a1, [5]) == 5


def test_enumeration_and_profile():
    a2 = v.build_root_system("A2")
    assert v.enumerate_regular_weights(a2, 3) == [(1, 1)]
    assert v.count_regular_weights(a2, 4) == 3
    profile = v.completion_profile(v.build_root_system("A1"), 6)
    assert profile["counts"] == {"2": 1, "3": 1}
    assert profile["unclassified"] == 3
    assert v.candidate_primes(a2, 10) == [2, 3, 5]


def test_phases_and_classification():
    a1 = v.build_root_system("A1")
    assert v.phi_phase(a1, [2], 4, [1]) == Fraction(1, 4)
    assert v.denominator_profile(a1, [1], 6) == 12
    assert v.classify(8) == ("prime_power", 2, 3)
    assert v.classify(12) == ("mixed",)
    with pytest.raises(v.InvariantViolation):
        v.denominator_profile(a1, [0], 4)


def test_counters():
    assert v.count("C2", 4, 2) == 3
    assert v.count("E6", 16, 2) == 14
    assert v.count("E6", 16, 2, reading="alternate") == 42
    assert v.decompose_level(24, 2, 4) == {"prime": 2, "i": 3, "m_prime": 3, "ell": 2, "n_plus_1_prime": 1}
    with pytest.raises(ValueError):
        v.count("A2", 6, 6)


def test_verify_and_cli():
    report = v.verify(["A1", "B2", "G2"], 1, 10)
    assert report["exit_code"] == 0
    assert report["summary"]["mismatches"] == 0
    flagged = v.verify(["E7"], 19, 19, reading="alternate")
    assert flagged["exit_code"] == 2
    assert v.verify(["E7"], 19, 19, reading="alternate", allow_flagged=True)["exit_code"] == 0

    code, out, err = v.run_cli(["enumerate", "--type", "A2", "--level", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["weights"] == [[1, 1]]
    code, _, err = v.run_cli(["count", "--type", "A1", "--level", "4"])
    assert code == 1
    assert err

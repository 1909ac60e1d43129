import json

import pytest

import foxabf


def test_wheel_groups():
    listed = ["Z_5", "Z_4 + Z_4", "Z_15 + Z_3", "Z_11 + Z_11", "Z_40 + Z_8", "Z_29 + Z_29"]
    got = [foxabf.coloring_group(foxabf.wheel_braid(n))["display"] for n in range(2, 8)]
    assert got == listed


def test_braid_inputs():
    as_text = foxabf.coloring_group("1 -2 1 -2 1 -2")
    as_list = foxabf.coloring_group([1, -2, 1, -2, 1, -2])
    assert as_text == as_list
    assert as_text["torsion"] == [4, 4]
    assert as_text["determinant"] == 16
    assert foxabf.coloring_group("", strands=1)["determinant"] == 1


def test_big_integers_are_python_ints():
    assert foxabf.fib(300) == 222232244629420445529739893461909967206666939096499764990979600
    group = foxabf.fox_closed_form(200)
    assert group["torsion"][1] == 5 * foxabf.fib(200)


def test_alexander_and_module():
    assert foxabf.alexander_polynomial("1 -2 1 -2") == "1-3*t+t^2"
    assert foxabf.alexander_polynomial("1 -1") == "0"
    module = foxabf.wheel_module(5)
    assert module["ideal_gens"] == ("1-3*t+3*t^2-3*t^3+t^4", "1-3*t+3*t^2-3*t^3+t^4")


def test_cross_verify():
    report = foxabf.cross_verify(6, [2, 5, 8])
    assert report["all_consistent"]
    assert [c[1] == c[2] for c in report["brute_force_checks"]] == [True, True, True]


def test_errors():
    with pytest.raises(foxabf.ParseError):
        foxabf.parse_braid("1 0")
    with pytest.raises(ValueError):
        foxabf.fox_closed_form(0)


def test_braid_word_class():
    w = foxabf.wheel_braid(2)
    assert w.strands == 3
    assert w.letters == [1, -2, 1, -2]
    assert str(w.inverse()) == "2 -1 2 -1"
    assert len(w * w) == 8


def test_cli_in_process():
    code, out, _ = foxabf.run_cli(["wheel", "4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["consistency"] is True
    assert doc["results"]["closed_form_group"]["torsion"] == ["3", "15"]
    assert foxabf.run_cli(["colorgroup", "1 0"])[0] == 2


def test_identity_suite():
    assert all(check["passed"] for check in foxabf.identity_suite(15))

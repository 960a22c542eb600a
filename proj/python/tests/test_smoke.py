import json
from fractions import Fraction

import pytest

import loccalc


def test_cp2():
    assert loccalc.grassmann(3, 1, [2]) == Fraction(1)


def test_grassmannian_matches_oracle():
    for m in ([4, 0], [2, 1], [0, 2]):
        assert loccalc.grassmann(4, 2, m) == loccalc.chern_number_oracle(m, 4, 2)
    assert loccalc.grassmann(4, 2, [2, 1], evaluation=True) == 1


def test_over_degree_is_polynomial():
    assert loccalc.grassmann(3, 1, [3]) == "u1 + u2 + u3"


def test_flag_integral():
    assert loccalc.flag_integral("A", 1, "y1") == 1
    assert loccalc.flag_integral("A", 2, "(y1-y2)*(y1-y3)*(y2-y3)") == 6
    assert loccalc.flag_integral("A", 1, "y1", negated_roots=True) == -1


def test_euler_characteristic():
    assert loccalc.euler_characteristic("B", 3) == 48
    assert loccalc.euler_characteristic("A", 4, evaluation=True) == 120


def test_gysin():
    assert loccalc.gysin_flag(2, "a1^3") == ("a1^2 + a1*a2 + a2^2", "e1^2 - e2")
    assert loccalc.gysin_flag(3, "a1^2*a2") == ("1", "1")


def test_parser():
    assert loccalc.parse("y1^2*y2 - 3*y3") == "Sub(Mul(Pow(y1,2),y2),Mul(3,y3))"
    assert loccalc.expand("(u1+u2)^2", 2) == "u1^2 + 2*u1*u2 + u2^2"
    with pytest.raises(loccalc.ParseError):
        loccalc.parse("y1^y2")
    with pytest.raises(loccalc.LoccalcError):
        loccalc.euler_characteristic("D", 1)


def test_run_cli():
    status, out = loccalc.run_cli(["euler-char", "--type", "A", "--rank", "2"])
    assert status == 0
    assert json.loads(out)["value"] == "6"
    status, out = loccalc.run_cli(["flag-integral", "--type", "A", "--rank", "1", "--poly", "y1^y2"])
    assert status == 2
    assert json.loads(out)["error"]["position"] == 3

from fractions import Fraction

import pytest

import pfpos

ORDER3 = """
p3 = 2n+13
p2 = -(5n+22)
p1 = 3n+20
p0 = -(2n+7)
init = 1, 1, 1
"""

MU = '{"coeffs": [["-2", "-1"], ["12", "5"], ["-13", "-5"], ["3", "1"]], "init": ["1", "1/4", "1/10"]}'


def test_parse_and_terms():
    s = pfpos.parse_spec(ORDER3)
    assert s.order == 3
    assert s.initial_values == ["1", "1", "1"]
    assert pfpos.term(s, 3) == Fraction(9, 13)
    assert pfpos.term(s, 4) == Fraction(61, 195)
    assert pfpos.term(pfpos.parse_spec(MU), 4) == Fraction(17, 80)
    again = pfpos.parse_spec(s.to_text())
    assert again.to_json() == s.to_json()


def test_prove():
    v = pfpos.prove(pfpos.parse_spec(ORDER3), "gk")
    assert v["status"] == "True"
    assert v["verified"]
    assert v["certificate"]["rho"] == 6

    v = pfpos.prove(pfpos.parse_spec(MU), "mu")
    assert v["status"] == "True"
    assert v["certificate"]["n"] == 3

    v = pfpos.prove(pfpos.remark_spec("1/2", 6))
    assert v["status"] == "False"
    assert v["witness"]["n"] == 6


def test_classify():
    r = pfpos.classify(pfpos.parse_spec(ORDER3))
    assert r["region"] == "length4"


def test_region():
    assert pfpos.cfinite_phi(Fraction(1, 2), Fraction(1, 4), 3)
    assert not pfpos.cfinite_phi("-1/4", "1/8", 3)
    assert pfpos.cfinite_phi("-1/4", "1/8", 4)
    rows = pfpos.map_region(Fraction(1, 4), 5)
    row = next(r for r in rows if r["u"] == Fraction(1, 2) and r["v"] == Fraction(1, 4))
    assert row["min_rho"] == 3
    assert pfpos.coverage_fraction("1/4") == Fraction(48, 49)


def test_errors():
    with pytest.raises(pfpos.ParseError):
        pfpos.parse_spec("p1 = 1\np0 = n +\ninit = 1")
    with pytest.raises(ValueError):
        pfpos.cfinite_phi(0, 1, 3)
    with pytest.raises(ValueError):
        pfpos.prove(pfpos.parse_spec("p1 = n-2\np0 = 1\ninit = 1"))

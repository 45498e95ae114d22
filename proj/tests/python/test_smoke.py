from fractions import Fraction

import pytest

import g2orbits


def test_named_classifications():
    assert g2orbits.classify([0, 0, 0])["orbit_type"] == "FULL"
    assert g2orbits.classify([1, 2, -3])["orbit_type"] == "TORUS"
    short = g2orbits.classify(["1", "0", "-1"])
    assert short["stabilizer_dim"] == 4
    assert short["orbit_type"] == "DIM4_SHORT"
    assert short["structure"] == {"dim": 4, "derived_dim": 3, "center_dim": 1}
    assert g2orbits.classify([Fraction(-1, 2), Fraction(1, 4), Fraction(1, 4)])["orbit_type"] == "DIM4_LONG"


def test_projection_and_convention():
    r = g2orbits.classify([2, 2, -1], project=True, convention="short=u1xsp1")
    assert r["tau"] == ["1", "1", "-2"]
    assert r["orbit_label"] == "G2/((Sp(1)xU(1))/Z2)"


def test_errors():
    with pytest.raises(g2orbits.G2Error, match="SUM_NONZERO"):
        g2orbits.classify([1, 1, 1])
    with pytest.raises(ValueError):
        g2orbits.classify([1, 0, -1], convention="bogus")
    with pytest.raises(g2orbits.G2Error):
        g2orbits.scan(0)
    with pytest.raises(TypeError):
        g2orbits.classify([1.5, 0, -1.5])


def test_scan_census():
    c = g2orbits.scan(3)
    assert c["only_expected_dims"]
    assert sum(c["counts"].values()) == c["points"] == 37
    assert c["counts"]["FULL"] == 1
    assert g2orbits.scan(1, format="csv").splitlines()[0] == "tau1,tau2,tau3,stabilizer_dim,orbit_type"


def test_algebra():
    e = [[int(i == j) for j in range(8)] for i in range(8)]
    assert g2orbits.oct_mul(e[1], e[2]) == [Fraction(int(i == 3)) for i in range(8)]
    assert g2orbits.multiplication_table()["products"][4][4] == "-e0"
    assert g2orbits.derivations()["dimension"] == 14
    lengths = [r["length_class"] for r in g2orbits.roots()["roots"]]
    assert lengths.count("short") == lengths.count("long") == 6
    assert g2orbits.fixed_subalgebra_structure("gamma")["dim"] == 6
    assert g2orbits.annihilator_structure(e[1])["dim"] == 8


def test_cli_passthrough():
    code, out, _ = g2orbits.run_cli(["classify", "--tau", "1,0,-1", "--json"])
    assert code == 0 and "DIM4_SHORT" in out

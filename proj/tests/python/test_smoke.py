"""Smoke tests of the python bindings."""

import rescalc


def test_root_system_summary():
    rs = rescalc.root_system("G2")
    assert len(rs["positive_roots"]) == 6
    assert rs["weyl_order"] == 12
    assert rescalc.weyl_order("A", 3) == 24


def test_mu_value():
    exact, numeric = rescalc.mu_value("A", 1, "1", "", ["1/2"], ["0"], 2.0)
    assert abs(numeric - 4.0 / 9.0) < 1e-12
    assert "q" in exact or "/" in exact


def test_residual_classification():
    reports = rescalc.residual("G2")
    orbits = {
        r["orbit"]
        for r in reports
        if r["residual"] and r["codim"] == 2 and r["coset"]["dim"] == 0
    }
    assert len(orbits) == 4
    # every full-rank residual orbit carries a nonzero nonvanishing sum
    for r in reports:
        if r["residual"] and r["coset"]["dim"] == 0 and r["orbit_representative"]:
            v = complex(*r["opdam_numeric"])
            assert abs(v) > 1e-12


def test_decompose_structure():
    dec = rescalc.decompose("G2")
    assert len(dec["decomposition"]["terms"]) == 16
    assert len(dec["grouped"]["rows"]) == 7


def test_verify_identity():
    rep = rescalc.verify("A", 2, grid=128)
    assert rep["pass"]

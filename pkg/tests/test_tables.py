import pytest

from nilorb.errors import ParameterUnavailableError
from nilorb.qpoly import QPoly, parse
from nilorb.sweeps import expected_orbit_size, lie
from nilorb.tables import (
    field_parameters,
    group_order,
    mass_check,
    mass_sum,
    materialize_rep,
    row_by_label,
    table,
)


def test_row_counts():
    assert len(table("G2")) == 7
    # the published table has 26 rows (18 orbits, five of which split)
    assert len(table("F4")) == 26


def test_row_spot_checks():
    assert row_by_label("G2", "2,1").centralizer == parse("6*q^4")
    assert row_by_label("G2", "2,1").orbit == "G2(a1)"
    assert row_by_label("F4", "17").centralizer == parse("q^24*(q^2-1)*(q^4-1)*(q^6-1)")
    assert row_by_label("F4", "6,5").rep[-1] == ("pq2r2s", "varpi")
    assert group_order("G2") == parse("q^6*(q^2-1)*(q^6-1)")


def test_mass_identities():
    ok, rep = mass_check("G2")
    assert ok and rep["sum"] == "q^12"
    ok, rep = mass_check("F4")
    assert ok and rep["sum"] == "q^48"


def test_g2a1_reciprocals():
    # 1/6 + 1/3 + 1/2 = 1: the three G2(a1) rows contribute |G|/q^4 in total
    rows = [r for r in table("G2") if r.orbit == "G2(a1)"]
    total = mass_sum(rows, group_order("G2"))
    assert total == group_order("G2") / parse("q^4")


def test_singleton_mass():
    zero = [r for r in table("F4") if not r.rep]
    assert mass_sum(zero, group_order("F4")) == QPoly.const(1)


def test_field_parameters():
    assert field_parameters(3)["zeta"] == 2
    assert "varpi" not in field_parameters(3)  # x -> x^3 + x is onto F_3
    assert field_parameters(2)["eta"] == 1
    assert field_parameters(4)["eta"] in (2, 3)


def test_materialize():
    coords = materialize_rep(row_by_label("G2", "2,3"), 3, lie("G2"))
    assert sum(1 for c in coords if c) == 2
    assert 1 in coords  # -zeta = -2 = 1 mod 3
    with pytest.raises(ParameterUnavailableError):
        materialize_rep(row_by_label("G2", "2,2"), 3, lie("G2"))
    coords = materialize_rep(row_by_label("F4", "2,2"), 2, lie("F4"))
    assert sum(coords) == 5  # eta = 1 over F_2


def test_expected_orbit_sizes():
    assert expected_orbit_size("G2", "1", 3) == 471744
    assert expected_orbit_size("F4", "17", 2) == 69615
    assert expected_orbit_size("F4", "16,1", 2) == 2506140
    assert expected_orbit_size("F4", "16,2", 2) == 1949220


def test_reps_supported_on_positive_roots():
    for group in ("G2", "F4"):
        rep = lie(group)
        names = {rep.rs.name_of(r) for r in rep.rs.positive}
        for row in table(group):
            for root_name, _tok in row.rep:
                assert root_name in names

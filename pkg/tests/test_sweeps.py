import pytest

from nilorb import _kernels
from nilorb.sweeps import (
    coadjoint_generators,
    expected_orbit_size,
    lie,
    nilpotent_sweep_g2,
    orbit_bfs,
    orbit_bfs_row,
)


def test_zero_orbit_is_fixed():
    for group, q in (("G2", 3), ("F4", 2)):
        res = orbit_bfs(group, q, [0] * lie(group).dim)
        assert res.size == 1 and not res.capped


def test_g2_small_orbits():
    assert orbit_bfs_row("G2", "4", 3).size == 728
    assert orbit_bfs_row("G2", "3", 3).size == 6552


def test_g2_regular_orbit():
    assert orbit_bfs_row("G2", "1", 3).size == 471744


def test_cap_flagging():
    res = orbit_bfs_row("G2", "1", 3, cap=1000)
    assert res.capped and res.size > 1000


def test_disjointness_shared_visited():
    shared = _kernels.shared_visited(1 << 16)
    a = orbit_bfs_row("G2", "4", 3, visited=shared)
    b = orbit_bfs_row("G2", "3", 3, visited=shared)
    again = orbit_bfs_row("G2", "4", 3, visited=shared)
    assert a.size == 728 and b.size == 6552
    assert again.size == 0  # start already visited: orbits are not disjoint


def test_census_g2():
    c = nilpotent_sweep_g2(3)
    labels = ("1", "2,1", "2,2", "2,3", "3", "4", "5")
    expected = sorted((expected_orbit_size("G2", l, 3) for l in labels), reverse=True)
    assert c["orbit_sizes"] == expected
    assert c["total"] == 3**12
    assert c["multiplicity"][1] == 1


def test_f4_spot_small():
    assert orbit_bfs_row("F4", "17", 2).size == expected_orbit_size("F4", "17", 2)


def test_g2_nonsplit_reps_disjoint_and_exact():
    # rows away from the split G2(a1) family are rigid: their representatives
    # realize the stated size at q = 3 and the orbits are pairwise disjoint
    shared = _kernels.shared_visited(1 << 20)
    for label in ("1", "3", "4", "5"):
        res = orbit_bfs_row("G2", label, 3, visited=shared)
        assert res.size == expected_orbit_size("G2", label, 3), label


def test_g2a1_family_at_q3():
    # the table's G2(a1) parameters presume generic q: over F_3 both available
    # representatives land in the 2q^4 class, and the 6q^4 and 3q^4 classes
    # are identified by the census sizes instead
    family = {expected_orbit_size("G2", l, 3) for l in ("2,1", "2,2", "2,3")}
    assert family == {8736, 17472, 26208}
    shared = _kernels.shared_visited(1 << 20)
    first = orbit_bfs_row("G2", "2,1", 3, visited=shared)
    assert first.size in family
    again = orbit_bfs_row("G2", "2,3", 3, visited=shared)
    assert again.size == 0 or again.size in family
    census = nilpotent_sweep_g2(3)
    for size in family:
        assert census["multiplicity"][size] == 1


def test_generator_count():
    assert len(coadjoint_generators("G2", 3)) == 2 * 2 * 2
    assert len(coadjoint_generators("F4", 2)) == 4 * 2 * 1


def test_wrong_field_rejected():
    with pytest.raises(ValueError):
        orbit_bfs("G2", 2, [0] * 14)

"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its elapsed time.  Run with `pytest tests/test_acceptance.py -v -s`."""

import resource
import time

from nilorb import _kernels
from nilorb.closure import (
    assert_covers_decrease_centralizer,
    assert_partial_order,
    leq_matrix,
)
from nilorb.oracle import canonical_filtration, classify_all, representative_from_symbol
from nilorb.partitions import bipartitions_of, in_family
from nilorb.pieces import ms_pieces, piece_report, upsilon
from nilorb.springer import UnipotentClass, psi_star
from nilorb.symbols import SymbolB, enumerate_symbols
from nilorb.tables import mass_check
from nilorb.sweeps import expected_orbit_size, nilpotent_sweep_g2, orbit_bfs_row


class Budget:
    def __init__(self, criterion: str, seconds: float):
        self.criterion = criterion
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.monotonic() - self.t0
        if exc_type is None:
            status = "PASS" if dt <= self.seconds else "FAIL (over budget)"
            print(f"{status}: criterion {self.criterion} ({dt:.1f}s of {self.seconds:.0f}s)")
            assert dt <= self.seconds, f"criterion {self.criterion} exceeded {self.seconds}s"
        else:
            print(f"FAIL: criterion {self.criterion} ({dt:.1f}s): {exc}")
        return False


def test_criterion_1_census_vs_oracle():
    with Budget("1 (orbit census vs oracle)", 120):
        for n in (1, 2, 3):
            assert set(classify_all("C", n)) == set(enumerate_symbols("C", n))
            assert set(classify_all("B", n)) == set(enumerate_symbols("B", n))
        for n in (2, 3):
            got = set(classify_all("D", n))
            want = {(s.lam, s.chi) for s in enumerate_symbols("D", n)}
            assert got == want


def test_criterion_2_q2n_counts():
    with Budget("2 (q^{2N} nilpotent counts)", 120):
        totals = [sum(classify_all("C", n).values()) for n in (1, 2, 3)]
        assert totals == [4, 256, 262144]


def test_criterion_3_springer_bijectivity():
    with Budget("3 (Springer bijectivity)", 60):
        for type_, fam in (("B", "XB2"), ("C", "XC2")):
            for n in range(9):
                members = sum(1 for t in bipartitions_of(n) if in_family(t, fam))
                assert len(enumerate_symbols(type_, n)) == members


def test_criterion_4_closure_order():
    with Budget("4 (closure-order sanity)", 60):
        for type_ in ("B", "C", "D"):
            for n in range(7):
                symbols = enumerate_symbols(type_, n)
                assert_partial_order(symbols, leq_matrix(symbols))
        for type_ in ("B", "C"):
            for n in range(7):
                assert_covers_decrease_centralizer(type_, n)


def test_criterion_5_piece_coincidence():
    with Budget("5 (piece coincidence)", 120):
        for type_ in ("B", "C"):
            for n in range(9):
                rep = piece_report(type_, n, with_ms=(n <= 6))
                assert rep.agree, rep.disagreements
        witness = [b for b in ms_pieces("B", 3) if len(b) > 1]
        assert len(witness) == 1
        assert set(witness[0]) == {SymbolB(1, (2, 2), (2,)), SymbolB(0, (3, 3), (3,))}
        assert {psi_star(s) for s in witness[0]} == {UnipotentClass("B", (3, 3, 1))}


def test_criterion_6_filtration_oracle():
    with Budget("6 (filtration oracle agreement)", 60):
        for type_ in ("B", "C"):
            for n in range(4):
                for s in enumerate_symbols(type_, n):
                    space = representative_from_symbol(s)
                    assert canonical_filtration(space) == upsilon(s), s


def test_criterion_7_mass_identities():
    with Budget("7 (mass identities)", 1):
        ok, report = mass_check("G2")
        assert ok and report["sum"] == "q^12" and report["rows"] == 7
        ok, report = mass_check("F4")
        assert ok and report["sum"] == "q^48" and report["rows"] == 26


def test_criterion_8_g2_census():
    with Budget("8 (G2(F_3) full census)", 300):
        census = nilpotent_sweep_g2(3)
        assert census["orbit_sizes"] == [471744, 26208, 17472, 8736, 6552, 728, 1]
        assert census["total"] == 531441 == 3**12
        peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        assert peak_kb < 1024 * 1024, f"peak memory {peak_kb} kB exceeds 1 GB"


def test_criterion_9_f4_spot_bfs():
    with Budget("9 (F4(F_2) spot BFS)", 600):
        shared = _kernels.shared_visited(6_000_000)
        sizes = {}
        for label in ("17", "16,1", "16,2"):
            res = orbit_bfs_row("F4", label, 2, visited=shared)
            assert not res.capped
            sizes[label] = res.size
        assert sizes == {"17": 69615, "16,1": 2506140, "16,2": 1949220}
        for label in sizes:
            assert sizes[label] == expected_orbit_size("F4", label, 2)


def test_criterion_10_chevalley_self_checks():
    with Budget("10 (Chevalley self-checks)", 60):
        from nilorb.chevalley import (
            build_lie,
            check_coadjoint_formula,
            check_jacobi,
            check_listed_constants,
            check_one_param_additivity,
        )

        for group, q in (("G2p3", 3), ("F4p2", 2)):
            rep = build_lie(group)
            check_listed_constants(rep)
            check_jacobi(rep)
            check_coadjoint_formula(rep, q)
            check_one_param_additivity(rep, q)

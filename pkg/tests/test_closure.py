import itertools

import pytest

from nilorb.closure import (
    assert_covers_decrease_centralizer,
    assert_partial_order,
    closure_extremes,
    closure_leq,
    hasse,
    induce_orbit,
    leq_matrix,
)
from nilorb.errors import RankMismatchError
from nilorb.partitions import j_induct
from nilorb.springer import gamma_star
from nilorb.symbols import SymbolC, SymbolD, enumerate_symbols, zero_symbol


def test_closure_examples():
    a, b = SymbolC((1, 1), (0,)), SymbolC((1, 1), (1,))
    assert closure_leq(a, b) and not closure_leq(b, a)
    assert closure_leq(a, a)
    d1 = SymbolD((2, 2), (1,), "I")
    d2 = SymbolD((2, 2), (1,), "II")
    assert not closure_leq(d1, d2) and not closure_leq(d2, d1)
    assert closure_leq(d1, d1)
    with pytest.raises(RankMismatchError):
        closure_leq(a, zero_symbol("C", 2))
    with pytest.raises(RankMismatchError):
        closure_leq(a, zero_symbol("B", 1))


def test_d_degenerate_pair_in_poset():
    # degenerate pairs need all parts even, so they live in even total: D2, D4
    for n in (2, 4):
        dn = enumerate_symbols("D", n)
        leq = leq_matrix(dn)
        assert_partial_order(dn, leq)
        # both labels compare identically against everything else
        pairs = [
            (i, j)
            for i, a in enumerate(dn)
            for j, b in enumerate(dn)
            if (a.lam, a.chi) == (b.lam, b.chi) and a.label == "I" and b.label == "II"
        ]
        assert pairs
        for i, j in pairs:
            for k in range(len(dn)):
                if k in (i, j):
                    continue
                assert leq[i][k] == leq[j][k] and leq[k][i] == leq[k][j]


def test_hasse_examples():
    assert hasse("C", 0) == []
    c1 = hasse("C", 1)
    assert c1 == [(SymbolC((1, 1), (0,)), SymbolC((1, 1), (1,)))]
    b2 = hasse("B", 2)
    assert len(b2) == 3  # a 4-element chain
    symbols = enumerate_symbols("B", 2)
    leq = leq_matrix(symbols)
    assert all(leq[i][j] or leq[j][i] for i in range(4) for j in range(4))


def test_partial_order_and_covers():
    for t in ("B", "C", "D"):
        for n in range(5):
            assert_partial_order(enumerate_symbols(t, n))
    for t in ("B", "C"):
        for n in range(5):
            assert_covers_decrease_centralizer(t, n)


def test_zero_is_unique_minimum():
    for t in ("B", "C"):
        for n in range(6):
            mins, maxs = closure_extremes(t, n)
            assert mins == [zero_symbol(t, n)]
            assert len(maxs) == 1  # the regular orbit


def test_induce_examples():
    got = induce_orbit(SymbolC((), ()), 2)
    assert got == SymbolC((2, 2), (1,))
    for a in enumerate_symbols("C", 2):
        assert gamma_star(induce_orbit(a, 1)) == j_induct(gamma_star(a), 1)
    got = induce_orbit(zero_symbol("B", 1), 1)
    assert gamma_star(got) == j_induct(gamma_star(zero_symbol("B", 1)), 1)


def test_induce_preserves_order():
    for t in ("B", "C"):
        for n in range(4):
            symbols = enumerate_symbols(t, n)
            for k in range(1, 4):
                for a, b in itertools.product(symbols, symbols):
                    assert closure_leq(a, b) == closure_leq(induce_orbit(a, k), induce_orbit(b, k))

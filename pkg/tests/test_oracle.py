import pytest

from nilorb.errors import NotNilpotentError
from nilorb.gf2 import QuadForm
from nilorb.oracle import (
    OddSpace,
    SpSpace,
    canonical_filtration,
    classify_all,
    even_space_from_index,
    form_count,
    invariant_of_index,
    invariants_so_even,
    invariants_so_odd,
    invariants_sp,
    odd_space_from_index,
    representative_from_symbol,
    standard_odd_q,
    standard_sp_gram,
)
from nilorb.pieces import upsilon
from nilorb.symbols import SymbolB, SymbolC, enumerate_symbols, zero_symbol


def test_invariants_sp_dim2():
    gram = standard_sp_gram(1)
    # zero form
    assert invariants_sp(SpSpace(2, gram, QuadForm(2, 0, [0, 0]))) == SymbolC((1, 1), (0,))
    # alpha(x, y) = x^2: T = 0, alpha != 0
    assert invariants_sp(SpSpace(2, gram, QuadForm(2, 1, [0, 0]))) == SymbolC((1, 1), (1,))
    # alpha = xy polarizes to the symplectic form itself: T invertible
    with pytest.raises(NotNilpotentError):
        invariants_sp(SpSpace(2, gram, QuadForm(2, 0, [2, 0])))


def test_invariants_odd_dim3():
    # beta_xi = 0
    assert invariants_so_odd(OddSpace(3, standard_odd_q(1), [0, 0, 0])) == SymbolB(
        0, (1, 1), (1,)
    )
    # beta_xi of rank 2 pairing e1 with the radical e2: the regular orbit (1; ())
    bxi = QuadForm(3, 0, [0, 4, 0]).bcols
    assert invariants_so_odd(OddSpace(3, standard_odd_q(1), bxi)) == SymbolB(1, (), ())
    # beta_xi = beta on the hyperbolic plane makes T invertible on W
    with pytest.raises(NotNilpotentError):
        invariants_so_odd(OddSpace(3, standard_odd_q(1), QuadForm(3, 0, [2, 0, 0]).bcols))


def test_classify_examples():
    c1 = classify_all("C", 1)
    assert c1 == {SymbolC((1, 1), (0,)): 1, SymbolC((1, 1), (1,)): 3}
    assert sum(c1.values()) == 4  # = 2^{2N}, N = 1
    b1 = classify_all("B", 1)
    assert b1 == {zero_symbol("B", 1): 1, SymbolB(1, (), ()): 3}
    assert sum(classify_all("C", 2).values()) == 256


def test_classify_counts_and_keys():
    for t in ("B", "C", "D"):
        for n in range(3):
            counts = classify_all(t, n)
            if t == "D":
                expected = 1 << (2 * n * (n - 1))
                keys = {(s.lam, s.chi) for s in enumerate_symbols(t, n)}
            else:
                expected = 1 << (2 * n * n)
                keys = set(enumerate_symbols(t, n))
            assert sum(counts.values()) == expected
            assert set(counts) == keys


def test_even_oracle_spot():
    # zero form on F_2^4
    lam, chi = invariants_so_even(even_space_from_index(2, 0))
    assert (lam, chi) == ((1, 1, 1, 1), (1,))


def test_representatives_roundtrip():
    for t in ("C", "B"):
        for n in range(4 if t == "C" else 4):
            for s in enumerate_symbols(t, n):
                representative_from_symbol(s)  # self-certifying: asserts internally


def test_filtration_matches_upsilon():
    for t in ("B", "C"):
        for n in range(4):
            for s in enumerate_symbols(t, n):
                space = representative_from_symbol(s)
                assert canonical_filtration(space) == upsilon(s), s


def test_filtration_examples():
    assert canonical_filtration(representative_from_symbol(SymbolC((2, 2), (2,)))) == (0, 1, 0, 1)
    assert canonical_filtration(representative_from_symbol(zero_symbol("C", 3))) == (6,)
    assert canonical_filtration(representative_from_symbol(SymbolB(1, (), ()))) == (1, 0, 1)


def test_choice_invariance():
    # the (m; (lambda, chi)) datum must not depend on u0 / W choices
    n = 2
    count = form_count("B", n)
    for idx in range(0, count, 17):
        space = odd_space_from_index(n, idx)
        try:
            base = invariants_so_odd(space)
        except NotNilpotentError:
            continue
        for skip, twist in ((1, 0), (0, 1), (0, 7), (3, 2)):
            try:
                alt = invariants_so_odd(space, u0_skip=skip, w_twist=twist)
            except NotNilpotentError:
                continue
            assert alt == base


def test_generic_vs_kernel_per_form():
    # the generic definitions and the sweep kernel agree form by form
    for t in ("C", "B", "D"):
        n = 1
        tally = {}
        for idx in range(form_count(t, n)):
            inv = invariant_of_index(t, n, idx)
            if inv is None:
                continue
            if t == "C":
                key = (inv.lam, inv.chi)
            elif t == "B":
                key = (inv.m, inv.lam, inv.chi)
            else:
                key = inv
            tally[key] = tally.get(key, 0) + 1
        from nilorb import _kernels

        assert tally == _kernels.sweep_forms(t, n)


def test_filtration_self_duality():
    # dim V_{>=a} + dim V_{>=1-a} = dim V is built into the layer sequence
    for t in ("B", "C"):
        for n in range(4):
            for s in enumerate_symbols(t, n):
                u = canonical_filtration(representative_from_symbol(s))
                assert u[0] + 2 * sum(u[1:]) == s.dim_v

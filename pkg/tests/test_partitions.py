import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilorb.errors import IncomparableSizeError
from nilorb.partitions import (
    Bipartition,
    bipartition,
    bipartition_leq,
    bipartitions_of,
    in_family,
    j_induct,
    multiplicity,
    normalize,
    partitions_of,
)


def brute_leq(a, b):
    # independent restatement: both prefix-sum chains dominate
    def part(p, i):
        return p[i - 1] if i <= len(p) else 0

    for j in range(1, 12):
        lhs = sum(part(a.mu, i) + part(a.nu, i) for i in range(1, j + 1))
        rhs = sum(part(b.mu, i) + part(b.nu, i) for i in range(1, j + 1))
        if lhs > rhs:
            return False
        lhs = lhs - part(a.nu, j)
        rhs = rhs - part(b.nu, j)
        if lhs > rhs:
            return False
    return True


def test_multiplicity_examples():
    assert multiplicity((2, 2), 2) == 2
    assert multiplicity((), 1) == 0
    assert multiplicity((3, 1, 1), 1) == 2
    assert multiplicity((3, 1, 1), 7) == 0


def test_partition_counts():
    # p(0..8) = 1 1 2 3 5 7 11 15 22
    assert [len(list(partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_bipartitions_count_and_determinism():
    b6 = list(bipartitions_of(6))
    assert len(b6) == sum(
        len(list(partitions_of(k))) * len(list(partitions_of(6 - k))) for k in range(7)
    )
    assert b6 == list(bipartitions_of(6))


def test_leq_examples():
    assert bipartition_leq(bipartition([], [1]), bipartition([1], []))
    assert bipartition_leq(bipartition([1], [1]), bipartition([1], [1]))
    assert bipartition_leq(bipartition([1, 1], []), bipartition([1], [1]))
    assert not bipartition_leq(bipartition([1], []), bipartition([], [1]))
    with pytest.raises(IncomparableSizeError):
        bipartition_leq(bipartition([1], []), bipartition([1], [1]))


def test_leq_matches_brute_force():
    for n in range(7):
        for a, b in itertools.product(bipartitions_of(n), repeat=2):
            assert bipartition_leq(a, b) == brute_leq(a, b), (a, b)


def test_partial_order_axioms():
    for n in range(9):
        bps = list(bipartitions_of(n))
        leq = {(a, b): bipartition_leq(a, b) for a in bps for b in bps}
        for a in bps:
            assert leq[a, a]
        for a, b in itertools.product(bps, repeat=2):
            if a != b and leq[a, b]:
                assert not leq[b, a], (a, b)
        for a, b in itertools.product(bps, repeat=2):
            if not leq[a, b]:
                continue
            for c in bps:
                if leq[b, c]:
                    assert leq[a, c], (a, b, c)


def test_j_induct_examples():
    assert j_induct(Bipartition((), ()), 1) == bipartition([1], [])
    assert j_induct(Bipartition((1,), ()), 2) == bipartition([2], [1])
    t = bipartition([1], [1])
    assert j_induct(j_induct(t, 2), 1) == j_induct(j_induct(t, 1), 2)


@settings(max_examples=200)
@given(
    st.lists(st.integers(1, 6), max_size=5),
    st.lists(st.integers(1, 6), max_size=5),
    st.integers(1, 5),
    st.integers(1, 5),
)
def test_j_induct_commutes(mu, nu, k, l):
    t = bipartition(mu, nu)
    assert j_induct(j_induct(t, k), l) == j_induct(j_induct(t, l), k)


def test_j_induct_injective_and_embedding():
    for n in range(7):
        bps = list(bipartitions_of(n))
        for k in range(1, 5):
            images = [j_induct(t, k) for t in bps]
            assert len(set(images)) == len(bps)
            assert all(im.total == n + k for im in images)
            for a, b in itertools.product(bps, repeat=2):
                assert bipartition_leq(a, b) == bipartition_leq(j_induct(a, k), j_induct(b, k))


def test_family_examples():
    # (1)(2) = gamma of ((3,3), chi=1): nu_1 = 2 <= mu_1 + 1 = 2, so a member
    assert in_family(bipartition([1], [2]), "XC2")
    assert not in_family(bipartition([1], [3]), "XC2")
    for fam in ("XC2", "XB2", "XC1", "XB1"):
        assert in_family(Bipartition((), ()), fam)
    assert not in_family(bipartition([3, 3], []), "XC1")  # nu_1 = 0 < mu_2 - 1


def test_family_nesting():
    for n in range(9):
        for t in bipartitions_of(n):
            if in_family(t, "XC1"):
                assert in_family(t, "XC2")
            if in_family(t, "XB1"):
                assert in_family(t, "XB2")


def test_normalize():
    assert normalize([0, 2, 1, 2]) == (2, 2, 1)
    assert normalize([]) == ()
    with pytest.raises(ValueError):
        normalize([-1])

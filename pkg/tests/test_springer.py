import pytest

from nilorb.errors import FamilyDomainError, NotInImageError, UnsupportedTypeError
from nilorb.partitions import Bipartition, bipartition, bipartition_leq, bipartitions_of, in_family
from nilorb.springer import (
    UnipotentClass,
    enumerate_unipotent,
    gamma_star,
    gamma_star_inv,
    phi,
    psi_star,
    unip_from_symbol,
    unipotent_valid,
)
from nilorb.symbols import SymbolB, SymbolC, enumerate_symbols, zero_symbol


def test_gamma_examples():
    assert gamma_star(SymbolC((2, 2), (1,))) == bipartition([1], [1])
    assert gamma_star(zero_symbol("C", 3)) == bipartition([], [1, 1, 1])
    assert gamma_star(SymbolB(3, (), ())) == bipartition([3], [])
    assert gamma_star(zero_symbol("B", 3)) == bipartition([], [1, 1, 1])


def test_gamma_inv_examples():
    assert gamma_star_inv(bipartition([1], [1]), "C", 2) == SymbolC((2, 2), (1,))
    assert gamma_star_inv(Bipartition((), ()), "C", 0) == SymbolC((), ())
    t = bipartition([1], [2])
    s = gamma_star_inv(t, "B", 3)
    assert gamma_star(s) == t
    with pytest.raises(NotInImageError):
        gamma_star_inv(bipartition([], [2]), "C", 2)  # nu_1 > mu_1 + 1
    with pytest.raises(NotInImageError):
        gamma_star_inv(bipartition([1], [1]), "C", 3)  # wrong total


def test_gamma_bijective_onto_family():
    for t, fam in (("B", "XB2"), ("C", "XC2")):
        for n in range(9):
            symbols = enumerate_symbols(t, n)
            images = {gamma_star(s) for s in symbols}
            assert len(images) == len(symbols)
            family = {bp for bp in bipartitions_of(n) if in_family(bp, fam)}
            assert images == family
            for s in symbols:
                assert gamma_star_inv(gamma_star(s), t, n) == s


def test_phi_examples():
    assert phi(bipartition([1], [4]), "B") == bipartition([2], [3])
    assert phi(bipartition([3, 3], []), "C") == bipartition([3, 2], [1])
    for n in range(7):
        for t in bipartitions_of(n):
            if in_family(t, "XC1"):
                assert phi(t, "C") == t
            if in_family(t, "XB1"):
                assert phi(t, "B") == t
    with pytest.raises(FamilyDomainError):
        phi(bipartition([], [2]), "C")
    with pytest.raises(UnsupportedTypeError):
        phi(bipartition([1], [1]), "D")


def test_phi_properties():
    for t, fam2 in (("B", "XB2"), ("C", "XC2")):
        for n in range(9):
            for bp in bipartitions_of(n):
                if not in_family(bp, fam2):
                    continue
                im = phi(bp, t)
                assert bipartition_leq(bp, im)
                assert phi(im, t) == im


def test_phi_monotone_hull():
    for t, fam2, fam1 in (("B", "XB2", "XB1"), ("C", "XC2", "XC1")):
        for n in range(7):
            members2 = [bp for bp in bipartitions_of(n) if in_family(bp, fam2)]
            members1 = [bp for bp in bipartitions_of(n) if in_family(bp, fam1)]
            for bp in members2:
                for up in members1:
                    if bipartition_leq(bp, up):
                        assert bipartition_leq(phi(bp, t), up)


def test_psi_examples():
    assert psi_star(SymbolC((2, 2), (2,))) == UnipotentClass("C", (4,))
    assert psi_star(SymbolB(1, (2, 2), (2,))) == UnipotentClass("B", (3, 3, 1))
    assert psi_star(SymbolB(0, (3, 3), (3,))) == UnipotentClass("B", (3, 3, 1))
    assert psi_star(SymbolB(2, (), ())) == UnipotentClass("B", (5,))
    assert psi_star(zero_symbol("C", 3)) == UnipotentClass("C", (1,) * 6)


def test_unip_from_symbol_examples():
    assert unip_from_symbol(bipartition([2], []), "C") == UnipotentClass("C", (4,))
    assert unip_from_symbol(bipartition([], [1, 1]), "C") == UnipotentClass("C", (1, 1, 1, 1))
    with pytest.raises(FamilyDomainError):
        unip_from_symbol(bipartition([3, 3], []), "C")


def test_enumerate_unipotent():
    assert {u.parts for u in enumerate_unipotent("C", 2)} == {
        (4,),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    }
    assert {u.parts for u in enumerate_unipotent("B", 1)} == {(3,), (1, 1, 1)}
    assert [u.parts for u in enumerate_unipotent("C", 0)] == [()]
    assert all(unipotent_valid(u) for n in range(7) for u in enumerate_unipotent("B", n))


def test_unip_bijection():
    for t, fam1 in (("B", "XB1"), ("C", "XC1")):
        for n in range(9):
            members = [bp for bp in bipartitions_of(n) if in_family(bp, fam1)]
            images = {unip_from_symbol(bp, t) for bp in members}
            assert len(images) == len(members)
            assert images == set(enumerate_unipotent(t, n))


def test_compatibility_psi_phi_gamma():
    for t in ("B", "C"):
        for n in range(9):
            for s in enumerate_symbols(t, n):
                assert unip_from_symbol(phi(gamma_star(s), t), t) == psi_star(s)

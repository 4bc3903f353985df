import json

import pytest

from nilorb.errors import InvalidSymbolError, UnsupportedTypeError
from nilorb.symbols import (
    SymbolB,
    SymbolC,
    SymbolD,
    centralizer_dim,
    chi_extend,
    chi_of,
    enumerate_symbols,
    from_json,
    is_zero_symbol,
    springer_fiber_dim,
    to_json,
    validate,
    zero_symbol,
)


def test_validate_examples():
    assert validate(SymbolC((2, 2), (2,)))
    assert not validate(SymbolC((2, 1, 1), (1, 1)))  # odd multiplicity of 2
    assert not validate(SymbolB(0, (3, 3), (2,)))  # m >= lam1 - chi(lam1) fails
    assert validate(SymbolB(0, (3, 3), (3,)))
    assert validate(SymbolB(1, (2, 2), (1,)))
    # chi bounds: type C allows chi(p) >= ceil((p-1)/2)
    assert validate(SymbolC((3, 3), (1,)))
    assert not validate(SymbolC((3, 3), (0,)))
    assert not validate(SymbolC((2, 2), (0,)))
    assert validate(SymbolC((2, 2, 1, 1), (1, 1)))
    # D labels exactly on fully degenerate chi
    assert validate(SymbolD((2, 2), (1,), "I"))
    assert validate(SymbolD((2, 2), (1,), "II"))
    assert not validate(SymbolD((2, 2), (1,), None))
    assert validate(SymbolD((2, 2), (2,), None))
    assert not validate(SymbolD((2, 2), (2,), "I"))


def test_chain_monotonicity():
    # chi(2)=2, chi(1)=1 has lam-chi = (0, 0): valid
    assert validate(SymbolC((2, 2, 1, 1), (2, 1)))
    # chi(2)=2, chi(1)=0: chi would drop by 2 while parts drop by 1: lam-chi = (0,1) increasing -> invalid
    assert not validate(SymbolC((2, 2, 1, 1), (2, 0)))


def test_enumerate_counts():
    assert [len(enumerate_symbols("C", n)) for n in range(4)] == [1, 2, 4, 8]
    assert len(enumerate_symbols("B", 3)) == 8
    assert len(enumerate_symbols("B", 2)) == 4
    assert len(enumerate_symbols("C", 0)) == 1
    sy = enumerate_symbols("C", 1)
    assert sy == [SymbolC((1, 1), (0,)), SymbolC((1, 1), (1,))]


def test_enumerate_d_split():
    d2 = enumerate_symbols("D", 2)
    labels = [(s.lam, s.chi, s.label) for s in d2]
    assert ((2, 2), (1,), "I") in labels and ((2, 2), (1,), "II") in labels
    assert ((2, 2), (2,), None) in labels
    assert all(validate(s) for s in d2)


def test_enumerate_deterministic_and_valid():
    for t in ("B", "C", "D"):
        for n in range(5):
            out = enumerate_symbols(t, n)
            assert out == enumerate_symbols(t, n)
            assert len(set(out)) == len(out)
            assert all(validate(s) for s in out)


def test_centralizer_examples():
    assert centralizer_dim(SymbolC((2, 2), (2,))) == 2
    n = 3
    assert centralizer_dim(zero_symbol("C", n)) == n * (2 * n + 1)
    assert centralizer_dim(SymbolB(3, (), ())) == 3
    assert centralizer_dim(zero_symbol("B", 4)) == 4 * 9
    with pytest.raises(UnsupportedTypeError):
        centralizer_dim(SymbolD((2, 2), (2,), None))


def test_springer_fiber_examples():
    assert springer_fiber_dim(SymbolC((2, 2), (2,))) == 0
    assert springer_fiber_dim(zero_symbol("C", 3)) == 9  # full flag variety
    assert springer_fiber_dim(SymbolB(3, (), ())) == 0


def test_fiber_dims_integral():
    for t in ("B", "C"):
        for n in range(9):
            for s in enumerate_symbols(t, n):
                d = centralizer_dim(s) - n
                assert d >= 0 and d % 2 == 0
                assert springer_fiber_dim(s) == d // 2


def test_chi_extend_examples():
    assert chi_extend(SymbolC((2, 2), (2,)), 1) == 1
    assert chi_extend(SymbolC((2, 2), (2,)), 0) == 0
    assert chi_extend(SymbolB(1, (2, 2), (1,)), 3) == 2
    assert chi_extend(SymbolB(1, (2, 2), (2,)), 1) == 1
    # on parts the stored value is reproduced
    for t in ("B", "C", "D"):
        for n in range(6):
            for s in enumerate_symbols(t, n):
                for p in sorted(set(s.lam)):
                    assert chi_extend(s, p) == chi_of(s, p)


def test_zero_symbols():
    assert zero_symbol("C", 2) == SymbolC((1, 1, 1, 1), (0,))
    assert zero_symbol("B", 2) == SymbolB(0, (1, 1, 1, 1), (1,))
    for t in ("B", "C", "D"):
        for n in range(5):
            z = zero_symbol(t, n)
            assert validate(z)
            assert is_zero_symbol(z)
            others = [s for s in enumerate_symbols(t, n) if is_zero_symbol(s)]
            assert others == [z]


def test_json_roundtrip():
    doc = to_json(SymbolC((2, 2), (2,)))
    assert doc == {"type": "C", "n": 2, "lambda": [2, 2], "chi": {"2": 2}}
    for t in ("B", "C", "D"):
        for n in range(5):
            for s in enumerate_symbols(t, n):
                back = from_json(json.loads(json.dumps(to_json(s))))
                assert back == s


def test_from_json_rejects_invalid():
    with pytest.raises(InvalidSymbolError):
        from_json({"type": "C", "lambda": [2, 1, 1], "chi": {"2": 1, "1": 1}})

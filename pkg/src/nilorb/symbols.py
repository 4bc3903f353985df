"""Orbit symbols for types B, C, D in characteristic 2: validity, enumeration,
dimension formulas.

A symbol stores chi only on the distinct parts of lambda (descending);
`chi_extend` supplies the value of the chi function at every other integer.
For type D the two SO-orbits over a fully degenerate pair (chi = lambda/2
everywhere) carry labels I and II, assigned in enumeration order; which label
matches which degenerate Weyl character is a fixed arbitrary convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import InvalidSymbolError, UnsupportedTypeError
from .partitions import multiplicity, normalize, partitions_of

TYPES = ("B", "C", "D")


@dataclass(frozen=True, order=True)
class SymbolC:
    lam: tuple[int, ...]
    chi: tuple[int, ...]  # values on distinct parts, descending

    type = "C"

    @property
    def n(self) -> int:
        return sum(self.lam) // 2

    @property
    def dim_v(self) -> int:
        return sum(self.lam)


@dataclass(frozen=True, order=True)
class SymbolB:
    m: int
    lam: tuple[int, ...]
    chi: tuple[int, ...]

    type = "B"

    @property
    def n(self) -> int:
        return self.m + sum(self.lam) // 2

    @property
    def dim_v(self) -> int:
        return 2 * self.n + 1


@dataclass(frozen=True, order=True)
class SymbolD:
    lam: tuple[int, ...]
    chi: tuple[int, ...]
    label: str | None = None  # "I" / "II" on the degenerate pairs, else None

    type = "D"

    @property
    def n(self) -> int:
        return sum(self.lam) // 2

    @property
    def dim_v(self) -> int:
        return sum(self.lam)


Symbol = Union[SymbolB, SymbolC, SymbolD]


def distinct_parts(lam: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(lam), reverse=True))


def chi_of(sym: Symbol, p: int) -> int:
    """Stored chi value at the distinct part p."""
    return sym.chi[distinct_parts(sym.lam).index(p)]


def _chi_pairs(sym: Symbol) -> list[tuple[int, int]]:
    return list(zip(distinct_parts(sym.lam), sym.chi))


def chi_extend(sym: Symbol, k: int) -> int:
    """chi(k) for any integer k >= 0.

    Each indecomposable summand (s, l) contributes max(0, min(k-s+l, l)); type
    B adds the skeleton term k-m.
    """
    val = 0
    if sym.type == "B":
        val = max(val, k - sym.m)
    for s, l in _chi_pairs(sym):
        val = max(val, min(k - s + l, l))
    return max(val, 0)


def _chain_ok(pairs: list[tuple[int, int]]) -> bool:
    """chi monotone and lambda-chi monotone along descending distinct parts."""
    for (s1, l1), (s2, l2) in zip(pairs, pairs[1:]):
        if l1 < l2 or s1 - l1 < s2 - l2:
            return False
    return True


def validate(sym: Symbol) -> bool:
    """True iff the symbol satisfies every defining constraint of its type."""
    lam, chi = sym.lam, sym.chi
    if not (isinstance(lam, tuple) and lam == normalize(lam)):
        return False
    dparts = distinct_parts(lam)
    if len(chi) != len(dparts):
        return False
    if any(multiplicity(lam, j) % 2 for j in dparts):
        return False
    pairs = list(zip(dparts, chi))
    if sym.type == "C":
        # (p-1)/2 <= chi(p) <= p
        if any(not (p - 1 <= 2 * l and l <= p) for p, l in pairs):
            return False
        return _chain_ok(pairs)
    if sym.type == "D":
        if any(not (p <= 2 * l and l <= p) for p, l in pairs):
            return False
        if not _chain_ok(pairs):
            return False
        degenerate = all(2 * l == p for p, l in pairs)
        if degenerate and lam:
            return sym.label in ("I", "II")
        return sym.label is None
    if sym.type == "B":
        if not isinstance(sym.m, int) or sym.m < 0:
            return False
        if any(not (p <= 2 * l and l <= p) for p, l in pairs):
            return False
        if pairs and sym.m < pairs[0][0] - pairs[0][1]:
            return False
        return _chain_ok(pairs)
    return False


def _require_valid(sym: Symbol) -> None:
    if not validate(sym):
        raise InvalidSymbolError(f"invalid symbol {sym}")


def _chi_assignments(dparts: tuple[int, ...], lower) -> Iterator[tuple[int, ...]]:
    """All chi tuples on dparts with lower(p) <= chi(p) <= p and both chains
    monotone."""

    def rec(i, prev_l, prev_sl):
        if i == len(dparts):
            yield ()
            return
        p = dparts[i]
        for l in range(lower(p), p + 1):
            if l <= prev_l and p - l <= prev_sl:
                for rest in rec(i + 1, l, p - l):
                    yield (l,) + rest

    yield from rec(0, 10**9, 10**9)


def _even_mult_partitions(total: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `total` in which every multiplicity is even."""
    if total % 2:
        return
    for half in partitions_of(total // 2):
        yield tuple(sorted(half + half, reverse=True))


def enumerate_symbols(type_: str, n: int) -> list[Symbol]:
    """All valid symbols of the given type and rank, in a fixed deterministic
    order.  D symbols with chi = lambda/2 everywhere appear twice (I, II)."""
    if type_ not in TYPES:
        raise UnsupportedTypeError(f"unknown type {type_!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Symbol] = []
    if type_ == "C":
        # ceil((p-1)/2) == p//2 for every p >= 1
        for lam in _even_mult_partitions(2 * n):
            dparts = distinct_parts(lam)
            for chi in _chi_assignments(dparts, lambda p: p // 2):
                sym = SymbolC(lam, chi)
                if validate(sym):
                    out.append(sym)
    elif type_ == "D":
        for lam in _even_mult_partitions(2 * n):
            dparts = distinct_parts(lam)
            for chi in _chi_assignments(dparts, lambda p: (p + 1) // 2):
                degenerate = bool(lam) and all(2 * l == p for p, l in zip(dparts, chi))
                if degenerate:
                    for label in ("I", "II"):
                        sym = SymbolD(lam, chi, label)
                        if validate(sym):
                            out.append(sym)
                else:
                    sym = SymbolD(lam, chi, None)
                    if validate(sym):
                        out.append(sym)
    else:
        for m in range(n, -1, -1):
            for lam in _even_mult_partitions(2 * (n - m)):
                dparts = distinct_parts(lam)
                for chi in _chi_assignments(dparts, lambda p: (p + 1) // 2):
                    sym = SymbolB(m, lam, chi)
                    if validate(sym):
                        out.append(sym)
    out.sort(key=_sort_key)
    return out


def _sort_key(sym: Symbol):
    m = sym.m if sym.type == "B" else -1
    label = {"I": 1, "II": 2, None: 0}[getattr(sym, "label", None)]
    return (tuple(-x for x in sym.lam), m, sym.chi, label)


def zero_symbol(type_: str, n: int) -> Symbol:
    """The symbol of the zero functional."""
    ones = (1,) * (2 * n)
    if type_ == "C":
        return SymbolC(ones, (0,) if n else ())
    if type_ == "D":
        return SymbolD(ones, (1,) if n else (), None)
    if type_ == "B":
        return SymbolB(0, ones, (1,) if n else ())
    raise UnsupportedTypeError(type_)


def is_zero_symbol(sym: Symbol) -> bool:
    if sym.type == "C":
        return not sym.lam or (sym.lam[-1] == 1 == sym.lam[0] and sym.chi == (0,))
    if sym.type == "B":
        return sym.m == 0 and (not sym.lam or sym.lam[0] == 1)
    return not sym.lam or (sym.lam[0] == 1 and sym.chi == (1,))


def centralizer_dim(sym: Symbol) -> int:
    """dim Z_G(xi) from the part/chi data (types B and C only)."""
    _require_valid(sym)
    cv = dict(_chi_pairs(sym))
    if sym.type == "C":
        return sum((i + 1) * p - cv[p] for i, p in enumerate(sym.lam))
    if sym.type == "B":
        return sym.m + sum((i + 2) * p - cv[p] for i, p in enumerate(sym.lam))
    raise UnsupportedTypeError("no centralizer dimension formula for type D")


def springer_fiber_dim(sym: Symbol) -> int:
    """(dim Z_G(xi) - rank G) / 2; the difference must be even."""
    d = centralizer_dim(sym) - sym.n
    if d < 0 or d % 2:
        raise InvalidSymbolError(f"centralizer dim {d + sym.n} inconsistent for {sym}")
    return d // 2


def to_json(sym: Symbol) -> dict:
    doc = {
        "type": sym.type,
        "n": sym.n,
        "lambda": list(sym.lam),
        "chi": {str(p): l for p, l in _chi_pairs(sym)},
    }
    if sym.type == "B":
        doc["m"] = sym.m
    if sym.type == "D":
        doc["label"] = sym.label
    return doc


def from_json(doc: dict) -> Symbol:
    lam = normalize(doc["lambda"])
    chi = tuple(int(doc["chi"][str(p)]) for p in distinct_parts(lam))
    t = doc["type"]
    if t == "C":
        sym: Symbol = SymbolC(lam, chi)
    elif t == "B":
        sym = SymbolB(int(doc["m"]), lam, chi)
    elif t == "D":
        sym = SymbolD(lam, chi, doc.get("label"))
    else:
        raise UnsupportedTypeError(t)
    _require_valid(sym)
    return sym

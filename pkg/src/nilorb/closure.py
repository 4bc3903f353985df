"""Closure order on nilpotent coadjoint orbits, Hasse diagrams, and orbit
induction.

The closure order is read off the Springer images under the dominance order
on bipartitions; for type D the two labeled orbits over one degenerate pair
are incomparable.
"""

from __future__ import annotations

from .errors import RankMismatchError
from .partitions import bipartition_leq, dn_normalize, j_induct
from .springer import gamma_star, gamma_star_inv
from .symbols import Symbol, centralizer_dim, enumerate_symbols


def closure_leq(a: Symbol, b: Symbol) -> bool:
    """True iff the orbit of `a` lies in the closure of the orbit of `b`."""
    if a.type != b.type or a.n != b.n:
        raise RankMismatchError(f"cannot compare {a} and {b}")
    if a == b:
        return True
    if a.type == "D":
        if (a.lam, a.chi) == (b.lam, b.chi):
            return False  # degenerate pair with distinct labels
        return bipartition_leq(dn_normalize(gamma_star(a)), dn_normalize(gamma_star(b)))
    return bipartition_leq(gamma_star(a), gamma_star(b))


def leq_matrix(symbols: list[Symbol]) -> list[list[bool]]:
    k = len(symbols)
    return [[closure_leq(symbols[i], symbols[j]) for j in range(k)] for i in range(k)]


def hasse(type_: str, n: int) -> list[tuple[Symbol, Symbol]]:
    """Covering pairs (a, b) with a covered by b, in enumeration order."""
    symbols = enumerate_symbols(type_, n)
    leq = leq_matrix(symbols)
    k = len(symbols)
    covers = []
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j]:
                continue
            if any(leq[i][t] and leq[t][j] for t in range(k) if t not in (i, j)):
                continue
            covers.append((symbols[i], symbols[j]))
    return covers


def induce_orbit(sym: Symbol, k: int) -> Symbol:
    """Orbit induction from rank n to rank n+k, computed through the
    commuting square with j-induction on Springer images."""
    t = j_induct(gamma_star(sym), k)
    return gamma_star_inv(t, sym.type, sym.n + k)


def closure_extremes(type_: str, n: int) -> tuple[list[Symbol], list[Symbol]]:
    """(minimal elements, maximal elements) of the closure order."""
    symbols = enumerate_symbols(type_, n)
    leq = leq_matrix(symbols)
    k = len(symbols)
    mins = [symbols[i] for i in range(k) if not any(leq[j][i] for j in range(k) if j != i)]
    maxs = [symbols[i] for i in range(k) if not any(leq[i][j] for j in range(k) if j != i)]
    return mins, maxs


def assert_partial_order(symbols: list[Symbol], leq: list[list[bool]] | None = None) -> None:
    """Reflexivity, antisymmetry, transitivity; raises AssertionError."""
    if leq is None:
        leq = leq_matrix(symbols)
    k = len(symbols)
    for i in range(k):
        assert leq[i][i], f"not reflexive at {symbols[i]}"
    for i in range(k):
        for j in range(k):
            if i != j and leq[i][j] and leq[j][i]:
                raise AssertionError(f"antisymmetry fails: {symbols[i]} / {symbols[j]}")
    for i in range(k):
        for j in range(k):
            if not leq[i][j]:
                continue
            for t in range(k):
                if leq[j][t] and not leq[i][t]:
                    raise AssertionError(
                        f"transitivity fails: {symbols[i]} <= {symbols[j]} <= {symbols[t]}"
                    )


def assert_covers_decrease_centralizer(type_: str, n: int) -> None:
    """Along every covering pair a < b the centralizer dimension drops."""
    for a, b in hasse(type_, n):
        if type_ in ("B", "C"):
            if not centralizer_dim(a) > centralizer_dim(b):
                raise AssertionError(f"centralizer dim not strictly decreasing on {a} < {b}")

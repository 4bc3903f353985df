"""Partitions, bipartitions, the dominance order, j-induction, and the
distinguished bipartition families.

Partitions are tuples of weakly decreasing positive integers; a missing part
reads as 0 everywhere.  Bipartitions are ordered pairs of partitions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import IncomparableSizeError

FAMILIES = ("XC2", "XB2", "XC1", "XB1")


def normalize(parts: Iterable[int]) -> tuple[int, ...]:
    """Canonical partition form: sorted descending, trailing zeros dropped."""
    p = tuple(sorted((x for x in parts if x != 0), reverse=True))
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    return p


def is_partition(parts) -> bool:
    try:
        t = tuple(parts)
    except TypeError:
        return False
    return all(isinstance(x, int) and x > 0 for x in t) and all(
        t[i] >= t[i + 1] for i in range(len(t) - 1)
    )


def part(p: tuple[int, ...], i: int) -> int:
    """1-indexed part, 0 beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def multiplicity(p: tuple[int, ...], j: int) -> int:
    """Number of parts equal to j (j >= 1)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return sum(1 for x in p if x == j)


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, reverse-lexicographic ((n) first, (1^n) last)."""

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    yield from gen(n, n)


class Bipartition(NamedTuple):
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.mu) + sum(self.nu)

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu)}

    def __str__(self) -> str:
        fmt = lambda p: ",".join(map(str, p)) if p else "0"
        return f"({fmt(self.mu)})({fmt(self.nu)})"


def bipartition(mu, nu) -> Bipartition:
    return Bipartition(normalize(mu), normalize(nu))


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    """All of P2(n), reverse-lexicographic on the concatenated pair."""
    for k in range(n, -1, -1):
        for mu in partitions_of(k):
            for nu in partitions_of(n - k):
                yield Bipartition(mu, nu)


def bipartition_leq(a: Bipartition, b: Bipartition) -> bool:
    """Dominance order on pairs: both partial-sum chains must dominate."""
    if a.total != b.total:
        raise IncomparableSizeError(f"totals differ: {a.total} != {b.total}")
    jmax = max(len(a.mu), len(a.nu), len(b.mu), len(b.nu)) + 1
    sa = sb = 0
    for j in range(1, jmax + 1):
        if sa + part(a.mu, j) > sb + part(b.mu, j):
            return False
        sa += part(a.mu, j) + part(a.nu, j)
        sb += part(b.mu, j) + part(b.nu, j)
        if sa > sb:
            return False
    return True


def bipartition_lt(a: Bipartition, b: Bipartition) -> bool:
    return a != b and bipartition_leq(a, b)


def j_induct(t: Bipartition, k: int) -> Bipartition:
    """Truncated induction j_k: add 1 to the first ceil(k/2) parts of mu and
    the first floor(k/2) parts of nu."""
    if k < 1:
        raise ValueError("k must be >= 1")
    na = (k + 1) // 2
    nb = k // 2
    mu = list(t.mu) + [0] * max(0, na - len(t.mu))
    nu = list(t.nu) + [0] * max(0, nb - len(t.nu))
    for i in range(na):
        mu[i] += 1
    for i in range(nb):
        nu[i] += 1
    return Bipartition(normalize(mu), normalize(nu))


def dn_normalize(t: Bipartition) -> Bipartition:
    """W(D_n) normal form: at the first index where the parts differ, the
    nu-part must be the smaller one."""
    for m, n in zip(list(t.mu) + [0] * len(t.nu), list(t.nu) + [0] * len(t.mu)):
        if m != n:
            return t if n < m else Bipartition(t.nu, t.mu)
    return t


def in_family(t: Bipartition, family: str) -> bool:
    """Membership in the Springer image families X*2 and the complex-group
    image families X1 (missing parts read as 0)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    imax = max(len(t.mu), len(t.nu)) + 1
    for i in range(1, imax + 1):
        mi, mi1, ni = part(t.mu, i), part(t.mu, i + 1), part(t.nu, i)
        if family == "XC2" and not ni <= mi + 1:
            return False
        if family == "XB2" and not ni >= mi1:
            return False
        if family == "XC1" and not mi1 - 1 <= ni <= mi + 1:
            return False
        if family == "XB1" and not mi1 <= ni <= mi + 2:
            return False
    return True

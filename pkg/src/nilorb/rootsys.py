"""Root systems of G2 and F4 as integer coefficient vectors over the simple
roots, generated from the Cartan matrix.

G2 simple roots: a (short), b (long).  F4 simple roots: p, q (long), r, s
(short), with the double bond between q and r.  A root name like "p2q3r2s"
means p + 2q + 3r + 2s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Root = tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    letters: tuple[str, ...]
    cartan: tuple[tuple[int, ...], ...]  # A[i][j] = <alpha_j, alpha_i^vee>
    d: tuple[int, ...]  # half squared lengths (symmetrizers)
    positive: tuple[Root, ...]

    @property
    def simple(self) -> tuple[Root, ...]:
        return tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive + tuple(neg(r) for r in self.positive)

    def is_root(self, v: Root) -> bool:
        key = "_rs_" + self.name
        store = _ROOTSET_CACHE.setdefault(key, frozenset(self.roots))
        return v in store

    def pairing(self, i: int, beta: Root) -> int:
        """<beta, alpha_i^vee>."""
        return sum(self.cartan[i][j] * beta[j] for j in range(self.rank))

    def inner(self, a: Root, b: Root) -> Fraction:
        """(a, b) via the symmetrized Cartan matrix."""
        return sum(
            Fraction(self.d[i] * self.cartan[i][j] * a[i] * b[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def coroot_coeffs(self, gamma: Root) -> tuple[int, ...]:
        """gamma^vee = sum c_i alpha_i^vee with integer c_i."""
        gg = self.inner(gamma, gamma)
        out = []
        for i in range(self.rank):
            c = Fraction(2 * self.d[i] * gamma[i], 1) / gg
            if c.denominator != 1:
                raise AssertionError(f"non-integral coroot coefficient for {gamma}")
            out.append(int(c))
        return tuple(out)

    def string_p(self, alpha: Root, beta: Root) -> int:
        """max i >= 0 with beta - i*alpha a root."""
        i = 0
        cur = sub(beta, alpha)
        while self.is_root(cur):
            i += 1
            cur = sub(cur, alpha)
        return i

    def height(self, v: Root) -> int:
        return sum(v)

    def name_of(self, v: Root) -> str:
        if all(c <= 0 for c in v) and any(v):
            return "-" + self.name_of(neg(v))
        out = []
        for c, letter in zip(v, self.letters):
            if c == 0:
                continue
            out.append((str(c) if c != 1 else "") + letter)
        return "".join(out) if out else "0"

    def parse_name(self, text: str) -> Root:
        sign = 1
        if text.startswith("-"):
            sign = -1
            text = text[1:]
        coeffs = [0] * self.rank
        i = 0
        while i < len(text):
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            c = int(text[i:j]) if j > i else 1
            letter = text[j]
            coeffs[self.letters.index(letter)] = sign * c
            i = j + 1
        v = tuple(coeffs)
        if not self.is_root(v):
            raise ValueError(f"{text!r} is not a root of {self.name}")
        return v


_ROOTSET_CACHE: dict = {}


def neg(v: Root) -> Root:
    return tuple(-c for c in v)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _generate_positive(cartan, rank) -> tuple[Root, ...]:
    """Close the simple roots upward using root strings."""
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i, alpha in enumerate(simple):
                if beta == alpha:
                    continue  # 2*alpha is never a root
                # p = max {k : beta - k alpha in R}
                p = 0
                cur = sub(beta, alpha)
                while cur in known or neg(cur) in known:
                    p += 1
                    cur = sub(cur, alpha)
                pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
                if p - pairing > 0:
                    cand = add(beta, alpha)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return tuple(sorted(known, key=lambda v: (sum(v), v)))


def g2() -> RootSystem:
    # letters: a short, b long; A[i][j] = <alpha_j, alpha_i^vee>
    cartan = ((2, -3), (-1, 2))
    d = (1, 3)
    pos = _generate_positive(cartan, 2)
    rs = RootSystem("G2", 2, ("a", "b"), cartan, d, pos)
    assert len(pos) == 6
    return rs


def f4() -> RootSystem:
    # letters p, q long (d=2); r, s short (d=1); double bond q => r
    cartan = (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    )
    d = (2, 2, 1, 1)
    pos = _generate_positive(cartan, 4)
    rs = RootSystem("F4", 4, ("p", "q", "r", "s"), cartan, d, pos)
    assert len(pos) == 24
    return rs

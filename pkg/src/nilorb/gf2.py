"""Bit-packed linear algebra over GF(2).

Vectors are Python ints (bit i = coordinate i); matrices are lists of column
masks.  Everything here is exact and allocation-light; the compiled kernel
mirrors the same representations.
"""

from __future__ import annotations


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def mat_vec(cols: list[int], x: int) -> int:
    y = 0
    while x:
        low = x & -x
        y ^= cols[low.bit_length() - 1]
        x ^= low
    return y


def mat_mul(a_cols: list[int], b_cols: list[int]) -> list[int]:
    """Columns of A @ B."""
    return [mat_vec(a_cols, b) for b in b_cols]


def identity(dim: int) -> list[int]:
    return [1 << i for i in range(dim)]


def transpose(cols: list[int], dim: int) -> list[int]:
    out = [0] * dim
    for j, c in enumerate(cols):
        for i in range(dim):
            if (c >> i) & 1:
                out[i] |= 1 << j
    return out


def echelon(vectors: list[int]) -> list[int]:
    """Reduced basis of the span, pivots descending."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    # back-substitute to reduced form
    for i in range(len(basis)):
        for j in range(len(basis)):
            if i != j and basis[i] ^ basis[j] < basis[i]:
                basis[i] ^= basis[j]
    return sorted(basis, reverse=True)


def rank(vectors: list[int]) -> int:
    return len(echelon(vectors))


def in_span(basis_ech: list[int], v: int) -> bool:
    for b in basis_ech:
        v = min(v, v ^ b)
    return v == 0


def kernel_of_cols(cols: list[int], dim_in: int) -> list[int]:
    """Basis of {x : sum of cols over bits of x == 0}."""
    pairs = [(cols[i], 1 << i) for i in range(dim_in)]
    reduced: list[tuple[int, int]] = []
    out = []
    for val, combo in pairs:
        for rv, rc in reduced:
            if val ^ rv < val:
                val ^= rv
                combo ^= rc
        if val:
            reduced.append((val, combo))
            reduced.sort(reverse=True)
        else:
            out.append(combo)
    return out


def kernel_of_rows(rows: list[int], dim: int) -> list[int]:
    """Basis of {x : parity(x & r) == 0 for every row r}."""
    ech = echelon(rows)
    pivots = [r.bit_length() - 1 for r in ech]
    free = [i for i in range(dim) if i not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for r, p in zip(ech, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def solve_rows(rows: list[int], rhs: list[int], dim: int) -> int | None:
    """One x with parity(x & rows[i]) == rhs[i] for all i, or None."""
    work = list(zip(rows, rhs))
    basis: list[tuple[int, int]] = []  # echelon rows with their rhs bits
    for r, b in work:
        for br, bb in basis:
            if r ^ br < r:
                r ^= br
                b ^= bb
        if r:
            basis.append((r, b))
            basis.sort(reverse=True)
        elif b:
            return None
    x = 0
    for r, b in sorted(basis):  # back-substitute from low pivots up
        p = r.bit_length() - 1
        cur = parity(x & r)
        if cur != b:
            x ^= 1 << p
    for r, b in basis:
        assert parity(x & r) == b
    return x


def subspace_vectors(basis: list[int]) -> list[int]:
    """All 2^k vectors of a small subspace."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out


class QuadForm:
    """Quadratic form alpha(v) = sum(diag_i v_i) + sum_{i<j} u_ij v_i v_j.

    `upper[i]` holds the bits u_ij for j > i.  The polarization
    beta(x, y) = alpha(x+y) + alpha(x) + alpha(y) is alternating; its columns
    are precomputed in `bcols`.
    """

    __slots__ = ("dim", "diag", "upper", "bcols")

    def __init__(self, dim: int, diag: int, upper: list[int]):
        self.dim = dim
        self.diag = diag
        self.upper = list(upper)
        bcols = [0] * dim
        for i in range(dim):
            u = self.upper[i]
            bcols[i] |= u
            while u:
                low = u & -u
                bcols[low.bit_length() - 1] |= 1 << i
                u ^= low
        self.bcols = bcols

    def __call__(self, v: int) -> int:
        acc = bin(self.diag & v).count("1")
        x = v
        while x:
            low = x & -x
            i = low.bit_length() - 1
            acc += bin(self.upper[i] & v).count("1")
            x ^= low
        return acc & 1

    def beta(self, x: int, y: int) -> int:
        return parity(x & mat_vec(self.bcols, y))

    def is_zero_on(self, basis: list[int]) -> bool:
        for i, b in enumerate(basis):
            if self(b):
                return False
            for b2 in basis[i + 1 :]:
                if self.beta(b, b2):
                    return False
        return True

    @classmethod
    def from_values(cls, dim: int, vec_of, diag_vectors: list[int], beta_fun) -> "QuadForm":
        """Build coordinates of a form given its values on a basis and its
        polarization; vec_of maps a coordinate index to the basis vector."""
        diag = 0
        upper = [0] * dim
        for i in range(dim):
            if diag_vectors[i]:
                diag |= 1 << i
            for j in range(i + 1, dim):
                if beta_fun(vec_of(i), vec_of(j)):
                    upper[i] |= 1 << j
        return cls(dim, diag, upper)

"""Small finite fields F_q for q in {2, 3, 4, 8, 9}.

Elements are integers 0..q-1; nonprime fields multiply through a fixed
irreducible polynomial.  Only tiny fields are needed, so tables are built
eagerly.
"""

from __future__ import annotations

# q -> (p, lower coefficients of the monic irreducible, so x^deg = -sum c_t x^t)
_IRRED = {4: (2, [1, 1]), 8: (2, [1, 1, 0]), 9: (3, [1, 0])}


class GF:
    def __init__(self, q: int):
        if q < 2:
            raise ValueError("q must be >= 2")
        if _is_prime(q):
            self.q = q
            self.p = q
            self._mul = None
        elif q in _IRRED:
            self.q = q
            self.p, poly = _IRRED[q]
            self._mul = _build_mul_table(self.p, poly)
        else:
            raise ValueError(f"GF({q}) not supported")

    def add(self, a: int, b: int) -> int:
        if self._mul is None:
            return (a + b) % self.p
        # coefficientwise addition mod p
        out, shift = 0, 1
        while a or b:
            out += ((a + b) % self.p) * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self._mul is None:
            return (-a) % self.p
        out, shift = 0, 1
        while a:
            out += ((self.p - a % self.p) % self.p) * shift
            a //= self.p
            shift *= self.p
        return out

    def mul(self, a: int, b: int) -> int:
        if self._mul is None:
            return (a * b) % self.p
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError("no inverse found")

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, k: int) -> int:
        """Image of an integer under Z -> F_q (through the prime subfield)."""
        return k % self.p


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _build_mul_table(p: int, poly: list[int]) -> list[list[int]]:
    deg = len(poly)
    q = p ** deg

    def to_vec(x):
        out = []
        for _ in range(2 * deg):
            out.append(x % p)
            x //= p
        return out

    def from_vec(v):
        out = 0
        for c in reversed(v):
            out = out * p + c
        return out

    table = [[0] * q for _ in range(q)]
    for a in range(q):
        va = to_vec(a)
        for b in range(q):
            vb = to_vec(b)
            prod = [0] * (2 * deg)
            for i in range(deg):
                for j in range(deg):
                    prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p
            for k in range(2 * deg - 1, deg - 1, -1):
                c = prod[k]
                if c:
                    prod[k] = 0
                    for t, pc in enumerate(poly):
                        prod[k - deg + t] = (prod[k - deg + t] - c * pc) % p
            table[a][b] = from_vec(prod[:deg])
    return table

"""Exact polynomials in the variable q with rational coefficients.

Carrier of group orders and centralizer orders; all arithmetic is exact, and
division asserts exactness unless a remainder is requested.
"""

from __future__ import annotations

from fractions import Fraction


class QPoly:
    """Dense coefficient list, ascending powers, normalized (no trailing
    zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors
    @classmethod
    def const(cls, c) -> "QPoly":
        return cls([c])

    @classmethod
    def q_power(cls, k: int, c=1) -> "QPoly":
        return cls([0] * k + [c])

    # -- ring structure
    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        out = QPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        other = _coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            quot[i - d] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return QPoly(quot), QPoly(rem)

    def __truediv__(self, other) -> "QPoly":
        """Exact division; raises ValueError on a nonzero remainder."""
        q, r = self.divmod(_coerce(other))
        if r.coeffs:
            raise ValueError(f"inexact polynomial division: remainder {r}")
        return q

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == _coerce(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        if out.denominator == 1:
            return int(out)
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                pw = "q" if k == 1 else f"q^{k}"
                terms.append(f"{sign}{mag}{pw}")
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    __repr__ = __str__


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly([x])
    raise TypeError(f"cannot coerce {x!r} to QPoly")


Q = QPoly.q_power(1)
ONE = QPoly.const(1)


def parse(text: str) -> QPoly:
    """Parse expressions like "2*q^21*(q^2-1)*(q^3+1)*(q^4-1)"."""
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def eat(tok=None):
        t = peek()
        if t is None or (tok is not None and t != tok):
            raise ValueError(f"parse error in {text!r} at token {t!r}")
        pos[0] += 1
        return t

    def expr():
        node = term()
        while peek() in ("+", "-"):
            op = eat()
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = factor()
        while peek() == "*":
            eat("*")
            node = node * factor()
        return node

    def factor():
        if peek() == "-":
            eat("-")
            return -factor()
        node = base()
        if peek() == "^":
            eat("^")
            k = eat()
            if not isinstance(k, int):
                raise ValueError(f"exponent must be an integer in {text!r}")
            node = node**k
        return node

    def base():
        t = eat()
        if t == "(":
            node = expr()
            eat(")")
            return node
        if t == "q":
            return Q
        if isinstance(t, int):
            return QPoly.const(t)
        raise ValueError(f"unexpected token {t!r} in {text!r}")

    out = expr()
    if pos[0] != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out


def _tokenize(text: str):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            out.append(ch)
            i += 1
        elif ch == "q":
            out.append("q")
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        else:
            raise ValueError(f"bad character {ch!r} in {text!r}")
    return out

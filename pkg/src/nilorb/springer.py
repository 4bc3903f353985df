"""Springer correspondence maps, the hull map on bipartitions, and the
piece map onto complex unipotent classes (types B and C; gamma also for D).

Conventions: missing parts read as 0; where a case analysis refers to the
part before the first one, it reads as +infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FamilyDomainError,
    InvalidSymbolError,
    NotInImageError,
    UnsupportedTypeError,
)
from .partitions import Bipartition, in_family, normalize, part, partitions_of
from .symbols import Symbol, SymbolB, SymbolC, chi_of, distinct_parts, validate

_INF = 10**9


@dataclass(frozen=True, order=True)
class UnipotentClass:
    """A unipotent class of the complex group: type C = partitions of 2n with
    odd parts of even multiplicity, type B = partitions of 2n+1 with even
    parts of even multiplicity."""

    type: str
    parts: tuple[int, ...]

    def to_json(self) -> dict:
        return {"type": self.type, "parts": list(self.parts)}


def unipotent_valid(cls: UnipotentClass) -> bool:
    p = cls.parts
    if p != normalize(p):
        return False
    bad_parity = 1 if cls.type == "C" else 0
    return all(
        sum(1 for x in p if x == v) % 2 == 0
        for v in set(p)
        if v % 2 == bad_parity
    )


def enumerate_unipotent(type_: str, n: int) -> list[UnipotentClass]:
    """All unipotent classes of the complex group of rank n, deterministic
    order."""
    if type_ not in ("B", "C"):
        raise UnsupportedTypeError(f"unipotent classes implemented for B, C only, not {type_!r}")
    total = 2 * n + 1 if type_ == "B" else 2 * n
    out = []
    for lam in partitions_of(total):
        cls = UnipotentClass(type_, lam)
        if unipotent_valid(cls):
            out.append(cls)
    return out


def gamma_star(sym: Symbol) -> Bipartition:
    """The Springer correspondence map on orbit symbols."""
    if not validate(sym):
        raise InvalidSymbolError(f"invalid symbol {sym}")
    lam = sym.lam
    odd_parts = [lam[i] for i in range(0, len(lam), 2)]
    chis = [chi_of(sym, p) for p in odd_parts]
    if sym.type in ("C", "D"):
        mu = [c for c in chis]
        nu = [p - c for p, c in zip(odd_parts, chis)]
    else:
        mu = [sym.m] + [p - c for p, c in zip(odd_parts, chis)]
        nu = [c for c in chis]
    return Bipartition(normalize(mu), normalize(nu))


def image_family(type_: str) -> str:
    if type_ == "C":
        return "XC2"
    if type_ == "B":
        return "XB2"
    raise UnsupportedTypeError(f"no closed-form image family for type {type_!r}")


def gamma_star_inv(t: Bipartition, type_: str, n: int) -> Symbol:
    """The unique symbol with gamma_star == t (types B and C)."""
    if type_ not in ("B", "C"):
        raise UnsupportedTypeError(f"gamma_star_inv implemented for B, C, not {type_!r}")
    if t.total != n or not in_family(t, image_family(type_)):
        raise NotInImageError(f"{t} is not in the rank-{n} image family for type {type_}")
    pairs = []  # (part value, chi value), one per Jordan-pair
    if type_ == "C":
        i = 1
        while part(t.mu, i) or part(t.nu, i):
            pairs.append((part(t.mu, i) + part(t.nu, i), part(t.mu, i)))
            i += 1
    else:
        m = part(t.mu, 1)
        i = 1
        while part(t.mu, i + 1) or part(t.nu, i):
            pairs.append((part(t.mu, i + 1) + part(t.nu, i), part(t.nu, i)))
            i += 1
    lam = []
    chi_map: dict[int, int] = {}
    for p, c in pairs:
        lam += [p, p]
        if chi_map.setdefault(p, c) != c:
            raise NotInImageError(f"{t} forces conflicting chi values at part {p}")
    lam_t = normalize(lam)
    chi = tuple(chi_map[p] for p in distinct_parts(lam_t))
    sym: Symbol = SymbolC(lam_t, chi) if type_ == "C" else SymbolB(m, lam_t, chi)
    if not validate(sym):
        raise NotInImageError(f"{t} inverts to an invalid symbol {sym}")
    if gamma_star(sym) != t:
        raise NotInImageError(f"round-trip failed for {t}")
    return sym


def phi(t: Bipartition, type_: str) -> Bipartition:
    """Hull map X*2 -> X1; identity on X1, dominance-increasing."""
    if type_ == "B":
        if not in_family(t, "XB2"):
            raise FamilyDomainError(f"{t} not in XB2")
        imax = max(len(t.mu), len(t.nu))
        mu, nu = [], []
        for i in range(1, imax + 1):
            mi, ni = part(t.mu, i), part(t.nu, i)
            if ni > mi + 2:
                mu.append((mi + ni - 1) // 2)
                nu.append((mi + ni + 2) // 2)
            else:
                mu.append(mi)
                nu.append(ni)
        res = Bipartition(normalize(mu), normalize(nu))
        family = "XB1"
    elif type_ == "C":
        if not in_family(t, "XC2"):
            raise FamilyDomainError(f"{t} not in XC2")
        imax = max(len(t.mu), len(t.nu)) + 1
        mu, nu = [part(t.mu, 1)], []
        for i in range(1, imax + 1):
            mi1, ni = part(t.mu, i + 1), part(t.nu, i)
            if ni < mi1 - 1:
                mu.append((mi1 + ni + 1) // 2)
                nu.append((mi1 + ni) // 2)
            else:
                mu.append(mi1)
                nu.append(ni)
        res = Bipartition(normalize(mu), normalize(nu))
        family = "XC1"
    else:
        raise UnsupportedTypeError(f"phi implemented for B, C, not {type_!r}")
    if not in_family(res, family):
        raise AssertionError(f"phi({t}) = {res} escaped {family}")
    return res


def _as_class(type_: str, entries: list[int], dim: int) -> UnipotentClass:
    lam = [x for x in entries if x != 0]
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise AssertionError(f"piece-map output not weakly decreasing: {entries}")
    cls = UnipotentClass(type_, tuple(lam))
    if sum(lam) != dim or not unipotent_valid(cls):
        raise AssertionError(f"piece-map output invalid: {entries} (dim {dim})")
    return cls


def psi_star(sym: Symbol) -> UnipotentClass:
    """Piece map: orbit symbols -> unipotent classes of the complex group."""
    if not validate(sym):
        raise InvalidSymbolError(f"invalid symbol {sym}")
    if sym.type not in ("B", "C"):
        raise UnsupportedTypeError("psi_star implemented for B, C only")
    lam = sym.lam

    def l(i):  # 1-indexed part
        return part(lam, i)

    def c(i):  # chi at the i-th part (0 beyond length)
        return chi_of(sym, l(i)) if l(i) else 0

    k = len(lam)
    if sym.type == "C":
        out = [0] * (k + 2)
        for idx in range(1, k + 1):
            out[idx] = l(idx)
        if 2 * c(1) > l(1):
            out[1] = 2 * c(1)
        for i in range(1, k // 2 + 1):
            gap = c(2 * i) - l(2 * i) + c(2 * i + 1)
            if 2 * c(2 * i) > l(2 * i) and c(2 * i) > c(2 * i + 1):
                out[2 * i] = l(2 * i) - c(2 * i) + c(2 * i + 1) if gap >= 1 else 2 * (l(2 * i) - c(2 * i))
            if 2 * c(2 * i + 1) > l(2 * i + 1) and l(2 * i + 1) - c(2 * i + 1) < l(2 * i) - c(2 * i):
                out[2 * i + 1] = l(2 * i) - c(2 * i) + c(2 * i + 1) if gap >= 1 else 2 * c(2 * i + 1)
        return _as_class("C", out[1:], sym.dim_v)

    m = sym.m
    out = [0] * (k + 4)
    if c(1) >= m + 2:
        out[1] = out[2] = m + c(1)
    else:
        out[1] = 2 * m + 1
        out[2] = 2 * c(1) - 1 if (l(1) + 1) // 2 < c(1) else l(1)
    for i in range(1, k // 2 + 2):
        if 2 * i + 2 >= len(out):
            out += [0] * (2 * i + 3 - len(out))
        out[2 * i + 1] = l(2 * i)
        out[2 * i + 2] = l(2 * i + 1)
        gap = c(2 * i) - l(2 * i) + c(2 * i + 1)
        if 2 * c(2 * i) > l(2 * i) and c(2 * i) > c(2 * i + 1):
            out[2 * i + 1] = l(2 * i) - c(2 * i) + c(2 * i + 1) if gap >= 2 else 2 * (l(2 * i) - c(2 * i)) + 1
        if 2 * c(2 * i + 1) > l(2 * i + 1) and l(2 * i + 1) - c(2 * i + 1) < l(2 * i) - c(2 * i):
            out[2 * i + 2] = l(2 * i) - c(2 * i) + c(2 * i + 1) if gap >= 2 else 2 * c(2 * i + 1) - 1
    return _as_class("B", out[1:], sym.dim_v)


def unip_from_symbol(t: Bipartition, type_: str) -> UnipotentClass:
    """Unipotent class attached to a bipartition in X1 (inverse of the
    complex-group Springer map)."""
    if type_ == "C":
        if not in_family(t, "XC1"):
            raise FamilyDomainError(f"{t} not in XC1")
    elif type_ == "B":
        if not in_family(t, "XB1"):
            raise FamilyDomainError(f"{t} not in XB1")
    else:
        raise UnsupportedTypeError(f"unip_from_symbol implemented for B, C, not {type_!r}")
    return _unip_display(t, type_)


def _unip_display(t: Bipartition, type_: str) -> UnipotentClass:
    """The displayed case analysis building lambda-tilde from a bipartition;
    total on X*2 of the matching type (nu_0 reads as +infinity)."""
    imax = max(len(t.mu), len(t.nu)) + 1
    out = []

    def mu(i):
        return part(t.mu, i)

    def nu(i):
        return _INF if i == 0 else part(t.nu, i)

    if type_ == "B":
        for i in range(1, imax + 1):
            if mu(i) <= nu(i) - 2:
                out.append(mu(i) + nu(i))
            elif nu(i) - 2 < mu(i) < nu(i - 1):
                out.append(2 * mu(i) + 1)
            elif mu(i) == nu(i - 1):
                out.append(2 * mu(i))
            else:
                raise FamilyDomainError(f"{t} misses every case at odd index {i}")
            if nu(i) >= mu(i) + 2:
                out.append(mu(i) + nu(i))
            elif mu(i + 1) < nu(i) < mu(i) + 2:
                out.append(2 * nu(i) - 1)
            elif nu(i) == mu(i + 1):
                out.append(2 * nu(i))
            else:
                raise FamilyDomainError(f"{t} misses every case at even index {i}")
        return _as_class("B", out, 2 * t.total + 1)

    for i in range(1, imax + 1):
        if mu(i) >= nu(i - 1) + 1:
            out.append(mu(i) + nu(i - 1))
        elif nu(i) <= mu(i) <= nu(i - 1):
            out.append(2 * mu(i))
        elif mu(i) == nu(i) - 1:
            out.append(2 * mu(i) + 1)
        else:
            raise FamilyDomainError(f"{t} misses every case at odd index {i}")
        if nu(i) <= mu(i + 1) - 1:
            out.append(mu(i + 1) + nu(i))
        elif mu(i + 1) <= nu(i) <= mu(i):
            out.append(2 * nu(i))
        elif nu(i) == mu(i) + 1:
            out.append(2 * nu(i) - 1)
        else:
            raise FamilyDomainError(f"{t} misses every case at even index {i}")
    return _as_class("C", out, 2 * t.total)

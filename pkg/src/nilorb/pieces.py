"""Layer dimensions of canonical filtrations (Upsilon sequences) computed by
combinatorial recursion, nilpotent pieces as closure-order blocks, and the
three-way coincidence report.

The recursion peels one outer layer per step: each step returns the depth N,
the top layer dimension f_N, and the derived symbol of the residual space;
inner indices [0, N-1] are filled by the derived symbol's sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnsupportedTypeError, ZeroSymbolError
from .partitions import in_family, multiplicity, normalize
from .springer import UnipotentClass, gamma_star, psi_star
from .symbols import (
    Symbol,
    SymbolB,
    SymbolC,
    chi_extend,
    distinct_parts,
    enumerate_symbols,
    is_zero_symbol,
    validate,
)


def upsilon_from_unipotent(cls: UnipotentClass) -> tuple[int, ...]:
    """f_a = number of parts > a of parity a+1 (the good-characteristic layer
    formula), truncated at the last nonzero index."""
    lam = cls.parts
    if not lam:
        return (0,)
    out = [0] * lam[0]
    for a in range(lam[0]):
        out[a] = sum(1 for p in lam if p > a and (p - a) % 2 == 1)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _moved(lam: tuple[int, ...], moves: list[tuple[int, int, int]]) -> tuple[int, ...]:
    """Apply multiplicity moves (value_from, value_to, count); value_to == 0
    deletes parts."""
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for src, dst, count in moves:
        have = mult.get(src, 0)
        if have < count:
            raise AssertionError(f"cannot move {count} parts of size {src} (have {have})")
        mult[src] = have - count
        if dst > 0:
            mult[dst] = mult.get(dst, 0) + count
    out = []
    for p, m in mult.items():
        out += [p] * m
    return normalize(out)


def _with_chi(lam: tuple[int, ...], chi_fun) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return lam, tuple(chi_fun(p) for p in distinct_parts(lam))


def _find_j(sym: Symbol, e: int, f: int) -> int:
    """Largest j with chi(e-j) == f (chi is non-decreasing, chi(e) == f)."""
    j = 0
    while e - j - 1 >= 0 and chi_extend(sym, e - j - 1) == f:
        j += 1
    return j


def recursion_step_c(sym: SymbolC) -> tuple[int, int, SymbolC]:
    """One filtration layer for a nonzero type-C symbol: (N, f_N, derived)."""
    if is_zero_symbol(sym):
        raise ZeroSymbolError(f"{sym} is the zero symbol")
    e = sym.lam[0]
    f = chi_extend(sym, e)
    N = max(e - 1, 2 * f - 1)
    chi_em1 = chi_extend(sym, e - 1)
    me = multiplicity(sym.lam, e)

    if e < 2 * f:
        f_n = 1
        j = _find_j(sym, e, f)
        lam2 = _moved(sym.lam, [(e - j, e - j - 1, 2)])
        band_lo = e - j  # chi' = f-1 on [e-j, e]

        def chi_fun(p):
            return f - 1 if p >= band_lo else chi_extend(sym, p)

    elif e == 2 * f + 1 or (e == 2 * f and chi_em1 == f - 1):
        f_n = me
        lam2 = _moved(sym.lam, [(e, e - 2, me)])

        def chi_fun(p):
            if p == e - 2:
                return max(f - 1, chi_extend(sym, e - 2))
            return chi_extend(sym, p)

    elif e == 2 * f and chi_em1 == f:
        f_n = me + 1
        j = _find_j(sym, e, f)
        lam2 = _moved(sym.lam, [(e, e - 2, me), (e - j, e - j - 1, 2)])
        band_lo = e - j  # chi' = f-1 on [e-j, e-1]

        def chi_fun(p):
            if band_lo <= p <= e - 1:
                return f - 1
            return chi_extend(sym, p)

    else:  # e > 2f+1 cannot happen: chi(e) >= (e-1)/2
        raise AssertionError(f"unreachable case dispatch for {sym}")

    derived = SymbolC(*_with_chi(lam2, chi_fun))
    _check_step(sym, derived, N, f_n)
    return N, f_n, derived


def recursion_step_b(sym: SymbolB) -> tuple[int, int, SymbolB]:
    """One filtration layer for a nonzero type-B symbol: (N, f_N, derived)."""
    if is_zero_symbol(sym):
        raise ZeroSymbolError(f"{sym} is the zero symbol")
    m = sym.m
    e = sym.lam[0] if sym.lam else 0
    f = chi_extend(sym, e)
    N = max(2 * m, m + f - 1)
    me = multiplicity(sym.lam, e) if e else 0
    rho_nonzero = e >= 1 and chi_extend(sym, e - 1) == f

    if m >= f:
        # residual keeps lambda; chi at the top part may grow with m' = m-1
        f_n = 1
        lam2 = sym.lam

        def chi_fun(p):
            if p == e and m == e - f:
                return f + 1
            return chi_extend(sym, p)

        derived = SymbolB(m - 1, *_with_chi(lam2, chi_fun))

    elif e - f < m < f:
        f_n = 2
        j = _find_j(sym, e, f)
        lam2 = _moved(sym.lam, [(e - j, e - j - 1, 2)])
        band_lo = e - j

        def chi_fun(p):
            if p == e:
                return f - 1 if m >= e - f + 2 else f
            if band_lo <= p <= e - 1:
                return f - 1
            return chi_extend(sym, p)

        derived = SymbolB(m - 1, *_with_chi(lam2, chi_fun))

    elif m == 0 or (0 < m == e - f and not rho_nonzero and m < f - 1):
        f_n = me
        lam2 = _moved(sym.lam, [(e, e - 2, me)])

        def chi_fun(p):
            return chi_extend(sym, p)

        derived = SymbolB(m, *_with_chi(lam2, chi_fun))

    elif 0 < m == e - f and rho_nonzero:
        f_n = me + 2
        j = _find_j(sym, e, f)
        lam2 = _moved(sym.lam, [(e, e - 2, me), (e - j, e - j - 1, 2)])
        band_lo = e - j

        def chi_fun(p):
            if p == e - 1:
                return f
            if band_lo <= p <= e - 2:
                return f - 1
            return chi_extend(sym, p)

        derived = SymbolB(m - 1, *_with_chi(lam2, chi_fun))

    elif 0 < m == e - f == f - 1 and not rho_nonzero:
        f_n = me + 1
        lam2 = _moved(sym.lam, [(e, e - 2, me)])

        def chi_fun(p):
            if p == e - 1:
                return f
            if p == e - 2:
                return f - 1
            return chi_extend(sym, p)

        derived = SymbolB(m - 1, *_with_chi(lam2, chi_fun))

    else:
        raise AssertionError(f"unreachable case dispatch for {sym}")

    _check_step(sym, derived, N, f_n)
    return N, f_n, derived


def _check_step(sym: Symbol, derived: Symbol, N: int, f_n: int) -> None:
    if not validate(derived):
        raise AssertionError(f"derived symbol {derived} of {sym} is invalid")
    if derived.dim_v != sym.dim_v - 2 * f_n:
        raise AssertionError(
            f"dimension bookkeeping broke: {sym} -> {derived} with f_N={f_n}"
        )
    if N < 1:
        raise AssertionError(f"N = {N} < 1 for nonzero {sym}")


def recursion_step(sym: Symbol):
    if sym.type == "C":
        return recursion_step_c(sym)
    if sym.type == "B":
        return recursion_step_b(sym)
    raise UnsupportedTypeError("pieces are defined for types B and C only")


def upsilon(sym: Symbol) -> tuple[int, ...]:
    """The full layer-dimension sequence (f_0, ..., f_N)."""
    if sym.type not in ("B", "C"):
        raise UnsupportedTypeError("pieces are defined for types B and C only")
    if is_zero_symbol(sym):
        return (sym.dim_v,)
    N, f_n, derived = recursion_step(sym)
    inner = upsilon(derived)
    if len(inner) > N:
        raise AssertionError(f"inner sequence {inner} overflows N={N} for {sym}")
    out = list(inner) + [0] * (N + 1 - len(inner))
    out[N] = f_n
    total = out[0] + 2 * sum(out[1:])
    if total != sym.dim_v:
        raise AssertionError(f"upsilon {out} sums to {total} != dim {sym.dim_v}")
    return tuple(out)


def ms_pieces(type_: str, n: int) -> list[list[Symbol]]:
    """Blocks of the closure-order piece partition, one per special orbit
    (an orbit whose Springer image lies in X1), in enumeration order."""
    from .closure import leq_matrix

    if type_ not in ("B", "C"):
        raise UnsupportedTypeError("pieces are defined for types B and C only")
    family = "XB1" if type_ == "B" else "XC1"
    symbols = enumerate_symbols(type_, n)
    leq = leq_matrix(symbols)
    k = len(symbols)
    special = [i for i in range(k) if in_family(gamma_star(symbols[i]), family)]
    blocks = []
    claimed = [False] * k
    for c in special:
        block = []
        for cp in range(k):
            if not leq[cp][c]:
                continue
            if any(leq[cp][cpp] for cpp in special if leq[cpp][c] and cpp != c):
                continue
            block.append(cp)
        for cp in block:
            if claimed[cp]:
                raise AssertionError("piece blocks overlap")
            claimed[cp] = True
        blocks.append([symbols[i] for i in block])
    if not all(claimed):
        raise AssertionError("piece blocks do not cover the orbit set")
    return blocks


@dataclass
class PieceReport:
    type: str
    n: int
    agree: bool
    pieces: list[dict] = field(default_factory=list)
    disagreements: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "n": self.n,
            "agree": self.agree,
            "pieces": self.pieces,
            "disagreements": self.disagreements,
        }


def piece_report(type_: str, n: int, with_ms: bool = True) -> PieceReport:
    """Compare the psi-fiber partition, the closure-order partition, and the
    upsilon-equality partition of the orbits of the given rank."""
    from .symbols import to_json as sym_json

    symbols = enumerate_symbols(type_, n)
    by_psi: dict[UnipotentClass, list[Symbol]] = {}
    for s in symbols:
        by_psi.setdefault(psi_star(s), []).append(s)
    psi_partition = {frozenset(v) for v in by_psi.values()}

    by_ups: dict[tuple[int, ...], list[Symbol]] = {}
    for s in symbols:
        by_ups.setdefault(upsilon(s), []).append(s)
    ups_partition = {frozenset(v) for v in by_ups.values()}

    report = PieceReport(type_, n, True)
    if psi_partition != ups_partition:
        report.agree = False
        report.disagreements.append(
            "psi-fibers vs upsilon-classes differ: "
            + _partition_diff(psi_partition, ups_partition)
        )
    if with_ms:
        ms_partition = {frozenset(b) for b in ms_pieces(type_, n)}
        if ms_partition != psi_partition:
            report.agree = False
            report.disagreements.append(
                "closure-order pieces vs psi-fibers differ: "
                + _partition_diff(ms_partition, psi_partition)
            )
    for cls in sorted(by_psi, key=lambda c: (tuple(-x for x in c.parts),)):
        members = by_psi[cls]
        ups = {upsilon(s) for s in members}
        report.pieces.append(
            {
                "unipotent": cls.to_json(),
                "members": [sym_json(s) for s in members],
                "upsilon": [list(u) for u in sorted(ups)],
            }
        )
    return report


def _partition_diff(p1, p2) -> str:
    only1 = [sorted(map(str, b)) for b in p1 - p2]
    only2 = [sorted(map(str, b)) for b in p2 - p1]
    return f"blocks only in first: {only1}; only in second: {only2}"

"""Integral Chevalley bases for G2 and F4 with the fixed structure-constant
tables, adjoint one-parameter subgroups via divided powers, and coadjoint
matrices over small finite fields.

The positive-pair constants are pinned to the published table; every other
constant follows from antisymmetry, N(-a,-b) = -N(a,b), and the three-root
identity N(a,b)/(c,c) = N(b,c)/(a,a) for a+b+c = 0.  An exhaustive integer
Jacobi check certifies global consistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstructionError
from .gf import GF
from .rootsys import Root, RootSystem, add, f4, g2, neg

# N_{a,b} for every unordered special pair of positive roots, keyed by names.
G2_CONSTANTS = {
    ("a", "b"): 1,
    ("a", "ab"): 2,
    ("a", "2ab"): 3,
    ("b", "3ab"): -1,
    ("ab", "2ab"): 3,
}

_F4_PLUS1 = (
    "p,q p,qr p,q2r p,p3q4r2s p,qrs p,q2rs p,q2r2s q,rs q,pq2r q,pq2rs "
    "q,pq2r2s q,r q,p2q4r2s r,s r,qrs r,pqrs r,p2q2rs pq,rs pq,p2q4r2s "
    "s,q2r s,pq2r s,p2q2r rs,pqr rs,p2q2r qr,pqrs qr,pq2r2s q2r,pq2r2s "
    "q2r,p2q2r2s pq2r,p2q2r2s pqr,q2rs qrs,pq2rs"
)
_F4_MINUS1 = (
    "r,pq r,p2q2r2s s,qr s,pqr s,p2q3rs pq,q2r pq,q2rs pq,q2r2s qr,rs "
    "qr,pq2rs rs,p2q2rs q2r,pqrs pqr,q2r2s pqr,qrs pq2r,q2r2s qrs,pq2r "
    "pqrs,q2rs p2q2r,pq2r2s p2q2r,q2r2s"
)
_F4_MINUS2 = (
    "r,pqr r,qr r,p2q3r2s qr,p2q3r2s qr,pqr rs,pqrs rs,qrs pqr,p2q3r2s "
    "qrs,pqrs q2rs,pq2rs q2rs,p2q2rs pq2rs,p2q2rs"
)
_F4_PLUS2 = "s,pq2rs s,p2q2rs s,q2rs rs,p2q3rs qrs,p2q3rs pqrs,p2q3rs"

F4_CONSTANTS = {}
for _txt, _val in ((_F4_PLUS1, 1), (_F4_MINUS1, -1), (_F4_MINUS2, -2), (_F4_PLUS2, 2)):
    for _pair in _txt.split():
        _a, _b = _pair.split(",")
        F4_CONSTANTS[(_a, _b)] = _val


@dataclass
class ChevalleyRep:
    rs: RootSystem
    p: int  # the bad characteristic the group is studied at
    basis: list  # ("h", i) or ("e", root)
    index: dict
    pos_pairs: dict  # (a, b) ordered positive pair -> N integer

    @property
    def dim(self) -> int:
        return len(self.basis)


def build_lie(group: str) -> ChevalleyRep:
    """Construct the bracket data for "G2p3" or "F4p2"; verifies the listed
    constants cover exactly the special positive pairs and that |N| matches
    the root-string length."""
    if group == "G2p3":
        rs, p, listed = g2(), 3, G2_CONSTANTS
    elif group == "F4p2":
        rs, p, listed = f4(), 2, F4_CONSTANTS
    else:
        raise ConstructionError(f"unknown group {group!r}")

    pos_pairs: dict = {}
    for (na, nb), val in listed.items():
        a, b = rs.parse_name(na), rs.parse_name(nb)
        if not rs.is_root(add(a, b)):
            raise ConstructionError(f"listed pair {na},{nb} does not sum to a root")
        if (a, b) in pos_pairs or (b, a) in pos_pairs:
            raise ConstructionError(f"duplicate listed pair {na},{nb}")
        pos_pairs[(a, b)] = val
        pos_pairs[(b, a)] = -val

    expected = {
        (a, b)
        for i, a in enumerate(rs.positive)
        for b in rs.positive[i + 1 :]
        if rs.is_root(add(a, b))
    }
    have = {tuple(sorted(k)) for k in pos_pairs}
    missing = {k for k in expected if tuple(sorted(k)) not in have}
    extra = have - {tuple(sorted(k)) for k in expected}
    if missing or extra:
        raise ConstructionError(
            f"constant table mismatch: missing {missing}, extra {extra}"
        )
    for (a, b), val in pos_pairs.items():
        if abs(val) != rs.string_p(a, b) + 1:
            raise ConstructionError(
                f"|N| != p+1 for pair {rs.name_of(a)},{rs.name_of(b)}"
            )

    basis: list = [("h", i) for i in range(rs.rank)]
    basis += [("e", r) for r in rs.positive]
    basis += [("e", neg(r)) for r in rs.positive]
    index = {bkey: i for i, bkey in enumerate(basis)}
    return ChevalleyRep(rs, p, basis, index, pos_pairs)


def n_constant(rep: ChevalleyRep, a: Root, b: Root) -> int:
    """N_{a,b} for any roots a, b with a+b a root."""
    rs = rep.rs
    c = add(a, b)
    if not rs.is_root(c):
        raise ValueError("a+b is not a root")
    apos = sum(a) > 0
    bpos = sum(b) > 0
    if apos and bpos:
        return rep.pos_pairs[(a, b)]
    if not apos and not bpos:
        return -rep.pos_pairs[(neg(a), neg(b))]
    # mixed signs: use N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b), c = -a-b
    return _mixed(rep, a, b)


def _mixed(rep: ChevalleyRep, a: Root, b: Root) -> int:
    rs = rep.rs
    c = neg(add(a, b))
    if sum(add(a, b)) > 0:
        val = Fraction(n_constant(rep, b, c)) * rs.inner(c, c) / rs.inner(a, a)
    else:
        val = Fraction(n_constant(rep, c, a)) * rs.inner(c, c) / rs.inner(b, b)
    if val.denominator != 1:
        raise ConstructionError(f"non-integral derived constant at {a},{b}")
    return int(val)


def bracket_basis(rep: ChevalleyRep, i: int, j: int) -> dict[int, int]:
    """[basis_i, basis_j] as a sparse integer vector."""
    ki, kj = rep.basis[i], rep.basis[j]
    rs = rep.rs
    if ki[0] == "h" and kj[0] == "h":
        return {}
    if ki[0] == "h":
        return _scale({j: 1}, rs.pairing(ki[1], kj[1]))
    if kj[0] == "h":
        return _scale({i: 1}, -rs.pairing(kj[1], ki[1]))
    a, b = ki[1], kj[1]
    if add(a, b) == tuple([0] * rs.rank):
        sign = 1 if sum(a) > 0 else -1
        pos = a if sum(a) > 0 else b
        return _scale(
            {rep.index[("h", t)]: c for t, c in enumerate(rs.coroot_coeffs(pos)) if c},
            sign,
        )
    if rs.is_root(add(a, b)):
        return {rep.index[("e", add(a, b))]: n_constant(rep, a, b)}
    return {}


def _scale(vec: dict[int, int], c: int) -> dict[int, int]:
    return {k: c * v for k, v in vec.items() if c * v}


def bracket(rep: ChevalleyRep, x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, ci in x.items():
        for j, cj in y.items():
            for k, ck in bracket_basis(rep, i, j).items():
                v = out.get(k, 0) + ci * cj * ck
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    return out


def check_jacobi(rep: ChevalleyRep) -> None:
    """Exhaustive integer Jacobi identity on all basis triples."""
    dim = rep.dim
    table = [[bracket_basis(rep, i, j) for j in range(dim)] for i in range(dim)]

    def br(vec: dict, j: int) -> dict:
        out: dict[int, int] = {}
        for i, ci in vec.items():
            for k, ck in table[i][j].items():
                v = out.get(k, 0) + ci * ck
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return out

    for i in range(dim):
        for j in range(i + 1, dim):
            bij = table[i][j]
            for k in range(j + 1, dim):
                acc: dict[int, int] = {}
                for term in (
                    br(table[j][k], i),
                    br({kk: -vv for kk, vv in table[i][k].items()}, j),
                    br(bij, k),
                ):
                    for kk, vv in term.items():
                        v = acc.get(kk, 0) + vv
                        if v:
                            acc[kk] = v
                        elif kk in acc:
                            del acc[kk]
                if acc:
                    raise ConstructionError(
                        f"Jacobi fails on triple {rep.basis[i]},{rep.basis[j]},{rep.basis[k]}"
                    )


def check_listed_constants(rep: ChevalleyRep) -> None:
    """Every published constant must match the built table exactly."""
    listed = G2_CONSTANTS if rep.rs.name == "G2" else F4_CONSTANTS
    for (na, nb), val in listed.items():
        a, b = rep.rs.parse_name(na), rep.rs.parse_name(nb)
        if n_constant(rep, a, b) != val:
            raise ConstructionError(f"constant N_{na},{nb} deviates from the table")


def ad_matrix(rep: ChevalleyRep, root: Root) -> list[list[int]]:
    """Integer matrix of ad(e_root) in the Chevalley basis (rows x cols)."""
    dim = rep.dim
    ei = rep.index[("e", root)]
    mat = [[0] * dim for _ in range(dim)]
    for j in range(dim):
        for k, c in bracket_basis(rep, ei, j).items():
            mat[k][j] = c
    return mat


def _mat_mul_int(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(n):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(n):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def divided_powers(rep: ChevalleyRep, root: Root) -> list[list[list[int]]]:
    """[(ad e)^i / i! for i = 0..] over the integers, until the zero matrix;
    raises if a division is inexact."""
    dim = rep.dim
    ad = ad_matrix(rep, root)
    out = [[[1 if i == j else 0 for j in range(dim)] for i in range(dim)]]
    power = ad
    fact = 1
    i = 1
    while any(any(row) for row in power):
        if any(c % fact for row in power for c in row):
            raise ConstructionError(f"divided power {i} not integral for {root}")
        out.append([[c // fact for c in row] for row in power])
        i += 1
        fact *= i
        power = _mat_mul_int(power, ad)
        if i > dim + 2:
            raise ConstructionError(f"ad(e_{root}) is not nilpotent")
    return out


def ad_one_param(rep: ChevalleyRep, root: Root, t: int, field: GF) -> list[list[int]]:
    """Ad(x_root(t)) over F_q as a dense matrix of field elements."""
    dps = divided_powers(rep, root)
    dim = rep.dim
    out = [[0] * dim for _ in range(dim)]
    tp = 1  # t^i in the field
    for i, mat in enumerate(dps):
        if i:
            tp = field.mul(tp, t)
        if tp == 0:
            break
        for r in range(dim):
            row = mat[r]
            for c in range(dim):
                if row[c]:
                    out[r][c] = field.add(out[r][c], field.mul(tp, field.from_int(row[c])))
    return out


def coadjoint_matrix(rep: ChevalleyRep, root: Root, t: int, field: GF) -> list[list[int]]:
    """Matrix of the dual action of x_root(t) on evaluation coordinates:
    the transpose of Ad(x_root(-t))."""
    m = ad_one_param(rep, root, field.neg(t), field)
    dim = rep.dim
    return [[m[c][r] for c in range(dim)] for r in range(dim)]


def dual_index(rep: ChevalleyRep, root: Root) -> int:
    """State coordinate carrying the e'_root component (evaluation at
    e_{-root})."""
    return rep.index[("e", neg(root))]


def coadjoint_formula_coeffs(rep: ChevalleyRep, a: Root, b: Root) -> list[tuple[int, Root, int]]:
    """The exact coefficients of x_a(t).e'_b on positive-root duals:
    [(i, i*a+b, +-M_{a,-ia-b,i})] with the sign (-1)^i folded in."""
    rs = rep.rs
    out = [(0, b, 1)]
    i = 1
    cur = add(a, b)
    while rs.is_root(cur):
        num = 1
        for k in range(i):
            num *= n_constant(rep, a, add(_smul(a, -(i - k)), neg(b)))
        fact = 1
        for k in range(2, i + 1):
            fact *= k
        if num % fact:
            raise ConstructionError("formula coefficient is not integral")
        sign = -1 if i % 2 else 1
        out.append((i, cur, sign * (num // fact)))
        i += 1
        cur = add(cur, a)
    return out


def _smul(a: Root, c: int) -> Root:
    return tuple(c * x for x in a)


def check_coadjoint_formula(rep: ChevalleyRep, q: int) -> None:
    """Compare every coadjoint matrix column on n* against the closed
    formula, for all positive (a, b) and all t in F_q."""
    field = GF(q)
    if field.p != rep.p:
        raise ValueError(f"q={q} is not a power of the characteristic {rep.p}")
    for a in rep.rs.positive:
        coeff_cache = {b: coadjoint_formula_coeffs(rep, a, b) for b in rep.rs.positive}
        for t in field.elements():
            co = coadjoint_matrix(rep, a, t, field)
            for b in rep.rs.positive:
                expected = [0] * rep.dim
                for i, target, coef in coeff_cache[b]:
                    tp = 1
                    for _ in range(i):
                        tp = field.mul(tp, t)
                    expected[dual_index(rep, target)] = field.mul(
                        tp, field.from_int(coef)
                    )
                col = dual_index(rep, b)
                actual = [co[r][col] for r in range(rep.dim)]
                if actual != expected:
                    raise ConstructionError(
                        f"coadjoint column of e'_{rep.rs.name_of(b)} under "
                        f"x_{rep.rs.name_of(a)}({t}) deviates from the formula"
                    )


def check_one_param_additivity(rep: ChevalleyRep, q: int) -> None:
    field = GF(q)
    for root in rep.rs.positive[: rep.rs.rank] + tuple(
        neg(r) for r in rep.rs.positive[: rep.rs.rank]
    ):
        mats = {t: ad_one_param(rep, root, t, field) for t in field.elements()}
        ident = [[1 if i == j else 0 for j in range(rep.dim)] for i in range(rep.dim)]
        if mats[0] != ident:
            raise ConstructionError(f"Ad(x({0})) is not the identity for {root}")
        for t in field.elements():
            for s in field.elements():
                prod = _gf_mat_mul(mats[t], mats[s], field)
                if prod != mats[field.add(t, s)]:
                    raise ConstructionError(
                        f"one-parameter additivity fails for {root} at {t},{s}"
                    )


def _gf_mat_mul(a, b, field: GF):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for t in range(n):
            c = a[i][t]
            if c:
                bt = b[t]
                oi = out[i]
                for j in range(n):
                    if bt[j]:
                        oi[j] = field.add(oi[j], field.mul(c, bt[j]))
    return out

"""Orbit enumeration over finite fields: coadjoint BFS from table
representatives and the full nilpotent census of G2(F_3).

Generators are the one-parameter elements of the simple root subgroups and
their opposites; these generate the whole Chevalley group.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .chevalley import ChevalleyRep, build_lie, coadjoint_matrix, dual_index, neg
from .gf import GF
from .tables import _GROUPS, materialize_rep, row_by_label

_LIE_CACHE: dict = {}


def lie(group: str) -> ChevalleyRep:
    if group not in _LIE_CACHE:
        _LIE_CACHE[group] = build_lie(_GROUPS[group])
    return _LIE_CACHE[group]


def coadjoint_generators(group: str, q: int) -> list[list[list[int]]]:
    """Dense matrices of the dual action of x_{+-alpha_i}(c), alpha_i simple,
    c in F_q^x."""
    rep = lie(group)
    field = GF(q)
    gens = []
    for i in range(rep.rs.rank):
        simple = rep.rs.simple[i]
        for root in (simple, neg(simple)):
            for c in range(1, q):
                gens.append(coadjoint_matrix(rep, root, c, field))
    return gens


def _gf2_cols(mat: list[list[int]]) -> list[int]:
    dim = len(mat)
    cols = [0] * dim
    for i in range(dim):
        for j in range(dim):
            if mat[i][j]:
                cols[j] |= 1 << i
    return cols


def pack_state_gf2(coords: list[int]) -> int:
    out = 0
    for i, c in enumerate(coords):
        if c:
            out |= 1 << i
    return out


@dataclass
class BFSResult:
    size: int
    capped: bool


def orbit_bfs(group: str, q: int, coords: list[int], cap=None, visited=None) -> BFSResult:
    """Exact coadjoint orbit size of a state vector over F_q (q = 2 or 3);
    `visited` (from kernels.shared_visited()) may be shared across calls to
    certify disjointness: a start already seen returns size 0."""
    rep = lie(group)
    if q == rep.p == 2:
        gens = [_gf2_cols(m) for m in coadjoint_generators(group, q)]
        size, capped = _kernels.bfs_gf2(
            gens, rep.dim, pack_state_gf2(coords), cap, visited
        )
        return BFSResult(size, capped)
    if q == rep.p == 3:
        gens = coadjoint_generators(group, q)
        size, capped = _kernels.bfs_gf3(gens, rep.dim, coords, cap, visited)
        return BFSResult(size, capped)
    raise ValueError(f"BFS supports prime q matching the characteristic, not q={q}")


def orbit_bfs_row(group: str, label: str, q: int, cap=None, visited=None) -> BFSResult:
    row = row_by_label(group, label)
    return orbit_bfs(group, q, materialize_rep(row, q, lie(group)), cap, visited)


def nilpotent_sweep_g2(q: int = 3) -> dict:
    """Census of all coadjoint orbits meeting n*(F_3): BFS from every vector
    supported on the six positive-root duals, memoized across seeds."""
    if q != 3:
        raise ValueError("the census is implemented for G2 at q=3")
    rep = lie("G2")
    gens = coadjoint_generators("G2", q)
    support = [dual_index(rep, r) for r in rep.rs.positive]
    sizes = _kernels.census_gf3(gens, rep.dim, support)
    out: dict[int, int] = {}
    for s in sizes:
        out[s] = out.get(s, 0) + 1
    return {
        "group": "G2",
        "q": q,
        "orbit_sizes": sorted(sizes, reverse=True),
        "multiplicity": out,
        "total": sum(sizes),
    }


def expected_orbit_size(group: str, label: str, q: int) -> int:
    """|G|/|Z| for one row, evaluated exactly at q."""
    from .tables import group_order

    row = row_by_label(group, label)
    return (group_order(group) / row.centralizer)(q)

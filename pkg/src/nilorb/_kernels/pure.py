"""Pure-Python kernel: reference implementation of the hot loops.

The form sweeps defer to the generic definitions in `nilorb.oracle`; the BFS
routines use chunked lookup tables (GF(2)) or digitwise matvec (GF(3)).
Slow but dependency-free; the compiled kernel must agree bit for bit.
"""

from __future__ import annotations

CHUNK = 13


def shared_visited(expected=None):
    """A visited-state container shareable across BFS calls."""
    return set()


def sweep_forms(type_: str, n: int) -> dict:
    from ..oracle import form_count, invariant_of_index
    from ..symbols import SymbolB, SymbolC

    out: dict = {}
    for idx in range(form_count(type_, n)):
        inv = invariant_of_index(type_, n, idx)
        if inv is None:
            continue
        if isinstance(inv, SymbolC):
            key = (inv.lam, inv.chi)
        elif isinstance(inv, SymbolB):
            key = (inv.m, inv.lam, inv.chi)
        else:
            key = inv
        out[key] = out.get(key, 0) + 1
    return out


def _chunk_tables(cols: list[int], dim: int) -> list[list[int]]:
    nchunks = (dim + CHUNK - 1) // CHUNK
    tables = []
    for c in range(nchunks):
        lo = c * CHUNK
        width = min(CHUNK, dim - lo)
        tab = [0] * (1 << width)
        for v in range(1, 1 << width):
            low = v & -v
            tab[v] = tab[v ^ low] ^ cols[lo + low.bit_length() - 1]
        tables.append(tab)
    return tables


def bfs_gf2(gen_cols: list[list[int]], dim: int, start: int, cap=None, visited=None):
    """Orbit of `start` under the group generated by the given GF(2) maps.

    Returns (size, capped).  `visited` may be shared across calls; a start
    already visited yields size 0.
    """
    if visited is None:
        visited = set()
    if start in visited:
        return 0, False
    mask = (1 << CHUNK) - 1
    tables = [_chunk_tables(cols, dim) for cols in gen_cols]
    nchunks = (dim + CHUNK - 1) // CHUNK
    visited.add(start)
    frontier = [start]
    size = 1
    while frontier:
        nxt = []
        for x in frontier:
            for tabs in tables:
                y = 0
                v = x
                for c in range(nchunks):
                    y ^= tabs[c][v & mask]
                    v >>= CHUNK
                if y not in visited:
                    visited.add(y)
                    nxt.append(y)
                    size += 1
                    if cap is not None and size > cap:
                        return size, True
        frontier = nxt
    return size, False


def pack3(coords, dim: int) -> int:
    out = 0
    for i in range(dim - 1, -1, -1):
        out = out * 3 + coords[i]
    return out


def unpack3(x: int, dim: int) -> list[int]:
    out = [0] * dim
    for i in range(dim):
        x, out[i] = divmod(x, 3)
    return out


def _apply3(mat, coords, dim):
    return [sum(mat[i][j] * coords[j] for j in range(dim)) % 3 for i in range(dim)]


def bfs_gf3(gen_mats, dim: int, start_coords, cap=None, visited=None):
    """Orbit of a GF(3) state under the given matrices; states are packed in
    base 3 inside `visited`."""
    if visited is None:
        visited = set()
    start = pack3(start_coords, dim)
    if start in visited:
        return 0, False
    visited.add(start)
    frontier = [list(start_coords)]
    size = 1
    while frontier:
        nxt = []
        for x in frontier:
            for mat in gen_mats:
                y = _apply3(mat, x, dim)
                key = pack3(y, dim)
                if key not in visited:
                    visited.add(key)
                    nxt.append(y)
                    size += 1
                    if cap is not None and size > cap:
                        return size, True
        frontier = nxt
    return size, False


def census_gf3(gen_mats, dim: int, support: list[int]):
    """BFS from every GF(3) vector supported on the given coordinate
    positions, with a shared visited set; returns orbit sizes in seed order."""
    visited: set[int] = set()
    sizes = []
    k = len(support)
    for seed_idx in range(3**k):
        digits = unpack3(seed_idx, k)
        coords = [0] * dim
        for pos, d in zip(support, digits):
            coords[pos] = d
        size, capped = bfs_gf3(gen_mats, dim, coords, cap=None, visited=visited)
        assert not capped
        if size:
            sizes.append(size)
    return sizes

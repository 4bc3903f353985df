# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: exhaustive form sweeps over F2 and packed-state orbit BFS
over F2/F3.  Semantics must match nilorb._kernels.pure exactly."""

from libc.stdlib cimport calloc, free, malloc
from libc.stdint cimport uint32_t, uint64_t

CHUNK = 13

cdef int MAXD = 16


cdef inline int parity64(uint64_t x) nogil:
    x ^= x >> 32
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return <int>(x & 1)


cdef inline uint64_t matvec(uint64_t *cols, uint64_t x) nogil:
    cdef uint64_t y = 0
    cdef int i = 0
    while x:
        if x & 1:
            y ^= cols[i]
        x >>= 1
        i += 1
    return y


cdef int rank_cols(uint64_t *cols, int k) nogil:
    """Rank of k vectors; destroys the buffer."""
    cdef int r = 0, i, j
    cdef uint64_t piv
    for i in range(k):
        piv = cols[i]
        for j in range(r):
            if piv ^ cols[j] < piv:
                piv ^= cols[j]
        if piv:
            cols[r] = piv
            r += 1
            # keep reduced: not required for rank
    return r


cdef int kernel_cols(uint64_t *cols, int dim_in, uint64_t *out) nogil:
    """Kernel basis (as input-combination masks) of the column map."""
    cdef uint64_t vals[64]
    cdef uint64_t combos[64]
    cdef int nred = 0, nout = 0, i, j
    cdef uint64_t v, c
    for i in range(dim_in):
        v = cols[i]
        c = (<uint64_t>1) << i
        for j in range(nred):
            if v ^ vals[j] < v:
                v ^= vals[j]
                c ^= combos[j]
        if v:
            vals[nred] = v
            combos[nred] = c
            nred += 1
        else:
            out[nout] = c
            nout += 1
    return nout


cdef int kernel_rows(uint64_t *rows, int nrows, int dim, uint64_t *out) nogil:
    """Basis of {x: parity(x & row) == 0 for all rows}."""
    cdef uint64_t ech[64]
    cdef int piv[64]
    cdef int ne = 0, i, j, f, p
    cdef uint64_t r
    for i in range(nrows):
        r = rows[i]
        for j in range(ne):
            if r ^ ech[j] < r:
                r ^= ech[j]
        if r:
            ech[ne] = r
            ne += 1
            j = ne - 1
            while j > 0 and ech[j] > ech[j - 1]:
                ech[j], ech[j - 1] = ech[j - 1], ech[j]
                j -= 1
    # back-substitute to fully reduced form so pivot bits are unique
    for i in range(ne):
        for j in range(ne):
            if i != j and ech[i] ^ ech[j] < ech[i]:
                ech[i] ^= ech[j]
    for i in range(ne):
        p = 63
        while not (ech[i] >> p) & 1:
            p -= 1
        piv[i] = p
    cdef int nout = 0
    cdef uint64_t v
    for f in range(dim):
        for i in range(ne):
            if piv[i] == f:
                break
        else:
            v = (<uint64_t>1) << f
            for i in range(ne):
                if (ech[i] >> f) & 1:
                    v |= (<uint64_t>1) << piv[i]
            out[nout] = v
            nout += 1
    return nout


cdef int solve_rows_c(uint64_t *rows, int *rhs, int nrows, int dim, uint64_t *out_x) nogil:
    """x with parity(x & rows[i]) == rhs[i]; returns 1 on success."""
    cdef uint64_t ech[64]
    cdef int echb[64]
    cdef int ne = 0, i, j, p
    cdef uint64_t r
    cdef int b
    for i in range(nrows):
        r = rows[i]
        b = rhs[i]
        for j in range(ne):
            if r ^ ech[j] < r:
                r ^= ech[j]
                b ^= echb[j]
        if r:
            ech[ne] = r
            echb[ne] = b
            ne += 1
            j = ne - 1
            while j > 0 and ech[j] > ech[j - 1]:
                ech[j], ech[j - 1] = ech[j - 1], ech[j]
                echb[j], echb[j - 1] = echb[j - 1], echb[j]
                j -= 1
        elif b:
            return 0
    cdef uint64_t x = 0
    for i in range(ne - 1, -1, -1):
        p = 63
        while not (ech[i] >> p) & 1:
            p -= 1
        if parity64(x & ech[i]) != echb[i]:
            x ^= (<uint64_t>1) << p
    out_x[0] = x
    return 1


cdef inline int qeval(uint64_t diag, uint64_t *upper, uint64_t v) nogil:
    cdef int acc = parity64(diag & v)
    cdef uint64_t x = v
    cdef int i = 0
    while x:
        if x & 1:
            acc ^= parity64(upper[i] & v)
        x >>= 1
        i += 1
    return acc


cdef int form_zero_on(uint64_t diag, uint64_t *upper, uint64_t *bcols,
                      uint64_t *basis, int nb) nogil:
    cdef int i, j
    for i in range(nb):
        if qeval(diag, upper, basis[i]):
            return 0
        for j in range(i + 1, nb):
            if parity64(basis[i] & matvec(bcols, basis[j])):
                return 0
    return 1


cdef int jordan_chi(uint64_t *tcols, int dim, uint64_t qdiag, uint64_t *qupper,
                    uint64_t *bcols, int *lam_out, int *chi_out) nogil:
    """Jordan type of a nilpotent T plus chi at each distinct part, computed
    against the form (qdiag, qupper) whose polarization has columns bcols.
    Returns the number of parts, or -1 if T is not nilpotent.
    lam_out gets all parts (descending); chi_out gets one value per distinct
    part, aligned with first occurrences."""
    cdef uint64_t pws[17 * 16]  # powers T^0..T^dim as column blocks
    cdef uint64_t buf[16]
    cdef int conj[17]
    cdef int i, j, k, r, rprev, e
    for i in range(dim):
        pws[i] = (<uint64_t>1) << i
    rprev = dim
    e = 0
    k = 0
    while rprev > 0:
        k += 1
        if k > dim:
            return -1
        for i in range(dim):
            pws[k * dim + i] = matvec(tcols, pws[(k - 1) * dim + i])
        for i in range(dim):
            buf[i] = pws[k * dim + i]
        r = rank_cols(buf, dim)
        if r == rprev:
            return -1
        conj[k] = rprev - r
        rprev = r
        e = k
    # conjugate: lambda_i = #{k: conj[k] >= i}
    cdef int nparts = conj[1] if e >= 1 else 0
    for i in range(nparts):
        lam_out[i] = 0
        for k in range(1, e + 1):
            if conj[k] >= i + 1:
                lam_out[i] += 1
    # chi at distinct parts
    cdef uint64_t kerb[16]
    cdef uint64_t imgs[16]
    cdef int nk, l, ndist = 0, p, prev = -1, good
    for i in range(nparts):
        p = lam_out[i]
        if p == prev:
            continue
        prev = p
        for j in range(dim):
            buf[j] = pws[p * dim + j]
        nk = kernel_cols(buf, dim, kerb)
        for l in range(p + 1):
            for j in range(nk):
                imgs[j] = matvec(&pws[l * dim], kerb[j])
            good = form_zero_on(qdiag, qupper, bcols, imgs, nk)
            if good:
                chi_out[ndist] = l
                break
        ndist += 1
    return nparts


cdef class VisitedSet:
    """Open-addressing hash set of uint64 states (linear probing)."""
    cdef uint64_t *table
    cdef uint64_t capacity, used, mask

    def __cinit__(self, uint64_t capacity=1 << 16):
        cdef uint64_t cap = 1
        while cap < capacity:
            cap <<= 1
        self.capacity = cap
        self.mask = cap - 1
        self.used = 0
        self.table = <uint64_t *>malloc(cap * sizeof(uint64_t))
        if not self.table:
            raise MemoryError()
        cdef uint64_t i
        for i in range(cap):
            self.table[i] = <uint64_t>-1

    def __dealloc__(self):
        if self.table:
            free(self.table)

    def __len__(self):
        return self.used

    cdef int insert(self, uint64_t key) except -1:
        """1 if newly inserted, 0 if already present."""
        if (self.used + 1) * 10 > self.capacity * 7:
            self._grow()
        cdef uint64_t h = key * <uint64_t>0x9E3779B97F4A7C15
        h = (h >> 29) ^ h
        cdef uint64_t idx = h & self.mask
        while True:
            if self.table[idx] == <uint64_t>-1:
                self.table[idx] = key
                self.used += 1
                return 1
            if self.table[idx] == key:
                return 0
            idx = (idx + 1) & self.mask

    cdef _grow(self):
        cdef uint64_t *old = self.table
        cdef uint64_t oldcap = self.capacity
        self.capacity <<= 1
        self.mask = self.capacity - 1
        self.table = <uint64_t *>malloc(self.capacity * sizeof(uint64_t))
        if not self.table:
            self.table = old
            self.capacity = oldcap
            self.mask = oldcap - 1
            raise MemoryError()
        cdef uint64_t i
        for i in range(self.capacity):
            self.table[i] = <uint64_t>-1
        self.used = 0
        for i in range(oldcap):
            if old[i] != <uint64_t>-1:
                self.insert(old[i])
        free(old)

    def add(self, key):
        self.insert(key)

    def __contains__(self, key):
        cdef uint64_t k = key
        cdef uint64_t h = k * <uint64_t>0x9E3779B97F4A7C15
        h = (h >> 29) ^ h
        cdef uint64_t idx = h & self.mask
        while True:
            if self.table[idx] == <uint64_t>-1:
                return False
            if self.table[idx] == k:
                return True
            idx = (idx + 1) & self.mask


def shared_visited(expected=1 << 16):
    return VisitedSet(max(64, int(expected * 2)))


# ------------------------------------------------------------------ sweeps


cdef _key_from(int m, int *lam, int nparts, int *chi, int ndist, bint with_m):
    lam_t = tuple([lam[i] for i in range(nparts)])
    chi_t = tuple([chi[i] for i in range(ndist)])
    if with_m:
        return (m, lam_t, chi_t)
    return (lam_t, chi_t)


def sweep_forms(type_, int n):
    if type_ == "C":
        return _sweep_sp(n)
    if type_ == "B":
        return _sweep_odd(n)
    if type_ == "D":
        return _sweep_even(n)
    raise ValueError(type_)


cdef _pair_table(int d, int *pi, int *pj):
    cdef int i, j, k = 0
    for i in range(d):
        for j in range(i + 1, d):
            pi[k] = i
            pj[k] = j
            k += 1
    return k


cdef _sweep_sp(int n):
    cdef int d = 2 * n
    cdef int npairs = d * (d - 1) // 2
    cdef int pi[256]
    cdef int pj[256]
    _pair_table(d, pi, pj)
    cdef uint64_t nforms = (<uint64_t>1) << (d * (d + 1) // 2)
    cdef uint64_t idx, diag, rest, lowmask = ((<uint64_t>1) << n) - 1
    cdef uint64_t dmask = ((<uint64_t>1) << d) - 1
    cdef uint64_t upper[16]
    cdef uint64_t bcols[16]
    cdef uint64_t tcols[16]
    cdef int lam[16]
    cdef int chi[16]
    cdef int k, nparts, ndist, i
    out = {}
    for idx in range(nforms):
        diag = idx & dmask
        rest = idx >> d
        for i in range(d):
            upper[i] = 0
            bcols[i] = 0
        k = 0
        while rest:
            if rest & 1:
                upper[pi[k]] |= (<uint64_t>1) << pj[k]
                bcols[pi[k]] |= (<uint64_t>1) << pj[k]
                bcols[pj[k]] |= (<uint64_t>1) << pi[k]
            rest >>= 1
            k += 1
        for i in range(d):
            tcols[i] = ((bcols[i] >> n) | (bcols[i] << n)) & dmask
        nparts = jordan_chi(tcols, d, diag, upper, bcols, lam, chi)
        if nparts < 0:
            continue
        ndist = _ndistinct(lam, nparts)
        key = _key_from(0, lam, nparts, chi, ndist, False)
        out[key] = out.get(key, 0) + 1
    return out


cdef int _ndistinct(int *lam, int nparts) nogil:
    cdef int i, nd = 0, prev = -1
    for i in range(nparts):
        if lam[i] != prev:
            nd += 1
            prev = lam[i]
    return nd


cdef _sweep_even(int n):
    cdef int d = 2 * n
    cdef int pi[256]
    cdef int pj[256]
    _pair_table(d, pi, pj)
    cdef uint64_t nforms = (<uint64_t>1) << (d * (d - 1) // 2)
    cdef uint64_t idx, rest
    cdef uint64_t dmask = ((<uint64_t>1) << d) - 1
    cdef uint64_t qdiag = 0
    cdef uint64_t qupper[16]
    cdef uint64_t qbcols[16]
    cdef uint64_t bxicols[16]
    cdef uint64_t tcols[16]
    cdef int lam[16]
    cdef int chi[16]
    cdef int k, nparts, ndist, i
    for i in range(d):
        qupper[i] = 0
        qbcols[i] = 0
    for i in range(n):
        qupper[i] |= (<uint64_t>1) << (n + i)
        qbcols[i] |= (<uint64_t>1) << (n + i)
        qbcols[n + i] |= (<uint64_t>1) << i
    out = {}
    for idx in range(nforms):
        rest = idx
        for i in range(d):
            bxicols[i] = 0
        k = 0
        while rest:
            if rest & 1:
                bxicols[pi[k]] |= (<uint64_t>1) << pj[k]
                bxicols[pj[k]] |= (<uint64_t>1) << pi[k]
            rest >>= 1
            k += 1
        for i in range(d):
            tcols[i] = ((bxicols[i] >> n) | (bxicols[i] << n)) & dmask
        nparts = jordan_chi(tcols, d, qdiag, qupper, qbcols, lam, chi)
        if nparts < 0:
            continue
        ndist = _ndistinct(lam, nparts)
        key = _key_from(0, lam, nparts, chi, ndist, False)
        out[key] = out.get(key, 0) + 1
    return out


cdef _sweep_odd(int n):
    cdef int d = 2 * n + 1
    cdef int pi[256]
    cdef int pj[256]
    _pair_table(d, pi, pj)
    cdef uint64_t nforms = (<uint64_t>1) << (d * (d - 1) // 2)
    cdef uint64_t idx, rest
    cdef uint64_t rad = (<uint64_t>1) << (2 * n)
    cdef uint64_t lowm = ((<uint64_t>1) << n) - 1
    cdef uint64_t qdiag = rad
    cdef uint64_t qupper[16]
    cdef uint64_t qbcols[16]
    cdef uint64_t bxicols[16]
    cdef int i, k
    for i in range(d):
        qupper[i] = 0
        qbcols[i] = 0
    for i in range(n):
        qupper[i] |= (<uint64_t>1) << (n + i)
        qbcols[i] |= (<uint64_t>1) << (n + i)
        qbcols[n + i] |= (<uint64_t>1) << i

    cdef uint64_t chain[16]
    cdef uint64_t vs[16]
    cdef uint64_t us[16]
    cdef uint64_t rows[40]
    cdef int rhs[40]
    cdef uint64_t wb[16]
    cdef uint64_t ker[16]
    cdef uint64_t gramw[16]
    cdef uint64_t bxiw[16]
    cdef uint64_t twcols[16]
    cdef uint64_t qwupper[16]
    cdef uint64_t qwb[16]
    cdef uint64_t fx, y, part0, cand, best, qwdiag, lift_i, lift_j
    cdef int m, steps, nw, nk, found, nparts, ndist, j, t
    cdef int lam[16]
    cdef int chi[16]
    out = {}
    for idx in range(nforms):
        rest = idx
        for i in range(d):
            bxicols[i] = 0
        k = 0
        while rest:
            if rest & 1:
                bxicols[pi[k]] |= (<uint64_t>1) << pj[k]
                bxicols[pj[k]] |= (<uint64_t>1) << pi[k]
            rest >>= 1
            k += 1
        # v-chain from the radical vector
        chain[0] = rad
        m = -1
        for steps in range(n + 1):
            fx = matvec(bxicols, chain[steps])
            if fx == 0:
                m = steps
                break
            if fx & rad:
                break  # obstructed: not nilpotent
            y = ((fx & lowm) << n) | ((fx >> n) & lowm)
            if qeval(qdiag, qupper, y):
                y ^= rad
            chain[steps + 1] = y
        if m < 0:
            continue
        for i in range(m + 1):
            vs[i] = chain[m - i]
        # u-chain
        if m >= 1:
            for i in range(m + 1):
                rows[i] = matvec(qbcols, vs[i])
                rhs[i] = 1 if i == 0 else 0
            if not solve_rows_c(rows, rhs, m + 1, d, &part0):
                continue
            nk = kernel_rows(rows, m + 1, d, ker)
            found = 0
            for t in range(1 << nk):
                cand = part0
                for j in range(nk):
                    if (t >> j) & 1:
                        cand ^= ker[j]
                if qeval(qdiag, qupper, cand) == 0:
                    found = 1
                    break
            if not found:
                continue
            us[0] = cand
            for i in range(1, m):
                fx = matvec(bxicols, us[i - 1])
                if fx & rad:
                    found = 0
                    break
                y = ((fx & lowm) << n) | ((fx >> n) & lowm)
                if qeval(qdiag, qupper, y):
                    y ^= rad
                us[i] = y
            if not found:
                continue
        # W basis
        if m == 0:
            nw = 0
            for i in range(d):
                if i != 2 * n:
                    wb[nw] = (<uint64_t>1) << i
                    nw += 1
        else:
            k = 0
            for i in range(m):
                rows[k] = matvec(qbcols, us[i])
                k += 1
            for i in range(m + 1):
                rows[k] = matvec(qbcols, vs[i])
                k += 1
            rows[k] = matvec(bxicols, us[m - 1])
            k += 1
            nw = kernel_rows(rows, k, d, wb)
        if nw != d - 2 * m - 1:
            continue
        # restricted forms on W
        qwdiag = 0
        for i in range(nw):
            if qeval(qdiag, qupper, wb[i]):
                qwdiag |= (<uint64_t>1) << i
            qwupper[i] = 0
            qwb[i] = 0
            gramw[i] = 0
            bxiw[i] = 0
        for i in range(nw):
            lift_i = wb[i]
            for j in range(nw):
                lift_j = wb[j]
                if parity64(lift_i & matvec(qbcols, lift_j)):
                    gramw[i] |= (<uint64_t>1) << j
                    if j > i:
                        qwupper[i] |= (<uint64_t>1) << j
                    qwb[i] |= (<uint64_t>1) << j
                if parity64(lift_i & matvec(bxicols, lift_j)):
                    bxiw[i] |= (<uint64_t>1) << j
        for i in range(nw):
            rows[i] = gramw[i]
        if rank_cols(rows, nw) != nw:
            continue  # beta degenerates on W: structure absent
        k = 0
        for i in range(m + 1):
            rows[k] = vs[i]
            k += 1
        for i in range(m):
            rows[k] = us[i]
            k += 1
        for i in range(nw):
            rows[k] = wb[i]
            k += 1
        if rank_cols(rows, k) != d:
            continue  # span{u, v} + W is not all of V
        # T_W columns: solve gram * x = bxi column
        found = 1
        for j in range(nw):
            for i in range(nw):
                rows[i] = gramw[i]
                rhs[i] = 1 if (bxiw[i] >> j) & 1 else 0
            if not solve_rows_c(rows, rhs, nw, nw, &y):
                found = 0
                break
            twcols[j] = y
        if not found:
            continue
        if nw > 0:
            nparts = jordan_chi(twcols, nw, qwdiag, qwupper, qwb, lam, chi)
            if nparts < 0:
                continue
        else:
            nparts = 0
        ndist = _ndistinct(lam, nparts)
        # chi(p) = max(p - m, chi_W(p)) on distinct parts
        k = 0
        t = -1
        for i in range(nparts):
            if lam[i] != t:
                t = lam[i]
                if t - m > chi[k]:
                    chi[k] = t - m
                k += 1
        key = _key_from(m, lam, nparts, chi, ndist, True)
        out[key] = out.get(key, 0) + 1
    return out


# -------------------------------------------------------------------- BFS


def bfs_gf2(gen_cols, int dim, start, cap=None, visited=None):
    """Orbit of `start`; `visited` is a VisitedSet shared across calls."""
    cdef int ngen = len(gen_cols)
    cdef int nchunks = (dim + 12) // 13
    cdef uint64_t *tables = <uint64_t *>malloc(
        <size_t>ngen * nchunks * 8192 * sizeof(uint64_t))
    if not tables:
        raise MemoryError()
    cdef uint64_t *colbuf = <uint64_t *>malloc(dim * sizeof(uint64_t))
    cdef int g, c, width, lo, i
    cdef uint64_t v, low
    cdef uint64_t base
    try:
        for g in range(ngen):
            cols = gen_cols[g]
            for i in range(dim):
                colbuf[i] = cols[i]
            for c in range(nchunks):
                lo = c * 13
                width = min(13, dim - lo)
                base = (<uint64_t>g * nchunks + c) * 8192
                tables[base] = 0
                for v in range(1, (<uint64_t>1) << width):
                    low = v & (~v + 1)
                    i = 0
                    while not (low >> i) & 1:
                        i += 1
                    tables[base + v] = tables[base + (v ^ low)] ^ colbuf[lo + i]
        return _bfs2_run(tables, ngen, nchunks, dim, start, cap, visited)
    finally:
        free(tables)
        free(colbuf)


cdef _bfs2_run(uint64_t *tables, int ngen, int nchunks, int dim, start, cap, visited):
    cdef VisitedSet vis
    if visited is None:
        vis = VisitedSet(1 << 16)
    else:
        vis = <VisitedSet>visited
    cdef uint64_t s = start
    if not vis.insert(s):
        return 0, False
    cdef uint64_t capv = <uint64_t>cap if cap is not None else <uint64_t>-1
    cdef uint64_t size = 1
    cdef uint64_t *frontier = <uint64_t *>malloc(1024 * sizeof(uint64_t))
    cdef uint64_t fcap = 1024, fl = 0
    cdef uint64_t *nxt = <uint64_t *>malloc(1024 * sizeof(uint64_t))
    cdef uint64_t ncap = 1024, nl = 0
    cdef uint64_t x, y, i
    cdef int g, c
    cdef bint capped = False
    frontier[0] = s
    fl = 1
    try:
        while fl and not capped:
            nl = 0
            for i in range(fl):
                x = frontier[i]
                for g in range(ngen):
                    y = 0
                    for c in range(nchunks):
                        y ^= tables[(<uint64_t>g * nchunks + c) * 8192
                                    + ((x >> (13 * c)) & 8191)]
                    if vis.insert(y):
                        size += 1
                        if size > capv:
                            capped = True
                            break
                        if nl == ncap:
                            ncap <<= 1
                            nxt = <uint64_t *>_regrow(nxt, nl, ncap)
                        nxt[nl] = y
                        nl += 1
                if capped:
                    break
            frontier, nxt = nxt, frontier
            fl = nl
            fcap, ncap = ncap, fcap
        return int(size), bool(capped)
    finally:
        free(frontier)
        free(nxt)


cdef uint64_t *_regrow(uint64_t *buf, uint64_t used, uint64_t newcap):
    cdef uint64_t *out = <uint64_t *>malloc(newcap * sizeof(uint64_t))
    if not out:
        free(buf)
        raise MemoryError()
    cdef uint64_t i
    for i in range(used):
        out[i] = buf[i]
    free(buf)
    return out


cdef uint64_t _pow3(int k) nogil:
    cdef uint64_t out = 1
    cdef int i
    for i in range(k):
        out *= 3
    return out


def bfs_gf3(gen_mats, int dim, start_coords, cap=None, visited=None):
    """Orbit of a GF(3) state; `visited` is a Python set of packed states
    (shared across calls) or None."""
    cdef int ngen = len(gen_mats)
    cdef unsigned char *mats = <unsigned char *>malloc(ngen * dim * dim)
    cdef int g, i, j
    for g in range(ngen):
        mg = gen_mats[g]
        for i in range(dim):
            row = mg[i]
            for j in range(dim):
                mats[(g * dim + i) * dim + j] = row[j] % 3
    if visited is None:
        visited = set()
    cdef uint64_t start = 0
    for i in range(dim - 1, -1, -1):
        start = start * 3 + (start_coords[i] % 3)
    try:
        if start in visited:
            return 0, False
        return _bfs3_run(mats, ngen, dim, start, cap, visited)
    finally:
        free(mats)


cdef _bfs3_run(unsigned char *mats, int ngen, int dim, uint64_t start, cap, visited):
    cdef uint64_t capv = <uint64_t>cap if cap is not None else <uint64_t>-1
    cdef list frontier = [start]
    cdef list nxt
    cdef uint64_t size = 1, x, key, p3
    cdef unsigned char xc[32]
    cdef int yc[32]
    cdef int g, i, j, acc
    cdef bint capped = False
    visited.add(start)
    while frontier and not capped:
        nxt = []
        for xk in frontier:
            x = <uint64_t>xk
            for i in range(dim):
                xc[i] = x % 3
                x //= 3
            for g in range(ngen):
                for i in range(dim):
                    acc = 0
                    for j in range(dim):
                        acc += mats[(g * dim + i) * dim + j] * xc[j]
                    yc[i] = acc % 3
                key = 0
                for i in range(dim - 1, -1, -1):
                    key = key * 3 + yc[i]
                if key not in visited:
                    visited.add(key)
                    size += 1
                    if size > capv:
                        capped = True
                        break
                    nxt.append(key)
            if capped:
                break
        frontier = nxt
    return int(size), bool(capped)


def census_gf3(gen_mats, int dim, support):
    """BFS from every vector supported on the given positions, shared bitmap
    visited; returns orbit sizes in seed order."""
    cdef int ngen = len(gen_mats)
    cdef unsigned char *mats = <unsigned char *>malloc(ngen * dim * dim)
    cdef int g, i, j
    for g in range(ngen):
        mg = gen_mats[g]
        for i in range(dim):
            row = mg[i]
            for j in range(dim):
                mats[(g * dim + i) * dim + j] = row[j] % 3
    cdef uint64_t total = _pow3(dim)
    cdef unsigned char *bitmap = <unsigned char *>calloc((total + 7) // 8, 1)
    if not bitmap:
        free(mats)
        raise MemoryError()
    cdef list support_l = list(support)
    cdef int nsup = len(support_l)
    cdef uint64_t nseeds = _pow3(nsup), seed_idx, seed, rem
    cdef uint64_t p3s[32]
    for i in range(dim):
        p3s[i] = _pow3(i)
    sizes = []
    try:
        for seed_idx in range(nseeds):
            seed = 0
            rem = seed_idx
            for i in range(nsup):
                seed += (rem % 3) * p3s[<int>support_l[i]]
                rem //= 3
            if bitmap[seed >> 3] & (1 << (seed & 7)):
                continue
            sizes.append(_census_orbit(mats, ngen, dim, seed, bitmap))
        return sizes
    finally:
        free(bitmap)
        free(mats)


cdef _census_orbit(unsigned char *mats, int ngen, int dim, uint64_t start,
                   unsigned char *bitmap):
    cdef uint64_t size = 1, x, key, fi
    cdef unsigned char xc[32]
    cdef int yc[32]
    cdef int g, i, j, acc
    cdef uint64_t *frontier = <uint64_t *>malloc(1024 * sizeof(uint64_t))
    cdef uint64_t fcap = 1024, fl = 1
    cdef uint64_t *nxt = <uint64_t *>malloc(1024 * sizeof(uint64_t))
    cdef uint64_t ncap = 1024, nl
    bitmap[start >> 3] |= 1 << (start & 7)
    frontier[0] = start
    try:
        while fl:
            nl = 0
            for fi in range(fl):
                x = frontier[fi]
                for i in range(dim):
                    xc[i] = x % 3
                    x //= 3
                for g in range(ngen):
                    key = 0
                    for i in range(dim - 1, -1, -1):
                        acc = 0
                        for j in range(dim):
                            acc += mats[(g * dim + i) * dim + j] * xc[j]
                        key = key * 3 + (acc % 3)
                    if not (bitmap[key >> 3] & (1 << (key & 7))):
                        bitmap[key >> 3] |= 1 << (key & 7)
                        size += 1
                        if nl == ncap:
                            ncap <<= 1
                            nxt = _regrow(nxt, nl, ncap)
                        nxt[nl] = key
                        nl += 1
            frontier, nxt = nxt, frontier
            fl = nl
            fcap, ncap = ncap, fcap
        return int(size)
    finally:
        free(frontier)
        free(nxt)

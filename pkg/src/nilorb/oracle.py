"""Brute-force ground truth over F2: orbit invariants computed from their
definitions, explicit normal-form representatives, the canonical filtration
executed on actual bit-vector subspaces, and exhaustive classification
sweeps.

Spaces carry arbitrary Gram data so the filtration recursion can work on
quotients; the exhaustive sweeps run in the fixed standard ambient through
the kernel layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import InvalidSymbolError, NotNilpotentError, UnsupportedTypeError
from .gf2 import (
    QuadForm,
    echelon,
    identity,
    in_span,
    kernel_of_cols,
    kernel_of_rows,
    mat_mul,
    mat_vec,
    parity,
    rank,
    solve_rows,
    subspace_vectors,
)
from .partitions import conjugate
from .symbols import Symbol, SymbolB, SymbolC, chi_of, distinct_parts, validate


@dataclass
class SpSpace:
    """Symplectic space with a quadratic form (the type-C functional)."""

    dim: int
    gram: list[int]  # columns of the nondegenerate symplectic form
    alpha: QuadForm


@dataclass
class OddSpace:
    """Odd orthogonal space (Q nondegenerate, 1-dim radical of its
    polarization) with a symplectic form (the type-B functional)."""

    dim: int
    q: QuadForm
    bxi: list[int]  # columns of the alternating form beta_xi


@dataclass
class EvenSpace:
    """Even orthogonal space with a symplectic form (the type-D functional)."""

    dim: int
    q: QuadForm
    bxi: list[int]


# ---------------------------------------------------------------- ambients


def pair_index(i: int, j: int, d: int) -> int:
    """Position of the (i, j) upper entry, i < j, in lexicographic order."""
    return i * d - i * (i + 1) // 2 + (j - i - 1)


def standard_sp_gram(n: int) -> list[int]:
    return [1 << ((j + n) % (2 * n)) for j in range(2 * n)]


def standard_odd_q(n: int) -> QuadForm:
    d = 2 * n + 1
    upper = [0] * d
    for i in range(n):
        upper[i] |= 1 << (n + i)
    return QuadForm(d, 1 << (2 * n), upper)


def standard_even_q(n: int) -> QuadForm:
    d = 2 * n
    upper = [0] * d
    for i in range(n):
        upper[i] |= 1 << (n + i)
    return QuadForm(d, 0, upper)


def quadform_from_index(idx: int, d: int) -> QuadForm:
    diag = idx & ((1 << d) - 1)
    rest = idx >> d
    upper = [0] * d
    for i in range(d):
        for j in range(i + 1, d):
            if (rest >> pair_index(i, j, d)) & 1:
                upper[i] |= 1 << j
    return QuadForm(d, diag, upper)


def alternating_from_index(idx: int, d: int) -> list[int]:
    upper = [0] * d
    for i in range(d):
        for j in range(i + 1, d):
            if (idx >> pair_index(i, j, d)) & 1:
                upper[i] |= 1 << j
    return QuadForm(d, 0, upper).bcols


def sp_space_from_index(n: int, idx: int) -> SpSpace:
    return SpSpace(2 * n, standard_sp_gram(n), quadform_from_index(idx, 2 * n))


def odd_space_from_index(n: int, idx: int) -> OddSpace:
    return OddSpace(2 * n + 1, standard_odd_q(n), alternating_from_index(idx, 2 * n + 1))


def even_space_from_index(n: int, idx: int) -> EvenSpace:
    return EvenSpace(2 * n, standard_even_q(n), alternating_from_index(idx, 2 * n))


def form_count(type_: str, n: int) -> int:
    if type_ == "C":
        d = 2 * n
        return 1 << (d * (d + 1) // 2)
    if type_ == "B":
        d = 2 * n + 1
        return 1 << (d * (d - 1) // 2)
    if type_ == "D":
        d = 2 * n
        return 1 << (d * (d - 1) // 2)
    raise UnsupportedTypeError(type_)


# ---------------------------------------------------------- linear helpers


def solve_bilinear(gram: list[int], rhs_mask: int, dim: int) -> int | None:
    """x with beta(x, e_i) == bit i of rhs_mask, beta given by `gram` cols."""
    return solve_rows(gram, [(rhs_mask >> i) & 1 for i in range(dim)], dim)


def operator_from_forms(gram: list[int], bcols: list[int], dim: int) -> list[int]:
    """T with <T v, w> = beta(v, w): column j solves against the Gram."""
    cols = []
    for j in range(dim):
        x = solve_bilinear(gram, bcols[j], dim)
        if x is None:
            raise NotNilpotentError("degenerate Gram while building the operator")
        cols.append(x)
    return cols


def power_cols(t_cols: list[int], dim: int, k: int) -> list[int]:
    out = identity(dim)
    for _ in range(k):
        out = mat_mul(t_cols, out)
    return out


def jordan_type(t_cols: list[int], dim: int) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent operator; raises if not nilpotent."""
    ranks = [dim]
    cur = t_cols
    while ranks[-1] > 0:
        r = rank(cur)
        ranks.append(r)
        if r == ranks[-2]:
            raise NotNilpotentError("operator is not nilpotent")
        cur = mat_mul(t_cols, cur)
    conj = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return conjugate(conj)


def chi_value(t_cols: list[int], dim: int, form: QuadForm, k: int) -> int:
    """min l such that the form vanishes on T^l(ker T^k)."""
    kb = kernel_of_cols(power_cols(t_cols, dim, k), dim)
    for l in range(0, k + 1):
        pw = power_cols(t_cols, dim, l)
        imgs = echelon([mat_vec(pw, b) for b in kb])
        if form.is_zero_on(imgs):
            return l
    raise AssertionError("chi search exceeded its bound")


def _chi_tuple(t_cols, dim, form, lam) -> tuple[int, ...]:
    return tuple(chi_value(t_cols, dim, form, p) for p in distinct_parts(lam))


# ------------------------------------------------------------- invariants


def invariants_sp(space: SpSpace) -> SymbolC:
    """Type-C orbit symbol of a nilpotent functional, by definition."""
    t = operator_from_forms(space.gram, space.alpha.bcols, space.dim)
    lam = jordan_type(t, space.dim)
    sym = SymbolC(lam, _chi_tuple(t, space.dim, space.alpha, lam))
    if not validate(sym):
        raise AssertionError(f"oracle produced invalid symbol {sym}")
    return sym


def invariants_so_even(space: EvenSpace) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Type-D O(V)-orbit datum (lambda, chi) of a nilpotent functional."""
    t = operator_from_forms(space.q.bcols, space.bxi, space.dim)
    lam = jordan_type(t, space.dim)
    return lam, _chi_tuple(t, space.dim, space.q, lam)


@dataclass
class OddStructure:
    m: int
    vs: list[int]  # v_0 .. v_m
    us: list[int]  # u_0 .. u_{m-1}
    w_basis: list[int]
    t_w: list[int]  # operator on W in w_basis coordinates
    q_w: QuadForm
    bxi_w: list[int]


def radical_vector(q: QuadForm, dim: int) -> int:
    rad = kernel_of_rows(q.bcols, dim)
    if len(rad) != 1 or q(rad[0]) != 1:
        raise NotNilpotentError("ambient form is not odd-orthogonal nondegenerate")
    return rad[0]


def odd_structure(space: OddSpace, u0_skip: int = 0, w_twist: int = 0) -> OddStructure:
    """The chain data (m; v_i, u_i, W) of a type-B functional.

    `u0_skip` / `w_twist` select alternative admissible choices; the
    resulting symbol must not depend on them.
    """
    dim, q, bxi = space.dim, space.q, space.bxi
    n = (dim - 1) // 2
    r = radical_vector(q, dim)

    chain = [r]
    m = None
    for _ in range(n + 1):
        fx = mat_vec(bxi, chain[-1])
        if fx == 0:
            m = len(chain) - 1
            break
        y = solve_bilinear(q.bcols, fx, dim)
        if y is None:
            raise NotNilpotentError("v-chain obstructed by the radical")
        if q(y):
            y ^= r
        if q(y):
            raise AssertionError("radical shift failed to normalize Q")
        chain.append(y)
    if m is None:
        raise NotNilpotentError("v-chain does not terminate")
    vs = chain[::-1]  # v_i = chain[m - i]

    us: list[int] = []
    if m >= 1:
        rows = [mat_vec(q.bcols, v) for v in vs]
        part0 = solve_rows(rows, [1] + [0] * m, dim)
        if part0 is None:
            raise NotNilpotentError("no vector pairing with v_0")
        ker = kernel_of_rows(rows, dim)
        candidates = [part0 ^ v for v in subspace_vectors(ker) if q(part0 ^ v) == 0]
        if not candidates:
            raise NotNilpotentError("no isotropic u_0")
        us.append(candidates[u0_skip % len(candidates)])
        for i in range(1, m):
            fx = mat_vec(bxi, us[i - 1])
            y = solve_bilinear(q.bcols, fx, dim)
            if y is None:
                raise NotNilpotentError("u-chain obstructed by the radical")
            if q(y):
                y ^= r
            us.append(y)

    if m == 0:
        piv = r.bit_length() - 1
        w_basis = [
            (1 << i) ^ (r if (w_twist >> i) & 1 else 0)
            for i in range(dim)
            if i != piv
        ]
    else:
        # beta_xi(v, u_i) = beta(v, u_{i+1}) is already forced for i < m-1,
        # so the one new beta_xi condition cuts along the last chain vector.
        rows = [mat_vec(q.bcols, u) for u in us]
        rows += [mat_vec(q.bcols, v) for v in vs]
        rows.append(mat_vec(bxi, us[-1]))
        w_basis = kernel_of_rows(rows, dim)

    if len(w_basis) != dim - 2 * m - 1:
        raise NotNilpotentError("span{u_i, v_i} does not split off")
    if rank(w_basis + vs + us) != dim:
        raise NotNilpotentError("W is not a complement")

    k = len(w_basis)
    gram_w = [_restrict_row(q.bcols, w_basis, w) for w in w_basis]
    if rank(gram_w) != k:
        raise NotNilpotentError("beta degenerates on W")
    bxi_w = [_restrict_row(bxi, w_basis, w) for w in w_basis]
    t_w = operator_from_forms(_cols_from_rows(gram_w, k), _cols_from_rows(bxi_w, k), k)
    q_w = QuadForm.from_values(
        k,
        lambda i: w_basis[i],
        [q(w) for w in w_basis],
        lambda x, y: q.beta(x, y),
    )
    return OddStructure(m, vs, us, w_basis, t_w, q_w, bxi_w)


def _restrict_row(cols: list[int], basis: list[int], w: int) -> int:
    """Mask over basis indices i of beta(basis[i], w)."""
    out = 0
    img = mat_vec(cols, w)
    for i, b in enumerate(basis):
        if parity(b & img):
            out |= 1 << i
    return out


def _cols_from_rows(rows: list[int], dim: int) -> list[int]:
    """Rows of a symmetric form double as columns."""
    assert len(rows) == dim
    return rows


def invariants_so_odd(space: OddSpace, u0_skip: int = 0, w_twist: int = 0) -> SymbolB:
    """Type-B orbit symbol (m; (lambda, chi)) of a nilpotent functional."""
    st = odd_structure(space, u0_skip=u0_skip, w_twist=w_twist)
    k = len(st.w_basis)
    lam = jordan_type(st.t_w, k) if k else ()
    chi_w = _chi_tuple(st.t_w, k, st.q_w, lam)
    chi = tuple(max(p - st.m, cw) for p, cw in zip(distinct_parts(lam), chi_w))
    sym = SymbolB(st.m, lam, chi)
    if not validate(sym):
        raise AssertionError(f"oracle produced invalid symbol {sym}")
    return sym


# --------------------------------------------------------- representatives


def _block_c(s: int, l: int) -> tuple[list[int], int, list[int]]:
    """Gram columns, alpha diag, alpha upper for one indecomposable type-C
    block on basis [v, Tv, .., T^{s-1}v, w, Tw, .., T^{s-1}w]."""
    d = 2 * s
    gram = [0] * d
    for i in range(s):
        gram[i] |= 1 << (2 * s - 1 - i)
        gram[s + i] |= 1 << (s - 1 - i)
    diag = 1 << (l - 1) if l >= 1 else 0
    upper = [0] * d
    for i in range(s):
        j = s - 2 - i  # beta(T^i v, T^j w) = delta_{i+j, s-2}
        if 0 <= j < s:
            a, b = i, s + j
            upper[min(a, b)] |= 1 << max(a, b)
    return gram, diag, upper


def representative_sp(sym: SymbolC) -> SpSpace:
    """Orthogonal sum of normal-form blocks realizing the symbol."""
    if not validate(sym):
        raise InvalidSymbolError(str(sym))
    gram_cols: list[int] = []
    diag = 0
    upper: list[int] = []
    off = 0
    for a in range(0, len(sym.lam), 2):
        s = sym.lam[a]
        g, dg, up = _block_c(s, chi_of(sym, s))
        gram_cols += [c << off for c in g]
        diag |= dg << off
        upper += [u << off for u in up]
        off += 2 * s
    space = SpSpace(off, gram_cols, QuadForm(off, diag, upper))
    back = invariants_sp(space) if off else SymbolC((), ())
    if back != sym:
        raise AssertionError(f"representative of {sym} recomputes to {back}")
    return space


def _block_b(s: int, l: int) -> tuple[int, list[int], list[int]]:
    """Q diag, Q upper, beta_xi upper for one orthogonal W-block on basis
    [v, Tv, .., T^{s-1}v, w, Tw, .., T^{s-1}w]."""
    d = 2 * s
    diag = 1 << (l - 1) if l >= 1 else 0
    q_upper = [0] * d
    bxi_upper = [0] * d
    for i in range(s):
        j = s - 1 - i  # beta(T^i v, T^j w) = delta_{i+j, s-1}
        a, b = i, s + j
        q_upper[min(a, b)] |= 1 << max(a, b)
        j2 = s - 2 - i  # beta_xi(T^i v, T^j w) = delta_{i+j, s-2}
        if 0 <= j2 < s:
            a, b = i, s + j2
            bxi_upper[min(a, b)] |= 1 << max(a, b)
    return diag, q_upper, bxi_upper


def representative_so_odd(sym: SymbolB) -> OddSpace:
    """Skeleton span{v_i, u_i} plus W-blocks realizing the symbol."""
    if not validate(sym):
        raise InvalidSymbolError(str(sym))
    m = sym.m
    d = 2 * sym.n + 1
    sk = 2 * m + 1  # coords: v_0..v_m, u_0..u_{m-1}
    q_diag = 1 << m
    q_upper = [0] * d
    bxi_upper = [0] * d
    for i in range(m):
        q_upper[i] |= 1 << (m + 1 + i)  # beta(v_i, u_i) = 1
    for i in range(1, m + 1):
        a, b = i, m + 1 + (i - 1)  # beta_xi(v_i, u_{i-1}) = 1
        bxi_upper[min(a, b)] |= 1 << max(a, b)
    off = sk
    for a in range(0, len(sym.lam), 2):
        s = sym.lam[a]
        dg, qup, bup = _block_b(s, chi_of(sym, s))
        q_diag |= dg << off
        for i in range(2 * s):
            q_upper[off + i] |= qup[i] << off
            bxi_upper[off + i] |= bup[i] << off
        off += 2 * s
    assert off == d
    q = QuadForm(d, q_diag, q_upper)
    bxi = QuadForm(d, 0, bxi_upper).bcols
    space = OddSpace(d, q, bxi)
    back = invariants_so_odd(space)
    if back != sym:
        raise AssertionError(f"representative of {sym} recomputes to {back}")
    return space


def representative_from_symbol(sym: Symbol):
    if sym.type == "C":
        return representative_sp(sym)
    if sym.type == "B":
        return representative_so_odd(sym)
    raise UnsupportedTypeError("representatives implemented for B and C")


# ------------------------------------------------------------- filtration


def _functional_kernel(vals: list[int], basis: list[int]) -> list[int]:
    """Kernel of an additive 0/1 functional given by its basis values."""
    row = 0
    for i, v in enumerate(vals):
        if v:
            row |= 1 << i
    combos = kernel_of_rows([row], len(basis))
    return [mat_vec(basis, c) for c in combos]


def _assert_additive(form_val, basis: list[int]) -> None:
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if form_val(basis[i] ^ basis[j]) != (form_val(basis[i]) ^ form_val(basis[j])):
                raise AssertionError("expected additive functional is not additive")


def _complement_in(sub: list[int], big: list[int]) -> list[int]:
    """Vectors of `big` extending span(sub) to span(big)."""
    have = echelon(sub)
    out = []
    for b in big:
        if not in_span(echelon(have + out), b):
            out.append(b)
    return out


def canonical_filtration_sp(space: SpSpace) -> tuple[int, ...]:
    """Layer dimensions (f_0, .., f_N) of the canonical filtration, computed
    by the inductive subspace definition."""
    dim, gram, alpha = space.dim, space.gram, space.alpha
    if alpha.diag == 0 and not any(alpha.upper):
        return (dim,)
    t = operator_from_forms(gram, alpha.bcols, dim)
    lam = jordan_type(t, dim)  # also certifies nilpotency
    e = lam[0] if lam else 0
    f = next(
        l
        for l in range(0, dim + 1)
        if alpha.is_zero_on(echelon([c for c in power_cols(t, dim, l)]))
    )
    N = max(e - 1, 2 * f - 1)
    if N < 1:
        raise AssertionError("N < 1 for a nonzero functional")

    tf1 = power_cols(t, dim, f - 1) if f >= 1 else identity(dim)
    te1 = power_cols(t, dim, e - 1) if e >= 1 else identity(dim)
    if e == 2 * f + 1:
        k_basis = kernel_of_cols(te1, dim)
    elif e == 2 * f:
        kb = kernel_of_cols(te1, dim)
        _assert_additive(lambda v: alpha(mat_vec(tf1, v)), kb)
        k_basis = _functional_kernel([alpha(mat_vec(tf1, b)) for b in kb], kb)
    else:  # e < 2f
        kb = identity(dim)
        _assert_additive(lambda v: alpha(mat_vec(tf1, v)), kb)
        k_basis = _functional_kernel([alpha(mat_vec(tf1, b)) for b in kb], kb)

    perp_rows = [mat_vec(gram, b) for b in k_basis]
    vn_basis = kernel_of_rows(perp_rows, dim)
    for v in vn_basis:
        if not in_span(echelon(k_basis), v):
            raise AssertionError("top layer is not inside the next-to-bottom layer")
    f_n = len(vn_basis)

    reps = _complement_in(vn_basis, echelon(k_basis))
    k2 = len(reps)
    gram2_rows = [_restrict_row(gram, reps, w) for w in reps]
    if rank(gram2_rows) != k2:
        raise AssertionError("induced symplectic form degenerates")
    alpha2 = QuadForm.from_values(
        k2, lambda i: reps[i], [alpha(w) for w in reps], alpha.beta
    )
    inner = canonical_filtration_sp(SpSpace(k2, _cols_from_rows(gram2_rows, k2), alpha2))
    if len(inner) > N:
        raise AssertionError("inner filtration deeper than N")
    out = list(inner) + [0] * (N + 1 - len(inner))
    out[N] = f_n
    if out[0] + 2 * sum(out[1:]) != dim:
        raise AssertionError("filtration layers do not sum to dim V")
    return tuple(out)


def canonical_filtration_so_odd(space: OddSpace) -> tuple[int, ...]:
    """Layer dimensions for a type-B functional, from the inductive
    case-by-case definition."""
    dim, q, bxi = space.dim, space.q, space.bxi
    if not any(bxi):
        return (dim,)
    st = odd_structure(space)
    m = st.m
    k = len(st.w_basis)
    lam = jordan_type(st.t_w, k) if k else ()
    e = lam[0] if lam else 0
    chi_w_e = (
        next(
            l
            for l in range(0, k + 1)
            if st.q_w.is_zero_on(echelon(power_cols(st.t_w, k, l)))
        )
        if k
        else 0
    )
    f = max(e - m, chi_w_e)
    N = max(2 * m, m + f - 1)
    if N < 1:
        raise AssertionError("N < 1 for a nonzero functional")

    lift = lambda wc: mat_vec(st.w_basis, wc)  # W coords -> ambient
    te1 = power_cols(st.t_w, k, e - 1) if e >= 1 else identity(k)
    tf1 = power_cols(st.t_w, k, f - 1) if f >= 1 else identity(k)
    span_small = st.vs + st.us[1:] if m >= 1 else list(st.vs)

    def rho_vals(basis_w):
        return [st.q_w(mat_vec(tf1, b)) for b in basis_w]

    ker_e1 = kernel_of_cols(te1, k)
    rho_zero = st.q_w.is_zero_on(echelon([mat_vec(tf1, b) for b in ker_e1]))

    if m == 0:
        k_basis = [st.vs[0]] + [lift(b) for b in ker_e1]
    elif m >= f:
        k_basis = span_small + [lift(b) for b in identity(k)]
    elif e - f < m < f:
        wb = identity(k)
        _assert_additive(lambda v: st.q_w(mat_vec(tf1, v)), wb)
        k_basis = span_small + [lift(b) for b in _functional_kernel(rho_vals(wb), wb)]
    elif 0 < m == e - f and (m == f - 1 or not rho_zero):
        _assert_additive(lambda v: st.q_w(mat_vec(tf1, v)), ker_e1)
        sub = _functional_kernel(rho_vals(ker_e1), ker_e1)
        k_basis = span_small + [lift(b) for b in sub]
    elif 0 < m == e - f < f - 1 and rho_zero:
        # beta(T^{e-1} w_**, w)^2 = Q(T^{f-1} w); squaring is the identity on
        # F_2 (on F_{2^k} it would be x -> x^{2^{k-1}}), so solve linearly
        sys_rows = []
        rhs = []
        for s in range(k):
            row = 0
            for tcoord in range(k):
                if st.q_w.beta(mat_vec(te1, 1 << tcoord), 1 << s):
                    row |= 1 << tcoord
            sys_rows.append(row)
            rhs.append(st.q_w(mat_vec(tf1, 1 << s)))
        wss = solve_rows(sys_rows, rhs, k)
        if wss is None:
            raise AssertionError("w_** does not exist")
        k_basis = span_small + [st.us[0] ^ lift(wss)] + [lift(b) for b in ker_e1]
    else:
        raise AssertionError("unreachable filtration case")

    perp_rows = [mat_vec(q.bcols, b) for b in k_basis]
    perp = kernel_of_rows(perp_rows, dim)
    zero_vecs = [v for v in subspace_vectors(perp) if q(v) == 0]
    vn_basis = echelon(zero_vecs)
    if len(subspace_vectors(vn_basis)) != len(zero_vecs):
        raise AssertionError("Q-zero locus of the perp is not a subspace")
    for v in vn_basis:
        if not in_span(echelon(k_basis), v):
            raise AssertionError("top layer is not inside the next-to-bottom layer")
    f_n = len(vn_basis)

    reps = _complement_in(vn_basis, echelon(k_basis))
    k2 = len(reps)
    q2 = QuadForm.from_values(k2, lambda i: reps[i], [q(w) for w in reps], q.beta)
    bxi2 = [_restrict_row(bxi, reps, w) for w in reps]
    inner = canonical_filtration_so_odd(OddSpace(k2, q2, _cols_from_rows(bxi2, k2)))
    if len(inner) > N:
        raise AssertionError("inner filtration deeper than N")
    out = list(inner) + [0] * (N + 1 - len(inner))
    out[N] = f_n
    if out[0] + 2 * sum(out[1:]) != dim:
        raise AssertionError("filtration layers do not sum to dim V")
    return tuple(out)


def canonical_filtration(space) -> tuple[int, ...]:
    if isinstance(space, SpSpace):
        return canonical_filtration_sp(space)
    if isinstance(space, OddSpace):
        return canonical_filtration_so_odd(space)
    raise UnsupportedTypeError("canonical filtrations implemented for B and C")


# ------------------------------------------------------------ full sweeps


def classify_all(type_: str, n: int):
    """Tally the orbit invariant of every nilpotent form on the standard
    space: dict mapping symbols (B, C) or (lambda, chi) pairs (D) to counts."""
    raw = _kernels.sweep_forms(type_, n)
    out = {}
    for key, count in raw.items():
        if type_ == "C":
            lam, chi = key
            out[SymbolC(lam, chi)] = count
        elif type_ == "B":
            m, lam, chi = key
            out[SymbolB(m, lam, chi)] = count
        else:
            out[key] = count
    return out


def invariant_of_index(type_: str, n: int, idx: int):
    """Invariant of one form, by the generic definitions (None if the form is
    not nilpotent)."""
    try:
        if type_ == "C":
            return invariants_sp(sp_space_from_index(n, idx))
        if type_ == "B":
            return invariants_so_odd(odd_space_from_index(n, idx))
        if type_ == "D":
            return invariants_so_even(even_space_from_index(n, idx))
    except NotNilpotentError:
        return None
    raise UnsupportedTypeError(type_)

"""Aggregated invariant suites: every structural property the package
promises, runnable per area.  Each check either passes or raises
`VerificationFailure` with a witness; runners stop at the first failure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .closure import (
    assert_covers_decrease_centralizer,
    assert_partial_order,
    closure_extremes,
    leq_matrix,
)
from .errors import NilorbError
from .oracle import (
    canonical_filtration,
    classify_all,
    form_count,
    invariants_so_odd,
    odd_space_from_index,
    representative_from_symbol,
)
from .partitions import bipartition_leq, bipartitions_of, in_family, j_induct
from .pieces import ms_pieces, piece_report, recursion_step, upsilon, upsilon_from_unipotent
from .springer import (
    enumerate_unipotent,
    gamma_star,
    gamma_star_inv,
    phi,
    psi_star,
    unip_from_symbol,
)
from .symbols import (
    centralizer_dim,
    chi_extend,
    distinct_parts,
    enumerate_symbols,
    is_zero_symbol,
    zero_symbol,
)


class VerificationFailure(NilorbError):
    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _fail(check, detail):
    raise VerificationFailure(check, str(detail))


# ------------------------------------------------------------- partitions


def check_bipartition_order(nmax=8):
    for n in range(nmax + 1):
        bps = list(bipartitions_of(n))
        leq = [[bipartition_leq(a, b) for b in bps] for a in bps]
        for i, a in enumerate(bps):
            if not leq[i][i]:
                _fail("bipartition-order-reflexive", a)
        for i in range(len(bps)):
            for j in range(len(bps)):
                if i != j and leq[i][j] and leq[j][i]:
                    _fail("bipartition-order-antisymmetric", (bps[i], bps[j]))
                if not leq[i][j]:
                    continue
                for k in range(len(bps)):
                    if leq[j][k] and not leq[i][k]:
                        _fail("bipartition-order-transitive", (bps[i], bps[j], bps[k]))


def check_j_induct(nmax=6, kmax=4):
    for n in range(nmax + 1):
        bps = list(bipartitions_of(n))
        for k in range(1, kmax + 1):
            images = {}
            for t in bps:
                im = j_induct(t, k)
                if im.total != n + k:
                    _fail("j-induct-total", (t, k))
                if im in images:
                    _fail("j-induct-injective", (images[im], t, k))
                images[im] = t
            for a, b in itertools.product(bps, bps):
                fwd = bipartition_leq(a, b)
                back = bipartition_leq(j_induct(a, k), j_induct(b, k))
                if fwd != back:
                    _fail("j-induct-order-embedding", (a, b, k))


def check_family_nesting(nmax=8):
    for n in range(nmax + 1):
        for t in bipartitions_of(n):
            if in_family(t, "XC1") and not in_family(t, "XC2"):
                _fail("family-XC1-in-XC2", t)
            if in_family(t, "XB1") and not in_family(t, "XB2"):
                _fail("family-XB1-in-XB2", t)


# ---------------------------------------------------------------- symbols


def check_symbol_dims(nmax=8):
    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            for s in enumerate_symbols(type_, n):
                d = centralizer_dim(s) - n
                if d < 0 or d % 2:
                    _fail("centralizer-minus-rank-even", s)
                for p in distinct_parts(s.lam):
                    from .symbols import chi_of

                    if chi_extend(s, p) != chi_of(s, p):
                        _fail("chi-extend-consistent", (s, p))


def check_closure(nmax=6):
    for type_ in ("B", "C", "D"):
        for n in range(nmax + 1):
            symbols = enumerate_symbols(type_, n)
            leq = leq_matrix(symbols)
            try:
                assert_partial_order(symbols, leq)
            except AssertionError as e:
                _fail("closure-partial-order", e)
            if type_ in ("B", "C"):
                try:
                    assert_covers_decrease_centralizer(type_, n)
                except AssertionError as e:
                    _fail("closure-covers-centralizer", e)
                mins, _ = closure_extremes(type_, n)
                if mins != [zero_symbol(type_, n)]:
                    _fail("closure-zero-minimum", (type_, n, mins))


def check_induction_embeds(nmax=4, kmax=3):
    from .closure import closure_leq, induce_orbit

    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            symbols = enumerate_symbols(type_, n)
            for k in range(1, kmax + 1):
                for a, b in itertools.product(symbols, symbols):
                    if closure_leq(a, b) != closure_leq(
                        induce_orbit(a, k), induce_orbit(b, k)
                    ):
                        _fail("induction-order-embedding", (a, b, k))


# --------------------------------------------------------------- springer


def check_springer_images(nmax=8):
    for type_, family in (("B", "XB2"), ("C", "XC2")):
        for n in range(nmax + 1):
            symbols = enumerate_symbols(type_, n)
            images = set()
            for s in symbols:
                t = gamma_star(s)
                if not in_family(t, family):
                    _fail("gamma-image-in-family", s)
                if t in images:
                    _fail("gamma-injective", s)
                images.add(t)
                if gamma_star_inv(t, type_, n) != s:
                    _fail("gamma-inverse-roundtrip", s)
            family_members = {t for t in bipartitions_of(n) if in_family(t, family)}
            if images != family_members:
                _fail("gamma-image-exact", (type_, n))


def check_phi(nmax=8, hull_nmax=6):
    for type_, fam2, fam1 in (("B", "XB2", "XB1"), ("C", "XC2", "XC1")):
        for n in range(nmax + 1):
            members2 = [t for t in bipartitions_of(n) if in_family(t, fam2)]
            for t in members2:
                ft = phi(t, type_)
                if not in_family(ft, fam1):
                    _fail("phi-into-X1", t)
                if not bipartition_leq(t, ft):
                    _fail("phi-dominance-increasing", t)
                if phi(ft, type_) != ft:
                    _fail("phi-idempotent", t)
            if n <= hull_nmax:
                members1 = [t for t in bipartitions_of(n) if in_family(t, fam1)]
                for t in members2:
                    for u in members1:
                        if bipartition_leq(t, u) and not bipartition_leq(phi(t, type_), u):
                            _fail("phi-monotone-hull", (t, u))


def check_unipotent_bijection(nmax=8):
    for type_, fam1 in (("B", "XB1"), ("C", "XC1")):
        for n in range(nmax + 1):
            members = [t for t in bipartitions_of(n) if in_family(t, fam1)]
            classes = enumerate_unipotent(type_, n)
            images = {unip_from_symbol(t, type_) for t in members}
            if len(images) != len(members) or images != set(classes):
                _fail("unipotent-bijection", (type_, n))


def check_compatibility(nmax=8):
    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            for s in enumerate_symbols(type_, n):
                if unip_from_symbol(phi(gamma_star(s), type_), type_) != psi_star(s):
                    _fail("psi-phi-compatibility", s)


# ----------------------------------------------------------------- pieces


def check_upsilon(nmax=8):
    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            for s in enumerate_symbols(type_, n):
                u = upsilon(s)
                if u != upsilon_from_unipotent(psi_star(s)):
                    _fail("upsilon-two-routes", s)
                if u[0] + 2 * sum(u[1:]) != s.dim_v:
                    _fail("upsilon-dim-sum", s)
                if not is_zero_symbol(s):
                    n_top, _, _ = recursion_step(s)
                    if psi_star(s).parts[0] != n_top + 1:
                        _fail("upsilon-depth-vs-psi", s)


def check_pieces(nmax=8, ms_nmax=6):
    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            rep = piece_report(type_, n, with_ms=(n <= ms_nmax))
            if not rep.agree:
                _fail("piece-coincidence", rep.disagreements)
            if n <= ms_nmax:
                fam = "XB1" if type_ == "B" else "XC1"
                blocks = ms_pieces(type_, n)
                for block in blocks:
                    special = [s for s in block if in_family(gamma_star(s), fam)]
                    if len(special) != 1:
                        _fail("piece-one-special", block)
                    target = phi(gamma_star(special[0]), type_)
                    for s in block:
                        if phi(gamma_star(s), type_) != target:
                            _fail("piece-gamma-is-phi-fiber", s)


# ----------------------------------------------------------------- oracle


def check_oracle_counts(nmax=3):
    for type_ in ("B", "C", "D"):
        for n in range(nmax + 1):
            counts = classify_all(type_, n)
            total = sum(counts.values())
            if type_ in ("B", "C"):
                if total != 1 << (2 * n * n):
                    _fail("oracle-q2N-count", (type_, n, total))
                if set(counts) != set(enumerate_symbols(type_, n)):
                    _fail("oracle-keys-vs-enumeration", (type_, n))
            else:
                if total != 1 << (2 * n * (n - 1)):
                    _fail("oracle-q2N-count", (type_, n, total))
                okeys = {(s.lam, s.chi) for s in enumerate_symbols(type_, n)}
                if set(counts) != okeys:
                    _fail("oracle-keys-vs-enumeration", (type_, n))


def check_filtration_agreement(nmax=3):
    for type_ in ("B", "C"):
        for n in range(nmax + 1):
            for s in enumerate_symbols(type_, n):
                space = representative_from_symbol(s)
                filt = canonical_filtration(space)
                if filt != upsilon(s):
                    _fail("filtration-vs-upsilon", (s, filt))


def check_oracle_choices(n=2, samples=40):
    """The type-B structure must not depend on admissible choices."""
    count = form_count("B", n)
    step = max(1, count // samples)
    for idx in range(0, count, step):
        space = odd_space_from_index(n, idx)
        try:
            base = invariants_so_odd(space)
        except NilorbError:
            continue
        for skip, twist in ((1, 0), (0, 3), (2, 5)):
            try:
                alt = invariants_so_odd(space, u0_skip=skip, w_twist=twist)
            except NilorbError:
                continue
            if alt != base:
                _fail("oracle-choice-invariance", (idx, base, alt))


# ------------------------------------------------------------ exceptional


def check_chevalley():
    from .chevalley import (
        build_lie,
        check_coadjoint_formula,
        check_jacobi,
        check_listed_constants,
        check_one_param_additivity,
    )

    for group, q in (("G2p3", 3), ("F4p2", 2)):
        rep = build_lie(group)
        try:
            check_listed_constants(rep)
            check_jacobi(rep)
            check_coadjoint_formula(rep, q)
            check_one_param_additivity(rep, q)
        except NilorbError as e:
            _fail("chevalley-construction", e)


def check_mass():
    from .tables import mass_check, table

    for group, rows in (("G2", 7), ("F4", 26)):
        if len(table(group)) != rows:
            _fail("table-row-count", group)
        ok, report = mass_check(group)
        if not ok:
            _fail("mass-identity", report)


def check_exceptional_orbits(census=True, spot=True):
    from . import _kernels
    from .sweeps import expected_orbit_size, nilpotent_sweep_g2, orbit_bfs_row

    if census:
        c = nilpotent_sweep_g2(3)
        want = sorted(
            (expected_orbit_size("G2", lbl, 3) for lbl in ("1", "2,1", "2,2", "2,3", "3", "4", "5")),
            reverse=True,
        )
        if c["orbit_sizes"] != want or c["total"] != 3**12:
            _fail("g2-census", c)
    if spot:
        shared = _kernels.shared_visited(6_000_000)
        for label in ("17", "16,1", "16,2"):
            res = orbit_bfs_row("F4", label, 2, visited=shared)
            if res.capped or res.size != expected_orbit_size("F4", label, 2):
                _fail("f4-spot-bfs", (label, res))


# ------------------------------------------------------------------- sets

SUITES = {
    "enumerate": [check_symbol_dims, lambda: check_oracle_counts(2)],
    "springer": [
        check_springer_images,
        check_phi,
        check_unipotent_bijection,
        check_compatibility,
    ],
    "hasse": [
        check_bipartition_order,
        check_j_induct,
        check_family_nesting,
        check_closure,
        check_induction_embeds,
    ],
    "pieces": [check_upsilon, check_pieces],
    "oracle": [check_oracle_counts, check_filtration_agreement, check_oracle_choices],
    "exceptional": [check_chevalley, check_mass, check_exceptional_orbits],
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite, stopping at the first failure."""
    results = []
    for fn in SUITES[name]:
        label = getattr(fn, "__name__", "check")
        try:
            fn()
        except VerificationFailure as e:
            results.append(CheckResult(e.check, False, e.detail))
            return results
        results.append(CheckResult(label.replace("check_", ""), True))
    return results

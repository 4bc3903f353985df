#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--full]

--full adds the 2^21-form sweeps on the pure side (minutes) so both columns
cover the worst case; without it the pure column runs the n=2 sizes only.
"""

import argparse
import time

import nilorb._kernels as kernels
from nilorb._kernels import pure
from nilorb.chevalley import dual_index
from nilorb.sweeps import _gf2_cols, coadjoint_generators, lie, pack_state_gf2
from nilorb.tables import materialize_rep, row_by_label


def clock(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return time.perf_counter() - t0, out


def row(name, compiled_s, pure_s, note=""):
    speed = f"{pure_s / compiled_s:7.1f}x" if compiled_s and pure_s else "   n/a"
    cs = f"{compiled_s:9.3f}s" if compiled_s is not None else "      ----"
    ps = f"{pure_s:9.3f}s" if pure_s is not None else "      ----"
    print(f"{name:<34} {cs} {ps} {speed}  {note}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true", help="run the 2^21-form pure sweeps too")
    args = ap.parse_args()

    if not kernels.COMPILED:
        print("compiled kernel not available; build it with `pip install -e .`")
        return

    print(f"{'benchmark':<34} {'compiled':>10} {'pure':>10}  speedup")

    for t, n in (("C", 2), ("B", 2), ("D", 3)):
        tc, rc = clock(kernels.impl.sweep_forms, t, n)
        tp, rp = clock(pure.sweep_forms, t, n)
        assert rc == rp
        row(f"sweep_forms({t!r}, {n})", tc, tp)
    for t, n in (("C", 3), ("B", 3)):
        tc, rc = clock(kernels.impl.sweep_forms, t, n)
        if args.full:
            tp, rp = clock(pure.sweep_forms, t, n)
            assert rc == rp
        else:
            tp = None
        row(f"sweep_forms({t!r}, {n})", tc, tp, "2^21 forms")

    g2gens = coadjoint_generators("G2", 3)
    start = materialize_rep(row_by_label("G2", "3"), 3, lie("G2"))
    tc, rc = clock(kernels.impl.bfs_gf3, g2gens, 14, start)
    tp, rp = clock(pure.bfs_gf3, g2gens, 14, start)
    assert rc == rp
    row("bfs_gf3 (G2 orbit, 6552 states)", tc, tp)

    start = materialize_rep(row_by_label("G2", "1"), 3, lie("G2"))
    tc, rc = clock(kernels.impl.bfs_gf3, g2gens, 14, start)
    if args.full:
        tp, rp = clock(pure.bfs_gf3, g2gens, 14, start)
        assert rc == rp
    else:
        tp = None
    row("bfs_gf3 (G2 orbit, 471744 states)", tc, tp)

    f4gens = [_gf2_cols(m) for m in coadjoint_generators("F4", 2)]
    start = pack_state_gf2(materialize_rep(row_by_label("F4", "17"), 2, lie("F4")))
    tc, rc = clock(kernels.impl.bfs_gf2, f4gens, 52, start)
    tp, rp = clock(pure.bfs_gf2, f4gens, 52, start)
    assert rc == rp
    row("bfs_gf2 (F4 orbit, 69615 states)", tc, tp)

    rep = lie("G2")
    support = [dual_index(rep, r) for r in rep.rs.positive[-3:]]
    tc, rc = clock(kernels.impl.census_gf3, g2gens, 14, support)
    tp, rp = clock(pure.census_gf3, g2gens, 14, support)
    assert rc == rp
    row("census_gf3 (27-seed slice)", tc, tp)

    support = [dual_index(rep, r) for r in rep.rs.positive]
    tc, rc = clock(kernels.impl.census_gf3, g2gens, 14, support)
    if args.full:
        tp, rp = clock(pure.census_gf3, g2gens, 14, support)
        assert sorted(rc) == sorted(rp)
    else:
        tp = None
    row("census_gf3 (full G2(F_3) census)", tc, tp, "3^12 states")


if __name__ == "__main__":
    main()

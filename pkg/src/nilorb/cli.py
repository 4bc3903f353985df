"""Batch command-line interface.

Exit codes: 0 success, 1 verification failure (JSON failure report on
stdout), 2 usage error.  Output is byte-deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import verify as verify_mod
from .closure import hasse
from .errors import NilorbError
from .oracle import classify_all, form_count, invariant_of_index
from .partitions import in_family
from .pieces import piece_report
from .springer import gamma_star, psi_star
from .symbols import centralizer_dim, enumerate_symbols, to_json

BUDGET = {"enumerate": 12, "springer": 10, "hasse": 8, "pieces": 8, "oracle": 3}


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _sym_label(sym) -> str:
    doc = to_json(sym)
    parts = ",".join(map(str, doc["lambda"]))
    chi = ",".join(f"{k}:{v}" for k, v in sorted(doc["chi"].items(), key=lambda kv: -int(kv[0])))
    head = f"{doc['type']}{doc['n']}"
    body = f"[{parts}]({chi})"
    if doc["type"] == "B":
        body = f"m={doc['m']};" + body
    if doc.get("label"):
        body += doc["label"]
    return head + " " + body


def _check_budget(parser, sub: str, n: int):
    if n < 0 or n > BUDGET[sub]:
        parser.error(f"--n for {sub} must be in [0, {BUDGET[sub]}]")


def _run_verify(suite: str) -> int:
    results = verify_mod.run_suite(suite)
    ok = all(r.ok for r in results)
    doc = {
        "suite": suite,
        "ok": ok,
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
    }
    print(_dumps(doc))
    return 0 if ok else 1


def cmd_enumerate(args, parser) -> int:
    _check_budget(parser, "enumerate", args.n)
    if args.verify:
        return _run_verify("enumerate")
    symbols = enumerate_symbols(args.type, args.n)
    if args.format == "json":
        print(_dumps([to_json(s) for s in symbols]))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["symbol"])
        for s in symbols:
            w.writerow([json.dumps(to_json(s), sort_keys=True)])
    else:
        for s in symbols:
            print(_sym_label(s))
        print(f"total: {len(symbols)}")
    return 0


def cmd_springer(args, parser) -> int:
    _check_budget(parser, "springer", args.n)
    if args.verify:
        return _run_verify("springer")
    rows = []
    fam1 = {"B": "XB1", "C": "XC1"}.get(args.type)
    for s in enumerate_symbols(args.type, args.n):
        t = gamma_star(s)
        row = {"symbol": to_json(s), "bipartition": t.to_json()}
        if args.type in ("B", "C"):
            row["special"] = in_family(t, fam1)
            row["unipotent"] = psi_star(s).to_json()
        rows.append(row)
    if args.format == "json":
        print(_dumps(rows))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["symbol", "bipartition", "unipotent"])
        for r in rows:
            w.writerow(
                [
                    json.dumps(r["symbol"], sort_keys=True),
                    json.dumps(r["bipartition"], sort_keys=True),
                    json.dumps(r.get("unipotent"), sort_keys=True),
                ]
            )
    else:
        for r in rows:
            mu, nu = r["bipartition"]["mu"], r["bipartition"]["nu"]
            extra = ""
            if "unipotent" in r:
                extra = f"  ->  {r['unipotent']['parts']}" + ("  [special]" if r["special"] else "")
            print(f"{json.dumps(r['symbol'], sort_keys=True)}  ({mu})({nu}){extra}")
    return 0


def cmd_hasse(args, parser) -> int:
    _check_budget(parser, "hasse", args.n)
    if args.verify:
        return _run_verify("hasse")
    covers = hasse(args.type, args.n)
    if args.format == "dot":
        symbols = enumerate_symbols(args.type, args.n)
        if args.type in ("B", "C"):
            order = sorted(symbols, key=lambda s: (-centralizer_dim(s), _sym_label(s)))
        else:
            order = sorted(symbols, key=_sym_label)
        print("digraph closure {")
        print('  rankdir="BT";')
        ids = {s: f"n{i}" for i, s in enumerate(order)}
        for s in order:
            print(f'  {ids[s]} [label="{_sym_label(s)}"];')
        for a, b in covers:
            print(f"  {ids[a]} -> {ids[b]};")
        print("}")
    elif args.format == "json":
        print(_dumps([{"lower": to_json(a), "upper": to_json(b)} for a, b in covers]))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["lower", "upper"])
        for a, b in covers:
            w.writerow(
                [json.dumps(to_json(a), sort_keys=True), json.dumps(to_json(b), sort_keys=True)]
            )
    else:
        for a, b in covers:
            print(f"{_sym_label(a)}  <  {_sym_label(b)}")
        print(f"covers: {len(covers)}")
    return 0


def cmd_pieces(args, parser) -> int:
    _check_budget(parser, "pieces", args.n)
    if args.type == "D":
        parser.error("nilpotent pieces are defined for types B and C only, not D")
    if args.verify:
        return _run_verify("pieces")
    rep = piece_report(args.type, args.n, with_ms=args.n <= 6)
    if args.format == "json":
        print(_dumps(rep.to_json()))
    else:
        print(f"pieces of {args.type}{args.n}: {len(rep.pieces)} (three-way agree: {rep.agree})")
        for piece in rep.pieces:
            lam = piece["unipotent"]["parts"]
            members = ", ".join(json.dumps(m, sort_keys=True) for m in piece["members"])
            print(f"  {lam}: upsilon {piece['upsilon'][0]}  <- {members}")
    return 0 if rep.agree else 1


def cmd_oracle(args, parser) -> int:
    _check_budget(parser, "oracle", args.n)
    if args.verify:
        return _run_verify("oracle")
    counts = classify_all(args.type, args.n)
    if args.type in ("B", "C"):
        keys = {s: to_json(s) for s in counts}
        matches = set(counts) == set(enumerate_symbols(args.type, args.n))
    else:
        keys = {
            k: {"type": "D", "lambda": list(k[0]), "chi": {str(p): c for p, c in zip(sorted(set(k[0]), reverse=True), k[1])}}
            for k in counts
        }
        matches = {(s.lam, s.chi) for s in enumerate_symbols(args.type, args.n)} == set(counts)
    doc = {
        "type": args.type,
        "n": args.n,
        "form_count": form_count(args.type, args.n),
        "nilpotent_total": sum(counts.values()),
        "matches_enumeration": matches,
        "counts": sorted(
            ({"symbol": keys[k], "count": v} for k, v in counts.items()),
            key=lambda r: json.dumps(r["symbol"], sort_keys=True),
        ),
    }
    if args.dump:
        with open(args.dump, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["form_bits", "symbol"])
            for idx in range(form_count(args.type, args.n)):
                inv = invariant_of_index(args.type, args.n, idx)
                if inv is None:
                    continue
                doc_inv = to_json(inv) if args.type in ("B", "C") else {
                    "type": "D",
                    "lambda": list(inv[0]),
                    "chi": list(inv[1]),
                }
                w.writerow([idx, json.dumps(doc_inv, sort_keys=True)])
        doc["dump"] = args.dump
    if args.format == "json":
        print(_dumps(doc))
    else:
        print(f"{args.type}{args.n}: {doc['nilpotent_total']} nilpotent forms of {doc['form_count']}")
        for row in doc["counts"]:
            print(f"  {json.dumps(row['symbol'], sort_keys=True)}: {row['count']}")
        print(f"matches enumeration: {matches}")
    return 0 if matches else 1


def cmd_exceptional(args, parser) -> int:
    from .sweeps import expected_orbit_size, nilpotent_sweep_g2, orbit_bfs_row
    from .tables import mass_check, table

    if args.verify:
        return _run_verify("exceptional")
    group = args.group
    if args.mass:
        ok, report = mass_check(group)
        if args.format == "json":
            print(_dumps(report))
        else:
            print(f"mass = {report['expected']} {'OK' if ok else 'FAIL (got ' + report['sum'] + ')'}")
        return 0 if ok else 1
    if args.census:
        if group != "G2" or args.q != 3:
            parser.error("--census is available for --group G2 --q 3")
        c = nilpotent_sweep_g2(args.q)
        ok = c["total"] == args.q ** (2 * 6)
        if args.format == "json":
            print(_dumps({**c, "multiplicity": {str(k): v for k, v in c["multiplicity"].items()}, "ok": ok}))
        else:
            print(f"G2(F_{args.q}) census: {c['orbit_sizes']} total {c['total']} {'OK' if ok else 'FAIL'}")
        return 0 if ok else 1
    if args.bfs:
        try:
            expected = expected_orbit_size(group, args.bfs, args.q)
            res = orbit_bfs_row(group, args.bfs, args.q, cap=args.cap)
        except NilorbError as e:
            print(_dumps({"error": str(e)}))
            return 1
        doc = {
            "group": group,
            "label": args.bfs,
            "q": args.q,
            "size": res.size,
            "capped": res.capped,
            "expected": expected,
            "ok": (not res.capped) and res.size == expected,
        }
        if args.format == "json":
            print(_dumps(doc))
        else:
            state = "capped" if res.capped else ("OK" if doc["ok"] else "MISMATCH")
            print(f"orbit xi_{args.bfs} of {group}(F_{args.q}): {res.size} (expected {expected}) {state}")
        return 0 if doc["ok"] else 1
    rows = [
        {"label": r.label, "orbit": r.orbit, "rep": [list(x) for x in r.rep], "centralizer": r.centralizer_str}
        for r in table(group)
    ]
    if args.format == "json":
        print(_dumps(rows))
    else:
        for r in rows:
            rep = " + ".join(f"{tok}*e'_{rn}" for rn, tok in r["rep"]) or "0"
            print(f"xi_{r['label']:<5} {r['orbit']:<8} {rep:<55} |Z| = {r['centralizer']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilorb",
        description="Nilpotent coadjoint orbits in bad characteristic: "
        "enumeration, closure order, Springer maps, pieces, and finite-field "
        "verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, types=("B", "C", "D")):
        p.add_argument("--type", choices=types, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "text", "dot"), default="text")
        p.add_argument("--verify", action="store_true", help="run the invariant suite instead")
        p.add_argument("--verbose", action="store_true")

    add_common(sub.add_parser("enumerate", help="list orbit symbols"))
    add_common(sub.add_parser("springer", help="Springer images and piece labels"))
    add_common(sub.add_parser("hasse", help="covering pairs of the closure order"))
    add_common(sub.add_parser("pieces", help="nilpotent pieces three ways"))
    p = sub.add_parser("oracle", help="exhaustive F2 classification sweep")
    add_common(p)
    p.add_argument("--dump", metavar="CSV", help="write (form_bits, symbol) rows")

    p = sub.add_parser("exceptional", help="G2/F4 tables, mass identity, BFS")
    p.add_argument("--group", choices=("G2", "F4"), required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--mass", action="store_true")
    p.add_argument("--census", action="store_true")
    p.add_argument("--bfs", metavar="LABEL", help="BFS one table row, e.g. 17 or 16,1")
    p.add_argument("--cap", type=int, default=20_000_000)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "exceptional" and args.q is None:
        args.q = 3 if args.group == "G2" else 2
    handlers = {
        "enumerate": cmd_enumerate,
        "springer": cmd_springer,
        "hasse": cmd_hasse,
        "pieces": cmd_pieces,
        "oracle": cmd_oracle,
        "exceptional": cmd_exceptional,
    }
    try:
        return handlers[args.command](args, parser)
    except verify_mod.VerificationFailure as e:
        print(_dumps({"ok": False, "check": e.check, "detail": e.detail}))
        return 1
    except NilorbError as e:
        print(_dumps({"error": str(e)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())

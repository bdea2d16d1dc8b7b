"""Command-line front end.

Exit codes are a stable contract:
  0 found / all-pass, 1 nothing found, 2 parse error, 3 precondition
  refused, 4 verification failure, 5 counterexample found, 6 budget
  exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import catalog as cat
from .errors import (
    BudgetExceededError,
    FlatkitError,
    GenerationError,
    MatrixParseError,
    UsageError,
)
from .matroid import DEFAULT_CLOSURE_BUDGET, Matroid, load_matrix, parse_matrix, save_matrix, write_matrix
from .search import (
    SearchReport,
    SearchStats,
    conjecture_instances,
    find_elementary_flat,
    find_ordinary_flat_brute,
    find_ordinary_flat_constructive,
    find_two_point_line,
    is_elementary,
    is_ordinary,
    search_conjecture_counterexample,
)

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY_FAIL = 4
EXIT_COUNTEREXAMPLE = 5
EXIT_BUDGET = 6


def _load_input(ref: str):
    """A positional input is a file path when it exists or looks like one,
    otherwise a catalog reference like `uniform:2,3`."""
    if os.path.exists(ref) or os.sep in ref or ref.endswith(".mat"):
        return load_matrix(ref)
    return cat.build_ref(ref)


def _print(s=""):
    sys.stdout.write(s + "\n")


# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.export:
        ref, path = args.export
        rep = cat.build_ref(ref)
        save_matrix(rep, path)
        _print(f"wrote {ref} to {path}")
        return EXIT_FOUND
    _print(f"{'name':<14} {'params':<24} certified facts")
    for entry in cat.ENTRIES.values():
        facts = "; ".join(entry.certified_facts)
        _print(f"{entry.name:<14} {entry.params or '-':<24} {facts}")
    return EXIT_FOUND


def cmd_analyze(args) -> int:
    rep = _load_input(args.input)
    M = Matroid(rep)
    out = {
        "input": args.input,
        "conductor": rep.conductor,
        "rank": M.rank(),
        "elements": len(M.ground),
        "points": len(M.parallel_classes()),
        "simple": M.is_simple(),
    }
    if args.simple and not args.flats:
        if args.json:
            _print(json.dumps({"simple": out["simple"]}))
        else:
            _print(f"simple: {out['simple']}")
        return EXIT_FOUND
    flats_out = None
    if args.flats is not None:
        flats = M.flats_of_rank(args.flats, budget=args.budget)
        flats_out = []
        for fl in flats:
            flats_out.append({
                "elements": list(fl.elements),
                "size": len(fl.elements),
                "points": len(M.parallel_classes(within=fl.elements)),
                "ordinary": is_ordinary(M, fl) is not None,
                "elementary": is_elementary(M, fl),
            })
        out["flats"] = {"rank": args.flats, "count": len(flats),
                        "list": flats_out}
    if args.json:
        _print(json.dumps(out))
        return EXIT_FOUND
    _print(f"rank {out['rank']}, {out['elements']} elements, "
           f"{out['points']} points, "
           f"{'simple' if out['simple'] else 'not simple'}, "
           f"conductor {out['conductor']}")
    if flats_out is not None:
        _print(f"rank-{args.flats} flats: {len(flats_out)}")
        for f in flats_out:
            tags = []
            tags.append("ordinary" if f["ordinary"] else "not ordinary")
            tags.append("elementary" if f["elementary"] else "not elementary")
            _print(f"  {{{', '.join(f['elements'])}}}  "
                   f"{f['points']} points, {', '.join(tags)}")
    return EXIT_FOUND


def _emit_find(args, payload):
    if args.json:
        _print(json.dumps(payload))
        return
    if payload["outcome"] != "witness found":
        _print(payload["outcome"])
        return
    w = payload["witness"]
    _print(f"flat: {{{', '.join(w['flat'])}}}")
    if w.get("point"):
        _print(f"  point:      {{{', '.join(w['point'])}}}")
        _print(f"  complement: {{{', '.join(w['complement'])}}}")
    if payload.get("trace") and not args.json:
        for lv in payload["trace"]["levels"]:
            _print(f"  level k={lv['k']}: x={lv['x']} y={lv['y']} "
                   f"z={lv['z']} w={lv['w']} output={lv['output']}")


def cmd_find_ordinary(args) -> int:
    rep = _load_input(args.input)
    M = Matroid(rep)
    trace = None
    if args.method == "constructive":
        flat, witness, trace = find_ordinary_flat_constructive(M, args.k)
        got = (flat, witness)
    else:
        got = find_ordinary_flat_brute(M, args.k, budget=args.budget)
    payload = {"mode": args.method, "k": args.k,
               "outcome": "witness found" if got else "exhausted",
               "witness": None}
    if got:
        flat, w = got
        payload["witness"] = {"flat": list(flat.elements),
                              "point": list(w.point.elements),
                              "complement": list(w.complement.elements)}
    if args.trace and trace is not None:
        payload["trace"] = trace.to_json_dict()
    _emit_find(args, payload)
    return EXIT_FOUND if got else EXIT_NONE


def cmd_find_elementary(args) -> int:
    rep = _load_input(args.input)
    M = Matroid(rep)
    flat = find_elementary_flat(M, args.k, budget=args.budget)
    payload = {"mode": "elementary", "k": args.k,
               "outcome": "witness found" if flat else "exhausted",
               "witness": {"flat": list(flat.elements)} if flat else None}
    _emit_find(args, payload)
    return EXIT_FOUND if flat else EXIT_NONE


# ---------------------------------------------------------------------------

SUITE_RANK = {
    "kelly": lambda k: 4,
    "main-theorem": lambda k: 4 * (k - 1),
    "corollary": lambda k: 4 ** (k - 1),
}


def _verify_trial(suite, rep, M, k):
    if suite == "kelly":
        w = find_two_point_line(M)
        return w, w is not None
    if suite == "main-theorem":
        flat, witness, _ = find_ordinary_flat_constructive(M, k)
        # independent recheck on a fresh matroid, no cache reuse
        fresh = Matroid(rep)
        recheck = is_ordinary(fresh, fresh.as_flat(flat.elements))
        return witness, recheck is not None
    if suite == "corollary":
        fl = find_elementary_flat(M, k)
        return fl, fl is not None
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    k = args.k
    if args.suite == "kelly":
        k = 2
    elif k is None:
        raise UsageError(f"--k is required for suite {args.suite}")
    rank = SUITE_RANK[args.suite](k)
    if args.suite == "main-theorem" and k < 2:
        raise UsageError("main-theorem suite needs k >= 2")
    reports = []
    failures = []
    for i in range(args.trials):
        s = args.seed * 1000003 + i
        if args.cols:
            m = args.cols
        else:
            m = rank + 4 + random.Random(s).randint(0, 2)
        rep = cat.random_instance(rank, m, args.conductor, seed=s)
        M = Matroid(rep)
        t0 = time.perf_counter()
        before = M.rank_calls
        witness, ok = _verify_trial(args.suite, rep, M, k)
        stats = SearchStats(rank_calls=M.rank_calls - before,
                            ms=(time.perf_counter() - t0) * 1000)
        reports.append(SearchReport(
            mode="verify", seed=s, conductor=args.conductor, rank=rank, k=k,
            outcome="witness found" if ok else "exhausted",
            witness=witness, stats=stats))
        if not ok:
            failures.append((s, rep))
    if args.json:
        doc = {"suite": args.suite, "k": k, "trials": args.trials,
               "seed": args.seed, "conductor": args.conductor,
               "reports": [r.to_json_dict(deterministic=True)
                           for r in reports]}
        _print(json.dumps(doc))
    else:
        passed = sum(1 for r in reports if r.outcome == "witness found")
        for r in reports:
            _print(f"trial seed={r.seed} {r.outcome} "
                   f"({r.stats.rank_calls} rank calls, "
                   f"{r.stats.ms:.0f} ms)")
        _print(f"{passed}/{args.trials} pass")
    for s, rep in failures:
        path = f"failure-{args.suite}-k{k}-seed{s}.mat"
        save_matrix(rep, path)
        _print(f"dumped failing instance to {path}")
    return EXIT_VERIFY_FAIL if failures else EXIT_FOUND


def cmd_search(args) -> int:
    if args.k < 2:
        raise UsageError("conjectures are stated for k >= 2")
    stream = conjecture_instances(args.conjecture, args.k, args.trials,
                                  args.seed, conductor=args.conductor)
    report = search_conjecture_counterexample(
        stream, args.conjecture, args.k, budget=args.budget)
    if args.json:
        _print(json.dumps(report.to_json_dict(deterministic=True)))
    else:
        _print(f"conjecture {args.conjecture}, k={args.k}, "
               f"rank {report.rank}: {report.mode} / {report.outcome} "
               f"({report.stats.flats_enumerated} closures, "
               f"{report.stats.rank_calls} rank calls)")
    if report.mode == "counterexample":
        path = f"counterexample-c{args.conjecture}-k{args.k}-seed{report.seed}.mat"
        save_matrix(report.instance, path)
        _print(f"dumped counterexample to {path}")
        return EXIT_COUNTEREXAMPLE
    if report.outcome == "budget exceeded":
        return EXIT_BUDGET
    return EXIT_FOUND


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="flatkit",
        description="exact search for ordinary and elementary flats of "
                    "matroids represented over cyclotomic fields")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list or export named constructions")
    c.add_argument("--export", nargs=2, metavar=("REF", "OUT"))
    c.set_defaults(func=cmd_catalog)

    a = sub.add_parser("analyze", help="rank/simplicity/flat report")
    a.add_argument("input")
    a.add_argument("--flats", type=int, default=None, metavar="K")
    a.add_argument("--simple", action="store_true")
    a.add_argument("--summary", action="store_true")
    a.add_argument("--json", action="store_true")
    a.add_argument("--budget", type=int, default=DEFAULT_CLOSURE_BUDGET)
    a.set_defaults(func=cmd_analyze)

    fo = sub.add_parser("find-ordinary", help="find an ordinary rank-k flat")
    fo.add_argument("input")
    fo.add_argument("--k", type=int, required=True)
    fo.add_argument("--method", choices=("brute", "constructive"),
                    default="brute")
    fo.add_argument("--trace", action="store_true")
    fo.add_argument("--json", action="store_true")
    fo.add_argument("--budget", type=int, default=DEFAULT_CLOSURE_BUDGET)
    fo.set_defaults(func=cmd_find_ordinary)

    fe = sub.add_parser("find-elementary",
                        help="find an elementary rank-k flat")
    fe.add_argument("input")
    fe.add_argument("--k", type=int, required=True)
    fe.add_argument("--json", action="store_true")
    fe.add_argument("--budget", type=int, default=DEFAULT_CLOSURE_BUDGET)
    fe.set_defaults(func=cmd_find_elementary)

    v = sub.add_parser("verify", help="randomized theorem verification")
    v.add_argument("--suite", choices=tuple(SUITE_RANK), required=True)
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--trials", type=int, default=25)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cols", type=int, default=None)
    v.add_argument("--conductor", type=int, default=1,
                   choices=cat.SUPPORTED_CONDUCTORS)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="conjecture counterexample search")
    s.add_argument("--conjecture", type=int, choices=(1, 2), required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--trials", type=int, default=25)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=float, default=DEFAULT_CLOSURE_BUDGET)
    s.add_argument("--conductor", type=int, default=1,
                   choices=cat.SUPPORTED_CONDUCTORS)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "budget"):
        args.budget = int(args.budget)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, GenerationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

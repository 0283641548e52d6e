"""Batch command-line front end.

Every invocation prints one JSON document on stdout.  Exit codes: 0 for
ok/verified, 1 when a witness or refutation was found, 2 for usage or
budget errors.  All randomized commands require --seed and are
byte-reproducible for a fixed seed.
"""

import argparse
import json
import sys
import time

from . import core, cycling, indep, simplex, verifier

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_USAGE = 2


def _emit(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_construct(args):
    fam = cycling.construct_family(args.n, args.k)
    text = core.serialize(fam, k=args.k)
    if args.out:
        _write(args.out, text)
    _emit(
        {
            "command": "construct",
            "n": args.n,
            "k": args.k,
            "rounds": len(fam.rounds),
            "family": core.family_to_document(fam, k=args.k),
        }
    )
    return EXIT_OK


def cmd_verify(args):
    t0 = time.perf_counter()
    fam = core.deserialize(_read(args.family))
    doc = verifier.run_check(fam, args.k, args.mode)
    doc["elapsed"] = round(time.perf_counter() - t0, 6)
    _emit(doc)
    return EXIT_OK if doc["status"] == "ok" else EXIT_WITNESS


def cmd_lowerbound(args):
    _emit(
        {
            "command": "lowerbound",
            "n": args.n,
            "k": args.k,
            "value": cycling.lower_bound(args.n, args.k),
        }
    )
    return EXIT_OK


def cmd_search_exact(args):
    res = cycling.exact_min_search(
        args.n, args.k, args.max_rounds, node_budget=args.node_budget
    )
    doc = {"command": "search-exact", "n": args.n, "k": args.k}
    doc.update(res.to_document())
    _emit(doc)
    if res.status == "minimum":
        return EXIT_OK
    if res.status == "refuted":
        return EXIT_WITNESS
    return EXIT_USAGE


def cmd_simplex_budget(args):
    _emit(
        {
            "command": "simplex-budget",
            "n": args.n,
            "r": args.r,
            "value": simplex.lll_round_budget(args.n, args.r),
        }
    )
    return EXIT_OK


def cmd_simplex_construct(args):
    t = args.rounds if args.rounds else simplex.lll_round_budget(args.n, args.r)
    try:
        fam = simplex.randomized_construct(
            args.n, args.r, t, args.seed, resample_limit=args.resample_limit
        )
    except simplex.ResampleLimitExceeded as e:
        _emit(
            {
                "command": "simplex-construct",
                "status": "resample_limit_exhausted",
                "n": args.n,
                "r": args.r,
                "rounds": t,
                "stuck": list(e.stuck),
                "resamples": e.resamples,
            }
        )
        return EXIT_USAGE
    if args.out:
        _write(args.out, simplex.serialize_simplex_family(fam))
    _emit(
        {
            "command": "simplex-construct",
            "status": "ok",
            "n": args.n,
            "r": args.r,
            "rounds": t,
            "family": simplex.simplex_family_to_document(fam),
        }
    )
    return EXIT_OK


def cmd_simplex_verify(args):
    fam = simplex.deserialize_simplex_family(_read(args.family))
    witness = simplex.check_simplex_family(fam)
    doc = {
        "command": "simplex-verify",
        "status": "ok" if witness is None else "fail",
        "n": fam.n,
        "r": fam.r,
        "rounds": len(fam.rounds),
    }
    if witness is not None:
        doc["witness"] = witness.to_document()
    _emit(doc)
    return EXIT_OK if witness is None else EXIT_WITNESS


def cmd_simplex_maxcover(args):
    try:
        value = simplex.max_consistent_per_round(args.n, args.r, force=args.force)
    except ValueError as e:
        _emit({"command": "simplex-maxcover", "status": "guard_exceeded", "error": str(e)})
        return EXIT_USAGE
    _emit({"command": "simplex-maxcover", "n": args.n, "r": args.r, "value": value})
    return EXIT_OK


def cmd_indep_verify(args):
    fam = indep.deserialize_set_family(_read(args.family))
    witness = indep.is_k_independent(fam, args.k)
    doc = {
        "command": "indep-verify",
        "status": "ok" if witness is None else "fail",
        "t": fam.ground_size,
        "m": len(fam),
        "k": args.k,
    }
    if witness is not None:
        doc["witness"] = witness.to_document()
    _emit(doc)
    return EXIT_OK if witness is None else EXIT_WITNESS


def cmd_indep_construct(args):
    try:
        fam = indep.randomized_family(
            args.m, args.k, args.t, args.seed, retries=args.retries
        )
    except indep.RetriesExhausted as e:
        _emit(
            {
                "command": "indep-construct",
                "status": "retries_exhausted",
                "m": args.m,
                "k": args.k,
                "t": args.t,
                "error": str(e),
            }
        )
        return EXIT_USAGE
    if args.out:
        _write(args.out, indep.serialize_set_family(fam))
    _emit(
        {
            "command": "indep-construct",
            "status": "ok",
            "m": args.m,
            "k": args.k,
            "t": args.t,
            "family": indep.set_family_to_document(fam),
        }
    )
    return EXIT_OK


def cmd_indep_orient(args):
    fam = indep.deserialize_set_family(_read(args.family))
    orientations = indep.derive_orientations(fam, args.n)
    witness = verifier.check_all_orderings(orientations, args.k_check)
    doc = {
        "command": "indep-orient",
        "status": "ok" if witness is None else "fail",
        "n": args.n,
        "k": args.k_check,
        "rounds": len(orientations.rounds),
        "family": core.family_to_document(orientations),
    }
    if witness is not None:
        doc["witness"] = witness.to_document()
    if args.out:
        _write(args.out, core.serialize(orientations, k=args.k_check))
    _emit(doc)
    return EXIT_OK if witness is None else EXIT_WITNESS


def build_parser():
    p = argparse.ArgumentParser(
        prog="cyclecover",
        description="Construct and exhaustively verify cycle-covering "
        "orientation families, facet-orientation rounds, and k-independent "
        "set families.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="optimal increasing k-cycling family")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out", type=str, default=None)
    sp.set_defaults(fn=cmd_construct)

    sp = sub.add_parser("verify", help="exhaustively verify a family file")
    sp.add_argument("--family", type=str, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mode", choices=["increasing", "weak", "all"], required=True)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("lowerbound", help="exact round-count lower bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(fn=cmd_lowerbound)

    sp = sub.add_parser("search-exact", help="exact minimum search (tiny n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-rounds", type=int, required=True)
    sp.add_argument("--node-budget", type=int, default=5_000_000)
    sp.set_defaults(fn=cmd_search_exact)

    sp = sub.add_parser("simplex-budget", help="local-lemma round budget")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(fn=cmd_simplex_budget)

    sp = sub.add_parser("simplex-construct", help="randomized facet rounds")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--rounds", type=int, default=None)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--resample-limit", type=int, default=100_000)
    sp.add_argument("--out", type=str, default=None)
    sp.set_defaults(fn=cmd_simplex_construct)

    sp = sub.add_parser("simplex-verify", help="verify a facet-round family file")
    sp.add_argument("--family", type=str, required=True)
    sp.set_defaults(fn=cmd_simplex_verify)

    sp = sub.add_parser("simplex-maxcover", help="max consistent r-sets per round")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(fn=cmd_simplex_maxcover)

    sp = sub.add_parser("indep-verify", help="verify a set-family file")
    sp.add_argument("--family", type=str, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(fn=cmd_indep_verify)

    sp = sub.add_parser("indep-construct", help="randomized k-independent family")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--retries", type=int, default=20)
    sp.add_argument("--out", type=str, default=None)
    sp.set_defaults(fn=cmd_indep_construct)

    sp = sub.add_parser("indep-orient", help="set family -> orientation rounds")
    sp.add_argument("--family", type=str, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k-check", type=int, required=True, dest="k_check")
    sp.add_argument("--out", type=str, default=None)
    sp.set_defaults(fn=cmd_indep_orient)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as e:
        _emit({"status": "error", "error": str(e)})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: construct, verify, witness, search, simulate.

JSON goes to stdout (fixed key order, byte-stable); a short human-readable
table goes to stderr.  Exit codes: 0 success, 2 bad input or inadmissible
parameters, 3 a claimed property failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .codes import CodeError, is_codeword, load_code, save_code
from .constructions import InadmissibleParameters, admissibility, construct
from .gf import FieldError
from .repairsim import PlanError, make_plan, simulate
from .verify.classify import METHODS, ClassifyOptions, classify
from .verify.distance import SearchCapExceeded

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3
CLI_FAMILIES = ("thm-even", "prop3", "thm-odd", "remark", "thm3", "thm4")


class InputError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _table(rows: list[dict], cols: Sequence[str]) -> None:
    widths = {c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows]) for c in cols}
    line = "  ".join(c.ljust(widths[c]) for c in cols)
    print(line, file=sys.stderr)
    print("-" * len(line), file=sys.stderr)
    for r in rows:
        print("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in cols), file=sys.stderr)


def _lam_repr(code) -> int | list[int]:
    coords = code.lam.to_json()
    return coords[0] if all(c == 0 for c in coords[1:]) else coords


# -- commands

def cmd_construct(args) -> int:
    code, witness, params = construct(args.family, args.q, args.m, args.alpha_power, args.pi_exp)
    claims = params.claims()
    if args.out:
        save_code(code, args.out, claims)
    summary = {"family": params.family, "q": code.q, "m": params.m, "n": code.n, "k": code.k,
               "lambda": _lam_repr(code), "deg_g": int(code.g.degree), "out": args.out}
    _emit(summary)
    _table([summary], ["family", "q", "m", "n", "k", "lambda", "deg_g"])
    return EXIT_OK


def _claim_mismatches(claims: dict | None, prof) -> list[str]:
    if not claims:
        return []
    bad = []
    for key, got in (("n", prof.n), ("k", prof.k), ("d", prof.d_exact), ("r", prof.r)):
        if key in claims and claims[key] is not None and claims[key] != got:
            bad.append(f"{key}: claimed {claims[key]}, verified {got}")
    if claims.get("perfect") and not prof.is_perfect:
        bad.append("perfect: claimed true, not verified")
    if claims.get("singleton_optimal") and not prof.is_singleton_optimal:
        bad.append("singleton_optimal: claimed true, not verified")
    return bad


def cmd_verify(args) -> int:
    code, claims = load_code(args.code)
    opts = ClassifyOptions(method=args.method, r=args.r, jobs=args.jobs)
    prof = classify(code, opts)
    report = prof.to_json()
    bad = _claim_mismatches(claims, prof)
    report["claims_checked"] = claims is not None
    report["mismatches"] = bad
    _emit(report)
    _table([{**report, "d": report["d_exact"]}],
           ["n", "k", "d_lower", "d", "r", "singleton_defect", "perfect"])
    for b in bad:
        print(f"mismatch: {b}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_witness(args) -> int:
    params = admissibility(args.family, args.q, args.m)
    code, witness, _ = construct(args.family, args.q, args.m, args.alpha_power, args.pi_exp)
    if witness is None:
        raise InputError(f"family {params.family} has no explicit witness codeword")
    member = bool(is_codeword(code, witness.dense()))
    out = {"family": params.family, "q": args.q, "m": args.m, "n": code.n,
           "weight": witness.weight, "member": member, **witness.to_json()}
    _emit(out)
    _table([out], ["family", "q", "m", "n", "weight", "member"])
    return EXIT_OK if member else EXIT_MISMATCH


def _prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        v = q
        while v % p == 0:
            v //= p
        if v == 1:
            out.append(q)
    return out


def cmd_search(args) -> int:
    fams = [f.strip() for f in args.families.split(",") if f.strip()]
    for f in fams:
        if f not in CLI_FAMILIES:
            raise InputError(f"unknown family {f!r}; choose from {', '.join(CLI_FAMILIES)}")
    rows = []
    for fam in fams:
        for q in _prime_powers(args.max_q):
            ms = [None] if fam not in ("thm3", "thm4") else range(2, args.max_m + 1, 2)
            for m in ms:
                try:
                    p = admissibility(fam, q, m)
                except InadmissibleParameters:
                    continue
                if p.n > args.max_n:
                    continue
                rows.append({"family": p.family, "q": q, "m": m, "n": p.n, "k": p.k,
                             "d": p.d, "r": p.r})
    _emit(rows)
    _table(rows, ["family", "q", "m", "n", "k", "d", "r"])
    return EXIT_OK


def cmd_simulate(args) -> int:
    code, _ = load_code(args.code)
    plan = make_plan(code, args.r)
    rep = simulate(code, plan, args.erasures, args.trials, args.seed, jobs=args.jobs)
    out = rep.to_json()
    _emit(out)
    _table([out], ["trials", "erasures_per_trial", "repaired", "unrepairable",
                   "unrepairable_fraction", "average_repair_degree"])
    return EXIT_OK if rep.wrong_repairs == 0 else EXIT_MISMATCH


# -- parser

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclic-lrc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--family", required=True, choices=CLI_FAMILIES)
        p.add_argument("--q", type=_positive, required=True)
        p.add_argument("--m", type=_positive)
        p.add_argument("--alpha-power", type=_positive, default=1,
                       help="use alpha^j as the primitive n-th root (cyclic families)")
        p.add_argument("--pi-exp", type=_positive, default=1,
                       help="use generator^e as the primitive element pi (thm4)")

    p = sub.add_parser("construct", help="build a code and write its code file")
    family_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="recompute distance, locality and optimality")
    p.add_argument("--code", required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--r", type=_positive, default=2)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="print the explicit weight-5 codeword")
    family_args(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("search", help="list admissible parameters")
    p.add_argument("--max-q", type=_positive, required=True)
    p.add_argument("--families", default=",".join(CLI_FAMILIES))
    p.add_argument("--max-m", type=_positive, default=6)
    p.add_argument("--max-n", type=_positive, default=10**6)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("simulate", help="local-repair simulation")
    p.add_argument("--code", required=True)
    p.add_argument("--erasures", type=_nonneg, required=True)
    p.add_argument("--trials", type=_nonneg, required=True)
    p.add_argument("--seed", type=_nonneg, required=True)
    p.add_argument("--r", type=_positive, default=2)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InadmissibleParameters, InputError, CodeError, FieldError, PlanError,
            SearchCapExceeded, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

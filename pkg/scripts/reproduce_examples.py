"""Rebuild the published reference instances and re-verify each one from scratch.

Usage: python3 scripts/reproduce_examples.py [--only NAME ...] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

from cyclic_lrc.constructions import construct, find_pi_for_minimal_polynomial
from cyclic_lrc.gf import make_field
from cyclic_lrc.reference import CASES, Q5_N3906_SEXTIC, printed_generator
from cyclic_lrc.verify import ClassifyOptions, classify


@dataclass
class ReproduceConfig:
    only: list[str] = field(default_factory=list)
    json_out: str | None = None
    jobs: int = 1


def _printed_match(case, code_for) -> str:
    """Which alpha powers (or pi) reproduce the printed generator, if one is printed."""
    if case.printed_g is None:
        return "n/a"
    if case.family == "thm4":
        return "yes" if code_for(None).g == printed_generator(case, code_for(None).big_field) else "no"
    hits = [j for j in range(1, case.n) if math.gcd(j, case.n) == 1
            and code_for(j).g == printed_generator(case, code_for(j).big_field)]
    return ",".join(f"alpha^{j}" for j in hits) or "no"


def reproduce(cfg: ReproduceConfig) -> list[dict]:
    rows = []
    for name, case in CASES.items():
        if cfg.only and name not in cfg.only:
            continue
        t0 = time.perf_counter()
        pi_exp = 1
        if case.name == "q5_n3906":
            pi_exp = find_pi_for_minimal_polynomial(make_field(5, 6), Q5_N3906_SEXTIC)

        def code_for(j, case=case, pi_exp=pi_exp):
            return construct(case.family, case.q, case.m, j or 1, pi_exp)[0]

        code, witness, _ = construct(case.family, case.q, case.m, 1, pi_exp)
        opts = ClassifyOptions(jobs=cfg.jobs, witness=None if witness is None else witness.dense())
        prof = classify(code, opts)
        rows.append({
            "case": name, "family": case.family, "q": case.q, "m": case.m,
            "n": code.n, "k": code.k, "d": prof.d_exact, "d_expected": case.d, "r": prof.r,
            "lambda": code.lam.value, "singleton_defect": prof.singleton_defect,
            "perfect": prof.is_perfect, "printed_g": _printed_match(case, code_for),
            "seconds": round(time.perf_counter() - t0, 2),
        })
        print(_fmt(rows[-1]), file=sys.stderr)
    return rows


def _fmt(row: dict) -> str:
    return "  ".join(f"{k}={v}" for k, v in row.items())


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", nargs="*", default=[], choices=sorted(CASES))
    ap.add_argument("--json", dest="json_out")
    ap.add_argument("--jobs", type=int, default=1)
    cfg = ReproduceConfig(**vars(ap.parse_args(argv)))
    rows = reproduce(cfg)
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["d"] == r["d_expected"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())

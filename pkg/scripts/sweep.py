"""Sweep admissible parameters of every family and classify the codes small enough to verify.

Usage: python3 scripts/sweep.py --max-q 32 --classify-max-n 200 --csv sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from cyclic_lrc.constructions import FAMILIES, InadmissibleParameters, admissibility, construct
from cyclic_lrc.verify import ClassifyOptions, classify

COLUMNS = ["family", "q", "m", "n", "k", "d_claimed", "d", "r", "singleton_defect", "perfect",
           "methods", "seconds"]


@dataclass
class SweepConfig:
    max_q: int = 32
    max_m: int = 4
    max_n: int = 10**5
    classify_max_n: int = 200
    families: tuple[str, ...] = FAMILIES
    csv_path: str | None = None


def _prime_powers(limit: int):
    for q in range(2, limit + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        v = q
        while v % p == 0:
            v //= p
        if v == 1:
            yield q


def sweep(cfg: SweepConfig):
    for family in cfg.families:
        ms = [None] if family not in ("thm3", "thm4") else range(2, cfg.max_m + 1, 2)
        for q in _prime_powers(cfg.max_q):
            for m in ms:
                try:
                    p = admissibility(family, q, m)
                except InadmissibleParameters:
                    continue
                if p.n > cfg.max_n:
                    continue
                row = {"family": p.family, "q": q, "m": m, "n": p.n, "k": p.k, "d_claimed": p.d}
                if p.n <= cfg.classify_max_n:
                    t0 = time.perf_counter()
                    code, witness, _ = construct(family, q, m)
                    opts = ClassifyOptions(witness=None if witness is None else witness.dense())
                    prof = classify(code, opts)
                    row.update(d=prof.d_exact, r=prof.r, singleton_defect=prof.singleton_defect,
                               perfect=prof.is_perfect, methods=" ".join(prof.methods_used),
                               seconds=round(time.perf_counter() - t0, 2))
                yield row


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-q", type=int, default=SweepConfig.max_q)
    ap.add_argument("--max-m", type=int, default=SweepConfig.max_m)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--classify-max-n", type=int, default=SweepConfig.classify_max_n)
    ap.add_argument("--families", default=",".join(FAMILIES))
    ap.add_argument("--csv", dest="csv_path")
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.max_q, a.max_m, a.max_n, a.classify_max_n,
                      tuple(f for f in a.families.split(",") if f), a.csv_path)
    out = open(cfg.csv_path, "w", newline="") if cfg.csv_path else sys.stdout
    writer = csv.DictWriter(out, COLUMNS)
    writer.writeheader()
    bad = 0
    for row in sweep(cfg):
        writer.writerow(row)
        out.flush()
        if row.get("d") is not None and row["d"] != row["d_claimed"]:
            bad += 1
    if out is not sys.stdout:
        out.close()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

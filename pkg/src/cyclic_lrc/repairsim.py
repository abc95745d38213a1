"""Local-repair simulation over disjoint repair groups.

Randomness comes from numpy's PCG64 bit generator.  Trials are split into
fixed-size chunks and chunk ``c`` draws from ``SeedSequence([seed, c])``, so the
report depends only on ``(seed, trials, chunk_size)``, not on ``jobs``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .codes import ConstacyclicCode
from .gf import subfield_codes
from .verify.locality import RepairPlan, locality_structural

CHUNK = 10_000


class PlanError(ValueError):
    """No structural locality, or a plan that fails on codewords."""


def make_plan(code: ConstacyclicCode, r: int = 2, sample: int = 100, seed: int = 0) -> RepairPlan:
    """Repair plan from the locality coset, checked on ``sample`` random codewords."""
    if code.n % (r + 1):
        raise PlanError(f"(r + 1) = {r + 1} does not divide n = {code.n}")
    plan = locality_structural(code, r)
    if plan is None:
        raise PlanError("structural locality not detected")
    words = random_codewords(code, sample, np.random.Generator(np.random.PCG64(seed)))
    if np.any(plan.relation_values(code.big_field, words)):
        raise PlanError("repair relation fails on a codeword")
    return plan


def random_codewords(code: ConstacyclicCode, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform codewords ``m(x) g(x)`` with ``m`` uniform of degree ``< k``."""
    f = code.big_field
    S = subfield_codes(f, code.q)
    msgs = S[rng.integers(0, code.q, size=(count, code.k))]
    out = np.zeros((count, code.n), dtype=np.int64)
    g = code.g.codes
    for i in np.flatnonzero(g):
        out[:, i:i + code.k] = f.add(out[:, i:i + code.k], f.mul(int(g[i]), msgs))
    return out


@dataclass(frozen=True)
class RepairResult:
    position: int
    repaired: bool
    value: int | None
    degree: int
    reason: str = ""


def repair_symbol(word, erased, position: int, plan: RepairPlan, field) -> RepairResult:
    """Restore ``word[position]`` from the rest of its group.

    ``erased`` is a boolean mask; entries of ``word`` under it are ignored.
    Two or more erasures in the group give ``repaired=False`` instead of an error.
    """
    w = np.asarray(word, dtype=np.int64)
    mask = np.asarray(erased, dtype=bool)
    g = plan.group_of(position)
    group = plan.groups[g]
    lost = [p for p in group if mask[p]]
    if position not in lost:
        return RepairResult(position, True, int(w[position]), 0, "not erased")
    if len(lost) > 1:
        return RepairResult(position, False, None, 0, "locally unrepairable")
    s = group.index(position)
    acc = 0
    for t, p in enumerate(group):
        if t != s:
            acc = int(field.add(acc, field.mul(plan.coeffs[t], w[p])))
    value = int(field.neg(field.div(acc, plan.coeffs[s])))
    return RepairResult(position, True, value, plan.r)


@dataclass(frozen=True)
class SimReport:
    trials: int
    erasures_per_trial: int
    total_erasures: int
    repaired: int
    unrepairable: int
    wrong_repairs: int
    trials_fully_local: int
    repaired_fraction: float
    unrepairable_fraction: float
    average_repair_degree: float
    seed: int

    def to_json(self) -> dict:
        return asdict(self)


def _run_chunk(args) -> tuple[int, int, int, int, int]:
    code, plan, erasures, count, seed, chunk = args
    f = code.big_field
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk])))
    words = random_codewords(code, count, rng)
    n = code.n
    # uniform erasure pattern: the first ``erasures`` entries of a random permutation
    pick = np.argsort(rng.random((count, n)), axis=1)[:, :erasures]
    mask = np.zeros((count, n), dtype=bool)
    np.put_along_axis(mask, pick, True, axis=1)
    G = np.asarray(plan.groups)
    coeffs = np.asarray(plan.coeffs)
    gmask = mask[:, G]  # (count, groups, r+1)
    per_group = gmask.sum(axis=2)
    single = per_group == 1
    # repaired value for groups with exactly one erasure
    known = np.where(gmask, 0, words[:, G])
    partial = f.dot(known, coeffs[None, None, :], axis=-1)
    slot = np.argmax(gmask, axis=2)
    c_s = coeffs[slot]
    restored = f.neg(f.div(partial, c_s))
    truth = np.take_along_axis(words[:, G], slot[:, :, None], axis=2)[:, :, 0]
    repaired = int(per_group[single].sum())
    unrepairable = int(per_group[~single].sum())
    wrong = int(np.count_nonzero(single & (restored != truth)))
    fully = int(np.count_nonzero((per_group <= 1).all(axis=1)))
    return count * erasures, repaired, unrepairable, wrong, fully


def simulate(code: ConstacyclicCode, plan: RepairPlan, erasure_count: int, trials: int,
             seed: int, jobs: int = 1, chunk_size: int = CHUNK) -> SimReport:
    """Erase ``erasure_count`` uniformly chosen symbols of a uniform codeword per trial."""
    if not 0 <= erasure_count <= code.n:
        raise ValueError(f"erasure count {erasure_count} outside [0, n = {code.n}]")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    chunks = [(code, plan, erasure_count, min(chunk_size, trials - s), seed, i)
              for i, s in enumerate(range(0, trials, chunk_size))]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_run_chunk, chunks))
    else:
        parts = [_run_chunk(c) for c in chunks]
    total = sum(p[0] for p in parts)
    rep = sum(p[1] for p in parts)
    unr = sum(p[2] for p in parts)
    wrong = sum(p[3] for p in parts)
    fully = sum(p[4] for p in parts)
    if rep + unr != total:
        raise AssertionError("erasure accounting mismatch")
    return SimReport(
        trials=trials, erasures_per_trial=erasure_count, total_erasures=total,
        repaired=rep, unrepairable=unr, wrong_repairs=wrong, trials_fully_local=fully,
        repaired_fraction=rep / total if total else 1.0,
        unrepairable_fraction=unr / total if total else 0.0,
        average_repair_degree=float(plan.r) if rep else 0.0,
        seed=seed,
    )


def hypergeometric_pair_fraction(n: int, r: int) -> float:
    """Probability that two uniform erasures land in the same group of size ``r + 1``."""
    groups = n // (r + 1)
    return groups * math.comb(r + 1, 2) / math.comb(n, 2)

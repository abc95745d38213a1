"""Orchestrates the verification ladder and assembles an ``LrcProfile``.

Nothing is taken from construction metadata: every number is recomputed from
``(n, lambda, g)`` and the root set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..codes import ConstacyclicCode, is_codeword
from .bounds import bch_lower_bound, ht_lower_bound
from .distance import (distance_at_least_subset_rank, exact_distance_enumerate,
                       find_locality_factor, structured_low_weight_search)
from .locality import RepairPlan, locality_exhaustive, locality_structural
from .optimality import is_perfect, singleton_defect

METHODS = ("auto", "enumerate", "subset-rank", "structured")


@dataclass(frozen=True)
class ClassifyOptions:
    method: str = "auto"
    r: int = 2
    enum_cap: int = 2**20
    subset_cap: int = 2 * 10**6
    ht_search_limit: int = 1000
    structured_w_max: int | None = None
    exhaustive_locality_cap: int = 2 * 10**5
    jobs: int = 1
    witness: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.r < 1:
            raise ValueError("r must be >= 1")


@dataclass
class LrcProfile:
    n: int
    k: int
    d_lower: int
    d_upper: float
    r: int | None
    d_exact: int | None = None
    singleton_defect: int | None = None
    is_singleton_optimal: bool = False
    is_perfect: bool = False
    disjoint_groups: bool = False
    methods_used: list[str] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    plan: RepairPlan | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        def num(x):
            return None if x is None or (isinstance(x, float) and math.isinf(x)) else int(x)
        return {
            "n": self.n,
            "k": self.k,
            "d_lower": num(self.d_lower),
            "d_exact": num(self.d_exact),
            "r": self.r,
            "singleton_defect": self.singleton_defect,
            "perfect": self.is_perfect,
            "certificates": self.certificates,
            "d_upper": num(self.d_upper),
            "singleton_optimal": self.is_singleton_optimal,
            "disjoint_groups": self.disjoint_groups,
            "methods": self.methods_used,
            "flags": self.flags,
        }


def _singleton_upper(n: int, k: int, r: int | None) -> int:
    if r is None or k == 0:
        return n - k + 1
    return n - k + 2 - math.ceil(k / r)


def classify(code: ConstacyclicCode, options: ClassifyOptions | None = None) -> LrcProfile:
    opt = options or ClassifyOptions()
    n, k, q = code.n, code.k, code.q
    prof = LrcProfile(n, k, 1, math.inf, None)

    # locality
    plan = locality_structural(code, opt.r) if n % (opt.r + 1) == 0 else None
    if plan is not None:
        prof.plan, prof.disjoint_groups = plan, True
        prof.r = opt.r
        prof.methods_used.append("locality:structural")
        prof.certificates.append({"kind": "locality", "r": opt.r, "eta": list(code.big_field.coords(plan.eta))})
        work = n * sum(math.comb(n - 1, s - 1) for s in range(1, opt.r + 2))
        if work <= opt.exhaustive_locality_cap:
            exact_r = locality_exhaustive(code, opt.r)
            prof.r = exact_r
            prof.methods_used.append("locality:exhaustive")
    else:
        prof.flags.append("no structural locality detected")

    # lower bounds from the root pattern
    bch, bch_cert = bch_lower_bound(code)
    ht, ht_cert = ht_lower_bound(code, opt.ht_search_limit)
    prof.certificates.append(bch_cert.to_json())
    if ht_cert != bch_cert:
        prof.certificates.append(ht_cert.to_json())
    if ht_cert.flagged:
        prof.flags.append("Hartmann-Tzeng scan skipped (n above search limit)")
    prof.d_lower = max(bch, ht)
    prof.methods_used.append("bound:BCH")
    prof.methods_used.append("bound:HT")
    prof.d_upper = _singleton_upper(n, k, prof.r)

    if opt.witness is not None:
        w = np.asarray(opt.witness, dtype=np.int64)
        if is_codeword(code, w) and np.any(w):
            wt = int(np.count_nonzero(w))
            prof.d_upper = min(prof.d_upper, wt)
            prof.methods_used.append("upper:witness")
        else:
            prof.flags.append("supplied witness is not a nonzero codeword")

    if k == 0:
        prof.d_exact, prof.d_lower, prof.d_upper = None, n + 1, math.inf
        prof.flags.append("zero code: distance is infinite")
        return prof

    method = opt.method
    if method == "auto":
        if q**k <= opt.enum_cap:
            method = "enumerate"
        elif prof.d_upper < math.inf and math.comb(n, int(prof.d_upper) - 1) <= opt.subset_cap:
            method = "subset-rank"
        elif find_locality_factor(code, opt.r) if n % (opt.r + 1) == 0 else None:
            method = "structured"
        else:
            method = None
            prof.flags.append("no exact method within the configured caps")

    if method == "enumerate":
        res = exact_distance_enumerate(code, max(opt.enum_cap, q**k), return_word=True)
        prof.d_exact = prof.d_lower = prof.d_upper = int(res.d)
        prof.methods_used.append("exact:enumerate")
    elif method == "subset-rank":
        t = prof.d_lower + 1
        d = None
        while t <= prof.d_upper:
            r = distance_at_least_subset_rank(code, t, opt.subset_cap, opt.jobs, details=True)
            if not r.holds:
                d = int(np.count_nonzero(r.witness))
                break
            prof.d_lower = t
            t += 1
        prof.methods_used.append("exact:subset-rank")
        if d is not None:
            prof.d_lower = prof.d_upper = prof.d_exact = d
        elif prof.d_lower >= prof.d_upper:
            # the lower certificate meets the Singleton-type bound; still exhibit a codeword
            U = int(prof.d_upper)
            if "upper:witness" in prof.methods_used:
                prof.d_exact = U
            elif n % (opt.r + 1) == 0 and find_locality_factor(code, opt.r) is not None:
                res = structured_low_weight_search(code, U, opt.r, w_min=U)
                prof.methods_used.append("upper:structured")
                if res.found and res.weight == U:
                    prof.d_exact = U
            if prof.d_exact is None:
                prof.flags.append("distance meets the Singleton-type bound but no codeword was exhibited")
    elif method == "structured":
        w_max = opt.structured_w_max or int(min(prof.d_upper, n))
        res = structured_low_weight_search(code, w_max, opt.r)
        prof.methods_used.append("exact:structured")
        if res.found:
            prof.d_exact = prof.d_lower = prof.d_upper = res.weight
        else:
            prof.d_lower = max(prof.d_lower, w_max + 1)
            if prof.d_lower == prof.d_upper:
                prof.d_exact = prof.d_lower

    d = prof.d_exact
    if d is not None and prof.r is not None:
        prof.singleton_defect = singleton_defect(n, k, d, prof.r)
        prof.is_singleton_optimal = prof.singleton_defect == 0
        if prof.disjoint_groups:
            prof.is_perfect = is_perfect(n, k, q, prof.r, d)
        else:
            prof.flags.append("perfection not assessed: no disjoint repair groups")
    return prof

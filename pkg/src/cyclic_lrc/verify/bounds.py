"""Root-pattern lower bounds on the minimum distance: BCH and Hartmann-Tzeng.

Both work purely on the root-exponent set ``R``: the defining roots are
``theta alpha^i`` for ``i`` in ``R`` and the bounds only need arithmetic
progressions of exponents modulo ``n``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..codes import ConstacyclicCode


@dataclass(frozen=True)
class BoundCertificate:
    """``u + i1 b1 + i2 b2`` lies in ``R`` for ``i1 < delta - 1``, ``i2 <= gamma``.

    A BCH certificate is the case ``gamma = 0`` (``b2`` unused).
    """

    kind: str
    u: int
    b1: int
    delta: int
    b2: int = 0
    gamma: int = 0
    flagged: bool = False

    @property
    def bound(self) -> int:
        return self.delta + self.gamma

    def exponents(self, n: int) -> list[int]:
        return sorted({(self.u + i1 * self.b1 + i2 * self.b2) % n
                       for i1 in range(self.delta - 1) for i2 in range(self.gamma + 1)})

    def check(self, code: ConstacyclicCode) -> bool:
        n = code.n
        if self.kind == "trivial":
            return len(code.root_exponents) == n and self.bound == n + 1
        if self.delta < 2 or self.gamma < 0:
            return self.delta == 1 and self.gamma == 0
        if math.gcd(self.b1, n) != 1:
            return False
        if self.gamma > 0 and math.gcd(self.b2, n) != 1:
            return False
        roots = set(code.root_exponents)
        return all(e in roots for e in self.exponents(n))

    def to_json(self) -> dict:
        out = asdict(self)
        out["bound"] = self.bound
        return out


def _units(n: int) -> np.ndarray:
    b = np.arange(1, max(n, 2))
    return b[np.gcd(b, n) == 1] if n > 1 else np.array([1])


def _run_lengths(mask_rows: np.ndarray) -> np.ndarray:
    """Forward run length at each position of each cyclic boolean row.

    ``out[r, v]`` counts consecutive True entries starting at ``v``
    (wrapping), capped at the row length.
    """
    rows, n = mask_rows.shape
    doubled = np.concatenate([mask_rows, mask_rows], axis=1)[:, ::-1]
    idx = np.arange(2 * n)
    last_false = np.maximum.accumulate(np.where(~doubled, idx, -1), axis=1)
    runs = (idx - last_false)[:, ::-1][:, :n]
    return np.minimum(runs, n)


def _orbit_masks(code: ConstacyclicCode, steps: np.ndarray) -> np.ndarray:
    n = code.n
    mask = np.zeros(n, dtype=bool)
    mask[list(code.root_exponents)] = True
    pos = (np.arange(n)[None, :] * steps[:, None]) % n
    return mask[pos]


def bch_lower_bound(code: ConstacyclicCode) -> tuple[int, BoundCertificate]:
    """Longest progression ``u, u+b, ...`` (gcd(b, n) = 1) inside ``R``; bound = length + 1."""
    n = code.n
    if len(code.root_exponents) == n:
        return n + 1, BoundCertificate("trivial", 0, 1, n + 1)
    bs = _units(n)
    runs = _run_lengths(_orbit_masks(code, bs))  # runs[t, i] starts at exponent i*b
    t, i = np.unravel_index(int(np.argmax(runs)), runs.shape)
    length = int(runs[t, i])
    if length == 0:
        return 1, BoundCertificate("BCH", 0, 1, 1)
    b = int(bs[t])
    cert = BoundCertificate("BCH", int(i * b % n), b, length + 1)
    return cert.bound, cert


def ht_lower_bound(code: ConstacyclicCode, search_limit: int = 1000,
                   certificate: BoundCertificate | None = None) -> tuple[int, BoundCertificate]:
    """Best Hartmann-Tzeng bound over ``(u, b1, b2)`` with ``b1, b2`` units mod n.

    For ``n > search_limit`` the full scan is skipped: a supplied certificate
    is checked and returned, otherwise the BCH bound is returned flagged.
    """
    n = code.n
    bch, bch_cert = bch_lower_bound(code)
    if bch > n:
        return bch, bch_cert
    if n > search_limit:
        if certificate is not None:
            if not certificate.check(code):
                raise ValueError("supplied Hartmann-Tzeng certificate does not hold")
            if certificate.bound >= bch:
                return certificate.bound, certificate
        return bch, BoundCertificate(bch_cert.kind, bch_cert.u, bch_cert.b1, bch_cert.delta,
                                     flagged=True)
    units = _units(n)
    mask = np.zeros(n, dtype=bool)
    mask[list(code.root_exponents)] = True
    best, best_cert = bch, bch_cert
    ar = np.arange(n)
    for b1 in units:
        # run1[v]: number of consecutive exponents v, v+b1, ... in R
        pos = (ar * b1) % n
        runs_on_orbit = _run_lengths(mask[pos][None])[0]
        run1 = np.empty(n, dtype=np.int64)
        run1[pos] = runs_on_orbit
        if run1.max() == 0:
            continue
        # window minima along every b2 at once: cur[t, u] = min_{i2<=gamma} run1[u + i2 b2_t]
        cur = np.broadcast_to(run1, (len(units), n)).copy()
        gamma = 0
        while True:
            val = np.where(cur > 0, cur + 1 + gamma, 0)
            t, u = np.unravel_index(int(np.argmax(val)), val.shape)
            if val[t, u] > best:
                best = int(val[t, u])
                best_cert = BoundCertificate("HT", int(u), int(b1), int(cur[t, u]) + 1,
                                             int(units[t]), gamma)
            gamma += 1
            if gamma >= n:
                break
            shifted = run1[(ar[None, :] + gamma * units[:, None]) % n]
            cur = np.minimum(cur, shifted)
            if not (cur > 0).any():
                break
    return best, best_cert

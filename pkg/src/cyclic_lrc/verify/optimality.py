"""Singleton-type and Hamming-type bound arithmetic for LRCs (exact integers)."""

from __future__ import annotations

import math


def singleton_defect(n: int, k: int, d: int, r: int) -> int:
    """``(n - k + 2 - ceil(k/r)) - d``; zero exactly for Singleton-optimal codes."""
    if n < 1 or k < 0 or r < 1 or d < 1:
        raise ValueError("parameters must be positive")
    return (n - k + 2 - math.ceil(k / r)) - d


def beta(r: int, i: int, q: int) -> int:
    """Number of weight-``i`` words in the length-``(r+1)`` single-parity-check code over F_q."""
    if not 0 <= i <= r + 1:
        raise ValueError(f"i = {i} outside [0, {r + 1}]")
    num = ((q - 1) ** i + (-1) ** i * (q - 1)) * math.comb(r + 1, i)
    if num % q:
        raise AssertionError(f"beta({r}, {i}) is not integral for q = {q}")
    return num // q


def bv_count(q: int, r: int, ell: int, t: int) -> int:
    """Words of weight ``<= t`` in the ``ell``-fold product of single-parity-check codes."""
    if ell < 1 or t < 0:
        raise ValueError("need ell >= 1 and t >= 0")
    base = [beta(r, i, q) for i in range(min(r + 1, t) + 1)]
    acc = [1] + [0] * t
    for _ in range(ell):
        nxt = [0] * (t + 1)
        for a, ca in enumerate(acc):
            if ca:
                for b, cb in enumerate(base):
                    if a + b > t:
                        break
                    nxt[a + b] += ca * cb
        acc = nxt
    return sum(acc)


def hamming_defect(n: int, k: int, q: int, r: int, d: int) -> int:
    """``q^{rn/(r+1) - k} - B_V(floor((d-1)/2))``; zero exactly for perfect LRCs."""
    if n % (r + 1):
        raise ValueError(f"(r + 1) does not divide n = {n}")
    t = r * n // (r + 1) - k
    if t < 0:
        raise ValueError("k exceeds rn/(r+1)")
    return q**t - bv_count(q, r, n // (r + 1), (d - 1) // 2)


def is_perfect(n: int, k: int, q: int, r: int, d: int) -> bool:
    """Equality in the Hamming-type bound for disjoint repair groups.

    For ``d`` in ``{5, 6}`` this reads ``q^{rn/(r+1) - k} = (rn/2)(q-1) + 1``.
    """
    if n % (r + 1):
        return False
    t = r * n // (r + 1) - k
    if t < 0:
        return False
    return q**t == bv_count(q, r, n // (r + 1), (d - 1) // 2)

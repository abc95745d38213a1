"""Locality: structural detection via a root coset, and exhaustive search in the dual."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ..codes import ConstacyclicCode, dual_generator, generator_matrix
from ..poly import Poly, monic_reciprocal
from .distance import find_locality_factor
from .linalg import batched_rank


@dataclass(frozen=True)
class RepairPlan:
    """Disjoint repair groups ``{j, j+l, ..., j+rl}`` with one relation each.

    Every codeword satisfies ``sum_t coeffs[t] * c[groups[j][t]] = 0`` where
    ``coeffs[t] = eta^t`` and ``x^l - eta`` divides ``g``.
    """

    n: int
    r: int
    eta: int
    groups: tuple[tuple[int, ...], ...]
    coeffs: tuple[int, ...]
    dual_word: tuple[int, ...]

    @property
    def ell(self) -> int:
        return self.n // (self.r + 1)

    def group_of(self, i: int) -> int:
        return i % self.ell

    def relation_values(self, field, words) -> np.ndarray:
        """Relation value of every group for each word; shape ``(..., n/(r+1))``."""
        W = np.asarray(words, dtype=np.int64)
        G = np.asarray(self.groups)
        return field.dot(W[..., G], np.asarray(self.coeffs)[None, :], axis=-1)

    def to_json(self, field) -> dict:
        return {"r": self.r, "eta": list(field.coords(self.eta)),
                "groups": [list(g) for g in self.groups],
                "coeffs": [list(field.coords(c)) for c in self.coeffs]}


def locality_structural(code: ConstacyclicCode, r: int = 2) -> RepairPlan | None:
    """Repair plan from a full coset ``{j + i(r+1)}`` inside the root set, else ``None``.

    The coset gives ``x^l - xi^l | g`` with ``xi = theta alpha^j``; the dual word
    ``f = sum_i x^{il} xi^{(r-i)l}`` has weight ``r+1`` and ``h-bar | f-bar``.
    """
    fac = find_locality_factor(code, r)
    if fac is None:
        return None
    f = code.big_field
    if not code.subfield_codes_mask[fac.eta]:
        return None
    ell = fac.ell
    terms = {i * ell: int(f.power(fac.eta, r - i)) for i in range(r + 1)}
    fpoly = Poly.from_sparse(f, terms)
    fbar = monic_reciprocal(fpoly)
    hbar, _ = dual_generator(code)
    if not hbar.divides(fbar):
        raise AssertionError("dual locality word is not in the dual code")
    groups = tuple(tuple(j + t * ell for t in range(r + 1)) for j in range(ell))
    coeffs = tuple(int(f.power(fac.eta, t)) for t in range(r + 1))
    return RepairPlan(code.n, r, fac.eta, groups, coeffs, tuple(int(c) for c in fbar.codes))


def locality_exhaustive(code: ConstacyclicCode, r_max: int = 3, cap: int = 10**7) -> int | None:
    """Smallest ``r`` such that every position lies in a dual word of weight ``<= r+1``.

    Position ``i`` has locality ``|S| - 1`` when columns of ``G`` on ``S`` (with
    ``i`` in ``S``) are dependent but drop to independence without ``i``.
    Returns ``None`` if some position needs more than ``r_max``.
    """
    n, k = code.n, code.k
    if k == 0:
        return 0
    work = n * sum(math.comb(n - 1, s - 1) for s in range(1, r_max + 2))
    if work > cap:
        raise RuntimeError(f"exhaustive locality needs {work} rank checks, cap {cap}")
    f = code.big_field
    G = generator_matrix(code)
    per_pos = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        best = None
        for s in range(1, r_max + 2):
            subs = np.array([(i, *c) for c in itertools.combinations(others, s - 1)], dtype=np.int64)
            mats = G[:, subs].transpose(1, 0, 2)
            full = batched_rank(f, mats)
            without = batched_rank(f, mats[:, :, 1:]) if s > 1 else np.zeros(len(subs), dtype=np.int64)
            if np.any((full < s) & (without == s - 1)):
                best = s - 1
                break
        if best is None:
            return None
        per_pos.append(best)
    return max(per_pos)

"""Exact minimum-distance machinery.

Three independent routes, from cheapest to most specialised:

* ``exact_distance_enumerate``: every nonzero codeword, by message enumeration.
* ``distance_at_least_subset_rank``: every ``t - 1`` parity-check columns independent.
* ``structured_low_weight_search``: exhaustive over supports compatible with a
  locality factor ``x^l - eta`` of ``g``.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..codes import (ConstacyclicCode, evaluation_matrix, generator_matrix, is_codeword,
                     parity_check_columns)
from ..gf import subfield_codes
from .linalg import batched_rank, nullspace

ENUM_CAP = 2**24
SUBSET_CAP = 10**8
_TABLE_CAP = 2**14
_BATCH = 4096


class SearchCapExceeded(RuntimeError):
    """The requested exhaustive computation is larger than its configured cap."""


@dataclass
class DistanceResult:
    d: float
    codeword: np.ndarray | None = None
    checked: int = 0


def exact_distance_enumerate(code: ConstacyclicCode, cap: int = ENUM_CAP,
                             return_word: bool = False):
    """Minimum weight over all ``q^k - 1`` nonzero codewords."""
    q, k, n = code.q, code.k, code.n
    if k == 0:
        return DistanceResult(math.inf) if return_word else math.inf
    if q**k > cap:
        raise SearchCapExceeded(f"q^k = {q}^{k} exceeds enumeration cap {cap}")
    f = code.big_field
    G = generator_matrix(code)
    S = subfield_codes(f, q)
    k1 = 1
    while k1 < k and q ** (k1 + 1) <= _TABLE_CAP:
        k1 += 1
    table = np.zeros((1, n), dtype=np.int64)
    for i in range(k1):
        table = f.add(table[None, :, :], f.mul(S[:, None, None], G[i][None, None, :])).reshape(-1, n)
    best, best_word = math.inf, None
    nz_table = np.ones(len(table), dtype=bool)
    nz_table[0] = False  # the all-zero combination of the first k1 rows
    for coeffs in itertools.product(range(q), repeat=k - k1):
        tail = np.zeros(n, dtype=np.int64)
        for j, c in enumerate(coeffs):
            if c:
                tail = f.add(tail, f.mul(S[c], G[k1 + j]))
        words = f.add(table, tail[None, :])
        wts = np.count_nonzero(words, axis=1)
        if not any(coeffs):
            wts = np.where(nz_table, wts, n + 1)
        i = int(np.argmin(wts))
        if wts[i] < best:
            best, best_word = int(wts[i]), words[i].copy()
    if return_word:
        return DistanceResult(best, best_word, q**k - 1)
    return best


def weight_distribution(code: ConstacyclicCode, cap: int = 2**20) -> np.ndarray:
    """Counts of codewords of each weight ``0..n`` (small codes only)."""
    q, k, n = code.q, code.k, code.n
    if q**k > cap:
        raise SearchCapExceeded(f"q^k = {q}^{k} exceeds cap {cap}")
    f = code.big_field
    G = generator_matrix(code)
    S = subfield_codes(f, q)
    words = np.zeros((1, n), dtype=np.int64)
    for i in range(k):
        words = f.add(words[None], f.mul(S[:, None, None], G[i][None, None, :])).reshape(-1, n)
    return np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)


# -- subset rank

def _combination_chunks(n: int, size: int, batch: int):
    it = itertools.combinations(range(n), size)
    while True:
        chunk = list(itertools.islice(it, batch))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def _dependent_subsets(args) -> list[tuple[int, ...]]:
    field, H, subsets = args
    mats = H[:, subsets].transpose(1, 0, 2)  # (B, rows, size)
    rk = batched_rank(field, mats)
    return [tuple(int(x) for x in s) for s in subsets[rk < subsets.shape[1]]]


@dataclass
class SubsetRankResult:
    holds: bool
    checked: int
    dependent: tuple[int, ...] | None = None
    witness: np.ndarray | None = field(default=None, repr=False)


def _full_rows_dependent(code: ConstacyclicCode, Hfull: np.ndarray, subset) -> np.ndarray | None:
    """Codeword supported inside ``subset`` if one exists (kernel of all root rows)."""
    cols = np.asarray(subset, dtype=np.int64)
    ker = nullspace(code.big_field, Hfull[:, cols])
    if len(ker) == 0:
        return None
    word = np.zeros(code.n, dtype=np.int64)
    word[cols] = ker[0]
    return word


def distance_at_least_subset_rank(code: ConstacyclicCode, d_target: int, cap: int = SUBSET_CAP,
                                  jobs: int = 1, details: bool = False):
    """``d >= d_target`` iff every ``d_target - 1`` columns of ``H`` are independent.

    ``H`` uses one root per Frobenius orbit; a subset that looks dependent there
    is re-checked against every root, whose kernel is spanned by F_q-words.
    """
    n, size = code.n, d_target - 1
    if size <= 0:
        res = SubsetRankResult(True, 0)
        return res if details else True
    if size > n:
        raise ValueError("d_target - 1 exceeds n")
    total = math.comb(n, size)
    if total > cap:
        raise SearchCapExceeded(f"C({n}, {size}) = {total} exceeds subset cap {cap}")
    f = code.big_field
    H = parity_check_columns(code)
    Hfull = evaluation_matrix(code, code.root_exponents)
    chunks = ((f, H, c) for c in _combination_chunks(n, size, _BATCH))
    found = None
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for deps in ex.map(_dependent_subsets, chunks):
                for s in deps:
                    w = _full_rows_dependent(code, Hfull, s)
                    if w is not None and (found is None or s < found[0]):
                        found = (s, w)
    else:
        for args in chunks:
            for s in _dependent_subsets(args):
                w = _full_rows_dependent(code, Hfull, s)
                if w is not None:
                    found = (s, w)
                    break
            if found:
                break
    res = SubsetRankResult(found is None, total,
                           None if found is None else found[0],
                           None if found is None else found[1])
    return res if details else res.holds


# -- structured search

@dataclass(frozen=True)
class LocalityFactor:
    """``x^l - eta`` dividing ``g``: the coset ``{j + 3i}`` of root exponents."""

    ell: int
    j: int
    eta: int
    coset: tuple[int, ...]


def find_locality_factor(code: ConstacyclicCode, r: int = 2) -> LocalityFactor | None:
    n = code.n
    if n % (r + 1):
        raise ValueError(f"(r + 1) = {r + 1} does not divide n = {n}")
    ell = n // (r + 1)
    roots = set(code.root_exponents)
    f = code.big_field
    for j in range(r + 1):
        coset = tuple(j + (r + 1) * i for i in range(ell))
        if all(c in roots for c in coset):
            eta = int(f.exp(int(code.root_log([j])[0]) * ell))
            return LocalityFactor(ell, j, eta, coset)
    return None


def _class_patterns(weight: int, sizes=(2, 3)):
    """Multisets of class sizes (each 2 or r+1) summing to ``weight``, as tuples."""
    out = []

    def rec(rem, lo, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for s in sizes:
            if s >= lo and s <= rem:
                rec(rem - s, s, acc + [s])

    rec(weight, 0, [])
    return out


@dataclass
class StructuredResult:
    weight: int | None
    codeword: np.ndarray | None
    patterns: int
    searched_up_to: int

    @property
    def found(self) -> bool:
        return self.weight is not None


def _class_basis(field, eta: int, ts: tuple[int, ...], r: int):
    """Basis of ``{c : sum_t c_t eta^t = 0}`` on the class offsets ``ts``."""
    e = [int(field.power(eta, t)) for t in ts]
    # pair each later offset with the first: e_0 c_0 + e_t c_t = 0
    vecs = []
    for idx in range(1, len(ts)):
        v = np.zeros(len(ts), dtype=np.int64)
        v[0] = int(field.neg(field.div(e[idx], e[0])))
        v[idx] = 1
        vecs.append(v)
    return vecs


def structured_low_weight_search(code: ConstacyclicCode, w_max: int, r: int = 2,
                                 w_min: int = 2) -> StructuredResult:
    """Smallest weight ``w <= w_max`` of a nonzero codeword, or ``weight=None``.

    Every codeword is divisible by ``x^l - eta`` (``l = n/(r+1)``), so on each
    residue class ``{j, j+l, ...}`` its coefficients satisfy
    ``sum_t c_{j+tl} eta^t = 0``: a class meets the support in 0 or at least 2
    positions.  By the constacyclic shift, class 0 can be assumed occupied.
    For each pattern the class-constraint basis is evaluated at the remaining
    roots and a nonzero kernel means a codeword exists.  Weights are tried in
    increasing order, so the first hit is the minimum distance.
    """
    fac = find_locality_factor(code, r)
    if fac is None:
        raise ValueError("g has no locality factor x^(n/(r+1)) - eta")
    f = code.big_field
    if not code.subfield_codes_mask[fac.eta]:
        raise ValueError("locality factor is not defined over F_q")
    R1 = r + 1
    rest = [i for i in code.root_exponents if i not in set(fac.coset)]
    rest_log = code.root_log(rest)
    # rho^j for every root rho in rest and position j in [0, n)
    pos = np.arange(code.n)
    Epos = f.exp(rest_log[:, None] * pos[None, :])  # (rows, n)
    patterns = 0
    offsets_by_size = {s: list(itertools.combinations(range(R1), s)) for s in range(2, R1 + 1)}
    for w in range(max(w_min, 2), w_max + 1):
        for sizes in _class_patterns(w, tuple(range(2, R1 + 1))):
            first_sizes = sorted(set(sizes))
            for s0 in first_sizes:
                others = list(sizes)
                others.remove(s0)
                hit = _search_pattern(code, f, fac, Epos, rest, s0, others, offsets_by_size)
                patterns += hit[1]
                if hit[0] is not None:
                    return StructuredResult(int(np.count_nonzero(hit[0])), hit[0], patterns, w)
    return StructuredResult(None, None, patterns, w_max)


def _search_pattern(code, f, fac, Epos, rest, s0, others, offsets_by_size):
    """Class 0 with ``s0`` positions, plus distinct classes with sizes ``others``."""
    ell = fac.ell
    count = 0
    if not rest:
        # every F_q-word meeting the class constraints is a codeword
        offs = offsets_by_size[s0][0]
        support = [t * ell for t in offs]
        word = np.zeros(code.n, dtype=np.int64)
        basis = _class_basis(f, fac.eta, offs, 2)
        word[support] = basis[0]
        return word, 1
    class_choices = itertools.combinations(range(1, ell), len(others))
    for classes in class_choices:
        for size_perm in sorted(set(itertools.permutations(others))):
            for off0 in offsets_by_size[s0]:
                other_offs = [offsets_by_size[s] for s in size_perm]
                for offs_rest in itertools.product(*other_offs):
                    count += 1
                    word = _solve_support(code, f, fac, Epos, [0, *classes], [off0, *offs_rest])
                    if word is not None:
                        return word, count
    return None, count


def _solve_support(code, f, fac, Epos, classes, offsets):
    ell = fac.ell
    cols, pos_list = [], []
    for j, offs in zip(classes, offsets):
        positions = [j + t * ell for t in offs]
        for v in _class_basis(f, fac.eta, offs, 2):
            col = np.zeros(Epos.shape[0], dtype=np.int64)
            for p_, c in zip(positions, v):
                col = f.add(col, f.mul(c, Epos[:, p_]))
            cols.append(col)
            pos_list.append((positions, v))
    M = np.stack(cols, axis=1)
    ker = nullspace(f, M)
    if len(ker) == 0:
        return None
    x = ker[0]
    word = np.zeros(code.n, dtype=np.int64)
    for coef, (positions, v) in zip(x, pos_list):
        if coef:
            word[positions] = f.add(word[positions], f.mul(int(coef), v))
    if not np.any(word):
        return None
    # normalise to an F_q-word
    lead = int(word[np.flatnonzero(word)[0]])
    word = f.div(word, lead)
    if not is_codeword(code, word):
        raise AssertionError("structured search produced a non-codeword")
    return word

"""Batched Gaussian elimination over a ``FieldSpec`` (matrices of field codes)."""

from __future__ import annotations

import numpy as np

from ..gf import FieldSpec


def batched_rref(field: FieldSpec, mats) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reduced row echelon form of every matrix in a ``(B, rows, cols)`` stack.

    Returns ``(reduced, rank, pivots)`` where ``pivots[b, i]`` is the pivot
    column of row ``i`` (``-1`` past the rank).
    """
    M = np.array(mats, dtype=np.int64, copy=True)
    if M.ndim == 2:
        M = M[None]
    B, rows, cols = M.shape
    rank = np.zeros(B, dtype=np.int64)
    pivots = np.full((B, rows), -1, dtype=np.int64)
    ridx = np.arange(rows)
    for col in range(cols):
        cand = (M[:, :, col] != 0) & (ridx[None, :] >= rank[:, None])
        has = cand.any(axis=1) & (rank < rows)
        if not has.any():
            continue
        bs = np.flatnonzero(has)
        piv = np.argmax(cand[bs], axis=1)
        rk = rank[bs]
        # swap pivot row into position ``rk``
        top = M[bs, rk].copy()
        M[bs, rk] = M[bs, piv]
        M[bs, piv] = top
        prow = M[bs, rk]
        prow = field.mul(prow, field.inv(prow[:, col])[:, None])
        M[bs, rk] = prow
        factor = M[bs, :, col].copy()
        factor[np.arange(len(bs)), rk] = 0
        M[bs] = field.sub(M[bs], field.mul(factor[:, :, None], prow[:, None, :]))
        pivots[bs, rk] = col
        rank[bs] += 1
    return M, rank, pivots


def batched_rank(field: FieldSpec, mats) -> np.ndarray:
    return batched_rref(field, mats)[1]


def rank(field: FieldSpec, mat) -> int:
    return int(batched_rank(field, np.asarray(mat)[None])[0])


def nullspace(field: FieldSpec, mat) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as rows; read off from the RREF.

    If ``M`` has entries in a subfield the basis does too.
    """
    M = np.asarray(mat, dtype=np.int64)
    R, rk, piv = batched_rref(field, M[None])
    R, rk, piv = R[0], int(rk[0]), piv[0][: int(rk[0])]
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in set(piv.tolist())]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(piv):
            basis[t, pc] = int(field.neg(R[i, f]))
    return basis

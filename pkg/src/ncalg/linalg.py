"""Dense exact linear algebra over the coefficient field.

Matrices at this interface are lists of rows of field values.  Over F_p
the elimination runs vectorized in numpy int64 (entries stay below p**2,
far from overflow); over Q it falls back to Fraction arithmetic, which is
the slow verification mode.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from .field import PrimeField


def rref(rows: Sequence[Sequence], field) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if isinstance(field, PrimeField):
        return _rref_mod_p(rows, field.p)
    return _rref_generic(rows, field)


def rank(rows: Sequence[Sequence], field) -> int:
    return len(rref(rows, field)[1])


def left_nullspace(rows: Sequence[Sequence], field) -> List[List]:
    """Basis of {v : v . M = 0} for M given by rows; canonical (rref) form."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    if isinstance(field, PrimeField):
        out = _right_nullspace_mod_p(
            np.array([list(r) for r in rows], dtype=np.int64).T, field.p)
    else:
        aug = []
        for i, r in enumerate(rows):
            ident = [field.zero] * m
            ident[i] = field.one
            aug.append(list(r) + ident)
        R, pivots = _rref_generic_rows(aug, field, limit_cols=n)
        out = [row[n:] for row in R if all(field.is_zero(x) for x in row[:n])]
    if not out:
        return []
    # canonicalize the kernel basis itself
    canon, _ = rref(out, field)
    return canon


def _right_nullspace_mod_p(N: np.ndarray, p: int) -> List[List[int]]:
    """Basis of {x : N x = 0} over F_p.

    All elimination runs in float64 with deferred modular reduction: pivot
    rows and multiplier columns are reduced mod p before use, so entries
    stay bounded by (number of block updates) * p**2, far below 2**53, and
    every operation is exact.
    """
    A = (N.astype(np.float64)) % p
    m, n = A.shape
    if m * n > 1_000_000:
        pivot_cols, pivot_rows = _forward_eliminate_blocked(A, p)
    else:
        pivot_cols, pivot_rows = _forward_eliminate_simple(A, p)
    return _back_substitute_nullspace(pivot_cols, pivot_rows, n, p)


def _forward_eliminate_simple(A: np.ndarray, p: int):
    m, n = A.shape
    r = 0
    pivot_cols: List[int] = []
    pivot_rows: List[np.ndarray] = []
    for c in range(n):
        if r == m:
            break
        col = A[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        row = A[r] % p
        inv = float(pow(int(col[int(nz[0])]), p - 2, p))
        row = (row * inv) % p
        A[r] = row
        if r + 1 < m:
            factors = A[r + 1:, c] % p
            A[r + 1:, c:] -= factors[:, None] * row[None, c:]
        pivot_cols.append(c)
        pivot_rows.append(row)
        r += 1
    return pivot_cols, pivot_rows


def _forward_eliminate_blocked(A: np.ndarray, p: int, panel: int = 64):
    """Right-looking blocked forward elimination; trailing updates by dgemm.

    Within a column window the panel is factored unblocked; the pivot rows'
    trailing parts are then forward-substituted (each reduced mod p before
    scaling) and one matrix product updates the rows below.  Each block
    update adds at most panel * p**2 per entry, so magnitudes stay exact.
    """
    m, n = A.shape
    r = 0
    c = 0
    pivot_cols: List[int] = []
    pivot_rows: List[np.ndarray] = []
    while r < m and c < n:
        cend = min(c + panel, n)
        W = A[r:, c:cend] % p          # working window, reduced
        sub = m - r
        L = np.zeros((sub, cend - c), dtype=np.float64)
        local_pcols: List[int] = []
        invs: List[float] = []
        k = 0
        for lc in range(cend - c):
            col = W[k:, lc] % p
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            i = k + int(nz[0])
            if i != k:
                W[[k, i]] = W[[i, k]]
                L[[k, i]] = L[[i, k]]
                A[[r + k, r + i]] = A[[r + i, r + k]]
            inv = float(pow(int(col[int(nz[0])]), p - 2, p))
            wrow = (W[k] % p * inv) % p
            W[k] = wrow
            if k + 1 < sub:
                factors = W[k + 1:, lc] % p
                W[k + 1:, lc:] -= factors[:, None] * wrow[None, lc:]
                L[k + 1:, k] = factors
            local_pcols.append(lc)
            invs.append(inv)
            k += 1
        if k == 0:
            c = cend
            continue
        # forward-substitute the pivot rows' trailing parts, reducing before
        # the scale so nothing exceeds p**2
        U = A[r:r + k, cend:].copy()
        for kk in range(k):
            if kk:
                U[kk] -= L[kk, :kk] @ U[:kk]
            U[kk] = (U[kk] % p) * invs[kk] % p
        if r + k < m and cend < n:
            A[r + k:, cend:] -= L[k:, :k] @ U
        for kk in range(k):
            full = np.zeros(n, dtype=np.float64)
            full[c:cend] = W[kk] % p
            full[cend:] = U[kk]
            pivot_rows.append(full)
            pivot_cols.append(c + local_pcols[kk])
        r += k
        c = cend
    return pivot_cols, pivot_rows


def _back_substitute_nullspace(pivot_cols, pivot_rows, n: int, p: int):
    rank = len(pivot_cols)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivot_set]
    if not free_cols:
        return []
    X = np.zeros((n, len(free_cols)), dtype=np.float64)
    for k, c in enumerate(free_cols):
        X[c, k] = 1.0
    for idx in range(rank - 1, -1, -1):
        c = pivot_cols[idx]
        row = pivot_rows[idx]
        if c + 1 < n:
            acc = (row[c + 1:] @ X[c + 1:, :]) % p
        else:
            acc = np.zeros(len(free_cols))
        X[c, :] = (-acc) % p
    return [[int(v) for v in X[:, k]] for k in range(len(free_cols))]


def _rref_mod_p(rows: Sequence[Sequence], p: int) -> Tuple[List[List], List[int]]:
    if len(rows) == 0:
        return [], []
    A = np.array([list(r) for r in rows], dtype=np.int64) % p
    R, pivots = _rref_mod_p_inplace(A, p, limit_cols=A.shape[1])
    out = [list(map(int, row)) for row in R if row.any()]
    return out, pivots


def _rref_mod_p_inplace(A: np.ndarray, p: int, limit_cols: int):
    m, n = A.shape
    r = 0
    pivots: List[int] = []
    for c in range(limit_cols):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _rref_generic(rows: Sequence[Sequence], field) -> Tuple[List[List], List[int]]:
    if len(rows) == 0:
        return [], []
    A = [list(r) for r in rows]
    R, pivots = _rref_generic_rows(A, field, limit_cols=len(A[0]))
    out = [row for row in R if any(not field.is_zero(x) for x in row)]
    return out, pivots


def _rref_generic_rows(A: List[List], field, limit_cols: int):
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    pivots: List[int] = []
    for c in range(limit_cols):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if not field.is_zero(A[i][c]):
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(x, inv) for x in A[r]]
        for i in range(m):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def same_row_space(rows_a: Sequence[Sequence], rows_b: Sequence[Sequence], field) -> bool:
    ra, _ = rref(rows_a, field)
    rb, _ = rref(rows_b, field)
    return ra == rb

"""Pure-Python (numpy) fallback implementations of the hot kernels."""

from __future__ import annotations

import numpy as np


def signature_ids(codes: np.ndarray, ncolors: int) -> tuple[np.ndarray, int]:
    codes = np.ascontiguousarray(codes, dtype=np.int64)
    n = codes.shape[0]
    ids = np.empty((n, n), dtype=np.int64)
    cols = np.ascontiguousarray(codes.T)
    table: dict[tuple[int, bytes], int] = {}
    for a in range(n):
        left = codes[a] * ncolors
        row = codes[a]
        out = ids[a]
        for b in range(n):
            sig = left + cols[b]
            sig.sort()
            key = (int(row[b]), sig.tobytes())
            val = table.get(key)
            if val is None:
                val = len(table)
                table[key] = val
            out[b] = val
    return ids, len(table)


def jacobi_eigenvalues(a, tol_scale: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    A = np.array(a, dtype=np.float64, copy=True)
    n = A.shape[0]
    if n == 0:
        return np.empty(0)
    fro = float(np.linalg.norm(A))
    if fro == 0.0:
        return np.zeros(n)
    target = tol_scale * fro
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diagonal(A)))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
    return np.diagonal(A).copy()

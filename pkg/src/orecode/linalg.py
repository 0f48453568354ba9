"""Gaussian elimination over a FiniteField (elements as ints)."""

from __future__ import annotations

from .field import FiniteField


def rref(F: FiniteField, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = F.inv(mat[rank][col])
        mat[rank] = [F.mul(inv, v) for v in mat[rank]]
        prow = mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(mat[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def rank(F: FiniteField, rows) -> int:
    return len(rref(F, rows)[1])


def in_row_space(F: FiniteField, basis_rref: tuple[list[list[int]], list[int]], v) -> bool:
    rows, pivots = basis_rref
    v = list(v)
    for row, col in zip(rows, pivots):
        if v[col]:
            c = v[col]
            v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
    return not any(v)


def solve_left(F: FiniteField, rows, v) -> list[int] | None:
    """Coefficients m with sum m_i rows_i = v, or None."""
    k = len(rows)
    if k == 0:
        return [] if not any(v) else None
    n = len(rows[0])
    # transpose: unknowns are the k coefficients
    aug = [[rows[i][j] for i in range(k)] + [v[j]] for j in range(n)]
    red, pivots = rref(F, aug)
    if k in pivots:
        return None
    sol = [0] * k
    for row, col in zip(red, pivots):
        sol[col] = row[k]
    return sol


def left_kernel(F: FiniteField, rows) -> list[list[int]]:
    """Basis of {m : m A = 0} for the k x n matrix A given by rows."""
    k = len(rows)
    if k == 0:
        return []
    n = len(rows[0])
    cols = [[rows[i][j] for i in range(k)] for j in range(n)]
    red, pivots = rref(F, cols) if cols else ([], [])
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fcol in free:
        m = [0] * k
        m[fcol] = 1
        for row, pcol in zip(red, pivots):
            m[pcol] = F.neg(row[fcol])
        basis.append(m)
    return basis

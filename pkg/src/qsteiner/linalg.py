"""Gaussian elimination over F_q and over the ambient field.

Matrices are sequences of rows.  F_q entries are ints handled by a
:class:`qsteiner.gf.BaseField`; :func:`det` works over any field object
(F_q or a :class:`qsteiner.gf.Tower`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DimensionMismatch

Matrix = Sequence[Sequence[int]]


def _check_rect(A: Matrix, ncols: int | None) -> int:
    if ncols is None:
        if not A:
            raise DimensionMismatch("cannot infer the column count of an empty matrix")
        ncols = len(A[0])
    for row in A:
        if len(row) != ncols:
            raise DimensionMismatch(f"row of length {len(row)} in a {ncols}-column matrix")
    return ncols


def rref(F, A: Matrix, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    ncols = _check_rect(A, ncols)
    rows = [list(r) for r in A]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if rows[r][col] != 1:
            rows[r] = F.vec_scale(F.inv(rows[r][col]), rows[r])
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = F.vec_sub_scaled(rows[i], rows[i][col], pr)
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(F, A: Matrix, ncols: int | None = None) -> int:
    if not A:
        return 0
    return len(rref(F, A, ncols)[1])


def _nullspace_from_rref(F, R: list[list[int]], pivots: list[int], ncols: int) -> list[list[int]]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = F.neg(row[f])
        basis.append(v)
    # back to canonical RREF (free columns become the pivots)
    return rref(F, basis, ncols)[0] if basis else []


def nullspace(F, A: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{v : A v = 0}`` in canonical RREF."""
    ncols = _check_rect(A, ncols)
    if not A:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(F, A, ncols)
    return _nullspace_from_rref(F, R, pivots, ncols)


@dataclass(frozen=True)
class LinSolution:
    """A particular solution (``None`` for homogeneous systems) and the nullspace."""

    particular: tuple[int, ...] | None
    nullspace: tuple[tuple[int, ...], ...]


def linsolve(F, A: Matrix, b: Sequence[int] | None = None,
             ncols: int | None = None) -> LinSolution | None:
    """Solve ``A x = b`` (or ``A x = 0``) over F_q.

    Returns ``None`` when the system is inconsistent.  The particular
    solution is the one that is zero on every free column.
    """
    ncols = _check_rect(A, ncols)
    null = tuple(tuple(v) for v in nullspace(F, A, ncols))
    if b is None:
        return LinSolution(None, null)
    if len(b) != len(A):
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {len(A)}")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug, ncols + 1) if aug else ([], [])
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return LinSolution(tuple(x), null)


def mat_vec(F, A: Matrix, v: Sequence[int]) -> list[int]:
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            if a and x:
                s = F.add(s, F.mul(a, x))
        out.append(s)
    return out


def transpose(A: Matrix) -> list[list[int]]:
    return [list(col) for col in zip(*A)]


def det(F, A: Sequence[Sequence[Any]]) -> Any:
    """Determinant by plain elimination, pivoting on the first nonzero entry."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [list(r) for r in A]
    zero = F.zero
    result = F.one
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != zero), None)
        if piv is None:
            return zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = F.neg(result)
        pv = rows[col][col]
        result = F.mul(result, pv)
        inv = F.inv(pv)
        for i in range(col + 1, n):
            if rows[i][col] != zero:
                c = F.mul(rows[i][col], inv)
                rows[i] = [F.sub(x, F.mul(c, y)) if k >= col else x
                           for k, (x, y) in enumerate(zip(rows[i], rows[col]))]
    return result

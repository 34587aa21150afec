"""Exact Gauss-Jordan elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularSystem(ValueError):
    pass


def rref(rows: Sequence[Sequence[object]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                ri = m[i]
                rr = m[r]
                m[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v = 0}`` (one vector per free column)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -red[row_idx][fcol]
        basis.append(vec)
    return basis


def inverse(rows: Sequence[Sequence[object]]) -> list[list[Fraction]]:
    size = len(rows)
    aug = [list(row) + [int(i == j) for j in range(size)] for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:size] != list(range(size)) or len(pivots) < size:
        raise SingularSystem("matrix is singular")
    return [row[size:] for row in red]


def solve(rows: Sequence[Sequence[object]], rhs: Sequence[object]) -> list[Fraction]:
    """Unique solution of a square or overdetermined consistent system."""
    ncols = len(rows[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise SingularSystem("inconsistent system")
    if len(pivots) < ncols:
        raise SingularSystem("solution is not unique")
    return [red[i][ncols] for i in range(ncols)]

"""Exact linear algebra over the scalar types used in this package.

Vectors are plain lists of scalars (Fractions or number-field elements).
Everything is deterministic: pivots are chosen left to right and rows are
processed in the order supplied.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_arith import scalar_inverse, scalar_is_zero


def _first_nonzero(vec):
    for i, c in enumerate(vec):
        if not scalar_is_zero(c):
            return i
    return None


class SpanBuilder:
    """Incrementally maintained row-echelon basis of a subspace."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Residual of vec after elimination against the current basis."""
        out = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if scalar_is_zero(c):
                continue
            for j in range(p, self.dim):
                out[j] = out[j] - c * row[j]
        return out

    def add(self, vec) -> bool:
        """Add a vector to the span; True if it enlarged the subspace."""
        res = self.reduce(vec)
        p = _first_nonzero(res)
        if p is None:
            return False
        inv = scalar_inverse(res[p])
        row = [c * inv for c in res]
        # keep rows sorted by pivot so reduce() stays a single sweep
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < p:
            idx += 1
        self.rows.insert(idx, row)
        self.pivots.insert(idx, p)
        return True

    def contains(self, vec) -> bool:
        return _first_nonzero(self.reduce(vec)) is None


def kernel_basis(columns: list[list], nrows: int) -> list[list]:
    """Kernel of the linear map sending unit vector k to columns[k].

    Returns the canonical kernel basis read off the reduced row echelon
    form, one vector per free column, in ascending column order.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    rows = [[columns[k][i] for k in range(ncols)] for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not scalar_is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = scalar_inverse(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not scalar_is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -rows[row_idx][free]
        kernel.append(vec)
    return kernel

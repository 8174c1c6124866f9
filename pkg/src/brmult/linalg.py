"""Exact incremental row echelon and kernel computation.

In prime-field mode rows are int64 numpy vectors and the inner loops run
in the compiled extension when available (set BRMULT_PURE=1 to force the
numpy fallback).  In rational mode rows are lists of Fractions and a
plain Python elimination is used; that path is only exercised by
paranoia runs on small inputs.
"""

import os

import numpy as np

from . import field
from .errors import ResourceError

if os.environ.get("BRMULT_PURE"):
    from . import _echelon_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _echelon as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _echelon_py as _impl

        BACKEND = "python"

MAX_COLUMNS = 8192


class Echelon:
    """Growing normalized row-echelon basis over the session prime field.

    Rows are inserted one at a time; each insert reduces the candidate
    against the current basis and either absorbs it (rank grows) or
    discards it.  Re-inserting a row already in the span is a no-op, so
    echelon formation is idempotent.
    """

    def __init__(self, ncols):
        if ncols > MAX_COLUMNS:
            raise ResourceError(f"matrix width {ncols} exceeds cap {MAX_COLUMNS}")
        self.p = field.get_char()
        if self.p == 0:
            raise ValueError("Echelon is the prime-field backend; use FractionEchelon")
        self.ncols = ncols
        self._cap = 64
        self.data = np.zeros((self._cap, ncols), dtype=np.int64)
        self.row_of_col = np.full(ncols, -1, dtype=np.int64)
        self.pivots = []
        self.rank = 0

    def _grow(self):
        self._cap = min(2 * self._cap, self.ncols)
        fresh = np.zeros((self._cap, self.ncols), dtype=np.int64)
        fresh[: self.rank] = self.data[: self.rank]
        self.data = fresh

    def insert(self, v):
        """Insert a row (copied, caller's array untouched); return True
        if the rank grew."""
        v = np.array(v, dtype=np.int64)
        piv = _impl.reduce_row(self.data, self.row_of_col, v, self.p)
        if piv < 0:
            return False
        if self.rank == self._cap:
            self._grow()
        _impl.scale_row(v, pow(int(v[piv]), -1, self.p), self.p)
        self.data[self.rank] = v
        self.row_of_col[piv] = self.rank
        self.pivots.append(int(piv))
        self.rank += 1
        return True

    def residual(self, v):
        v = np.array(v, dtype=np.int64)
        _impl.reduce_row(self.data, self.row_of_col, v, self.p)
        return v

    def contains(self, v):
        v = np.array(v, dtype=np.int64)
        return _impl.reduce_row(self.data, self.row_of_col, v, self.p) < 0

    def basis(self):
        return self.data[: self.rank].copy()

    def reduced_form(self):
        """Fully reduced echelon (rows sorted by pivot column)."""
        order = np.argsort(np.array(self.pivots, dtype=np.int64))
        rows = np.ascontiguousarray(self.data[: self.rank][order])
        piv = np.array(self.pivots, dtype=np.int64)[order]
        _impl.back_reduce(rows, piv, self.p)
        return rows, piv


class FractionEchelon:
    """Rational-mode counterpart of Echelon, on Python lists."""

    def __init__(self, ncols):
        if ncols > MAX_COLUMNS:
            raise ResourceError(f"matrix width {ncols} exceeds cap {MAX_COLUMNS}")
        self.ncols = ncols
        self.rows = []  # (pivot, list) sorted by pivot
        self.row_of_col = {}
        self.pivots = []
        self.rank = 0

    def _reduce(self, v):
        for j in range(self.ncols):
            if v[j]:
                r = self.row_of_col.get(j)
                if r is None:
                    return j
                f = v[j]
                row = self.rows[r]
                for k in range(j, self.ncols):
                    if row[k]:
                        v[k] = v[k] - f * row[k]
        return -1

    def insert(self, v):
        v = list(v)
        piv = self._reduce(v)
        if piv < 0:
            return False
        c = field.inv(v[piv])
        v = [field.normalize(x * c) if x else 0 for x in v]
        self.row_of_col[piv] = self.rank
        self.rows.append(v)
        self.pivots.append(piv)
        self.rank += 1
        return True

    def residual(self, v):
        v = list(v)
        self._reduce(v)
        return v

    def contains(self, v):
        return self._reduce(list(v)) < 0

    def basis(self):
        return [list(r) for r in self.rows]

    def reduced_form(self):
        order = sorted(range(self.rank), key=lambda i: self.pivots[i])
        rows = [list(self.rows[i]) for i in order]
        piv = [self.pivots[i] for i in order]
        for i in range(len(rows) - 1, 0, -1):
            c = piv[i]
            for r in range(i):
                f = rows[r][c]
                if f:
                    for k in range(c, self.ncols):
                        if rows[i][k]:
                            rows[r][k] = rows[r][k] - f * rows[i][k]
        return rows, piv


def new_echelon(ncols):
    if field.get_char():
        return Echelon(ncols)
    return FractionEchelon(ncols)


def kernel_basis(rows, ncols):
    """Kernel of the matrix with the given rows (vectors of length ncols),
    i.e. all v with (rows) . v = 0 ... computed from the reduced echelon.

    Returns a list of vectors (numpy int64 in prime mode, lists in
    rational mode), one per free column.
    """
    ech = new_echelon(ncols)
    for r in rows:
        ech.insert(r)
    red, piv = ech.reduced_form()
    pivset = set(int(c) for c in piv)
    free = [j for j in range(ncols) if j not in pivset]
    out = []
    if field.get_char():
        for f in free:
            v = np.zeros(ncols, dtype=np.int64)
            v[f] = 1
            for i, c in enumerate(piv):
                coef = int(red[i, f])
                if coef:
                    v[int(c)] = (-coef) % field.get_char()
            out.append(v)
    else:
        for f in free:
            v = [0] * ncols
            v[f] = 1
            for i, c in enumerate(piv):
                coef = red[i][f]
                if coef:
                    v[c] = -coef
            out.append(v)
    return out


def rank_and_echelon(matrix):
    """Exact rank, an echelon basis of the column span, and a kernel basis.

    `matrix` is a list of rows of scalars.  rank + len(kernel) equals the
    number of columns.
    """
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    col_ech = new_echelon(nrows) if nrows else new_echelon(1)
    for j in range(ncols):
        col_ech.insert([field.normalize(rows[i][j]) for i in range(nrows)])
    ker = kernel_basis([[field.normalize(c) for c in r] for r in rows], ncols)
    return col_ech.rank, col_ech.basis(), ker


def scalar_rank(matrix):
    """Rank of a small scalar matrix (list of rows)."""
    if not matrix:
        return 0
    ech = new_echelon(len(matrix[0]))
    for r in matrix:
        ech.insert([field.normalize(c) for c in r])
    return ech.rank

"""Pure-Python (numpy) fallback for the compiled elimination kernels.

Same contracts as the Cython module; selected at import when the
extension is unavailable or BRMULT_PURE is set.  Row operations are
vectorized over columns, so the per-row cost is one numpy pass per
pivot touched.
"""

import numpy as np


def reduce_row(ech, row_of_col, v, p):
    L = v.shape[0]
    j = 0
    while j < L:
        nz = np.flatnonzero(v[j:])
        if nz.size == 0:
            return -1
        j += int(nz[0])
        r = row_of_col[j]
        if r < 0:
            return j
        v[j:] = (v[j:] - int(v[j]) * ech[r, j:]) % p
        j += 1
    return -1


def scale_row(v, c, p):
    v[:] = v * c % p


def back_reduce(ech, pivots, p):
    rank = pivots.shape[0]
    for i in range(rank - 1, 0, -1):
        c = int(pivots[i])
        f = ech[:i, c].copy()
        rows = np.flatnonzero(f)
        if rows.size:
            ech[rows, c:] = (ech[rows, c:] - np.outer(f[rows], ech[i, c:])) % p

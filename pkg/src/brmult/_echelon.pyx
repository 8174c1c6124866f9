# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for exact row reduction over a prime field.

Coefficients are canonical residues in [0, p) with p < 2^31, so every
intermediate product fits in a signed 64-bit word.
"""


cpdef long long reduce_row(long long[:, ::1] ech, long long[::1] row_of_col,
                           long long[::1] v, long long p):
    """Reduce v in place against the echelon rows; return the pivot column
    where v first becomes irreducible, or -1 if v reduces to zero.

    Echelon rows are normalized (leading coefficient 1) and indexed by
    row_of_col[pivot] >= 0.
    """
    cdef Py_ssize_t L = v.shape[0]
    cdef Py_ssize_t j, k
    cdef long long f, t, r
    j = 0
    while j < L:
        if v[j] != 0:
            r = row_of_col[j]
            if r < 0:
                return j
            f = v[j]
            for k in range(j, L):
                if ech[r, k] != 0:
                    t = (v[k] - f * ech[r, k]) % p
                    if t < 0:
                        t += p
                    v[k] = t
        j += 1
    return -1


cpdef void scale_row(long long[::1] v, long long c, long long p):
    cdef Py_ssize_t k, L = v.shape[0]
    for k in range(L):
        if v[k] != 0:
            v[k] = (v[k] * c) % p


cpdef void back_reduce(long long[:, ::1] ech, long long[::1] pivots,
                       long long p):
    """Turn a normalized echelon (rows sorted by pivot) into a fully
    reduced one by clearing entries above every pivot."""
    cdef Py_ssize_t rank = pivots.shape[0]
    cdef Py_ssize_t L = ech.shape[1]
    cdef Py_ssize_t i, r, k
    cdef long long f, t, c
    for i in range(rank - 1, 0, -1):
        c = pivots[i]
        for r in range(i):
            f = ech[r, c]
            if f != 0:
                for k in range(c, L):
                    if ech[i, k] != 0:
                        t = (ech[r, k] - f * ech[i, k]) % p
                        if t < 0:
                            t += p
                        ech[r, k] = t

"""Torsion-free submodules M of F = R^r given by generator matrices.

The module is the column span of an r x n matrix of Polys in the fixed
basis T_1..T_r of F.  Validity means generic rank r and finite colength
lambda(F/M), both certified on construction.  Fitting ideals, minimal
generator counts, free-summand splitting, direct sums and the M(a,b,c)
family from the worked example all live here.
"""

import random

from . import engine, field, ideals
from .errors import ExceedsCapError, InputError, PreconditionError
from .linalg import scalar_rank
from .poly import Poly, PolyMatrix, parse_poly


class SubmoduleOfFree:
    """Submodule of R^r, columns of `gens` are the generators."""

    __slots__ = ("rank", "gens", "_quotient", "_mu", "_minors_ideal")

    def __init__(self, rank, columns, _validate=True, cap=engine.DEFAULT_CAP):
        columns = [list(c) for c in columns]
        if not columns:
            raise InputError("module needs at least one generator column")
        for c in columns:
            if len(c) != rank:
                raise InputError("column length does not match ambient rank")
        self.rank = rank
        self.gens = PolyMatrix(
            [[columns[j][i] for j in range(len(columns))] for i in range(rank)],
            rows=rank,
            cols=len(columns),
        )
        self._quotient = None
        self._mu = None
        self._minors_ideal = {}
        if _validate:
            self._validate(cap)

    def _validate(self, cap):
        if not self._generic_rank_full():
            raise InputError(
                "generator matrix has generic rank below the ambient rank"
            )
        try:
            self.quotient(cap=cap)
        except ExceedsCapError:
            raise ExceedsCapError(
                cap, "lambda(F/M) did not certify: module colength is not finite"
            )

    def _generic_rank_full(self, tries=3, seed=0):
        rng = random.Random(str(("rank-check", seed)))
        for _ in range(tries):
            x0, y0 = field.rand_scalar(rng), field.rand_scalar(rng)
            if scalar_rank(self.gens.evaluate(x0, y0)) == self.rank:
                return True
        return False

    @staticmethod
    def from_json_dict(obj):
        """Module JSON format: {"rank": r, "generators": [[...r strings...], ...]}
        with generators listed as columns."""
        try:
            r = int(obj["rank"])
            cols = obj["generators"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad module JSON: {exc}")
        return SubmoduleOfFree(r, [[parse_poly(s) for s in col] for col in cols])

    def to_json_dict(self):
        return {
            "rank": self.rank,
            "generators": [[str(f) for f in self.column(j)] for j in range(self.ngens)],
        }

    @property
    def ngens(self):
        return self.gens.cols

    def column(self, j):
        return self.gens.column(j)

    def columns(self):
        return [self.column(j) for j in range(self.ngens)]

    def subset(self, indices, _validate=True):
        return SubmoduleOfFree(
            self.rank, [self.column(j) for j in indices], _validate=_validate
        )

    def quotient(self, cap=engine.DEFAULT_CAP):
        if self._quotient is None:
            self._quotient = engine.certified_colength(
                self.columns(), ambient_rank=self.rank, cap=cap
            )
        return self._quotient

    def contains_element(self, element, cap=engine.DEFAULT_CAP):
        return self.quotient(cap=cap).contains(element)

    def in_maximal_ideal(self):
        """M inside mF: no generator entry has a unit constant term."""
        return all(
            e.constant_term() == 0 for row in self.gens.entries for e in row
        )

    def fitting_ideal(self, k):
        """I_k(M), the ideal of k x k minors; I_0 = (1), I_rank = I(M)."""
        if k < 0 or k > self.rank:
            raise InputError(f"minor size {k} out of range 0..{self.rank}")
        if k not in self._minors_ideal:
            self._minors_ideal[k] = ideals.Ideal(
                [m for m in self.gens.minors(k) if not m.is_zero()]
            )
        return self._minors_ideal[k]

    def max_minors_ideal(self):
        return self.fitting_ideal(self.rank)

    def __repr__(self):
        return f"SubmoduleOfFree(rank={self.rank}, ngens={self.ngens})"


def module_of_ideal(I):
    return SubmoduleOfFree(1, [[g] for g in I.gens])


def colength_FM(M, cap=engine.DEFAULT_CAP):
    """Certified lambda(F/M)."""
    return M.quotient(cap=cap).length


def min_gens(M, cap=engine.DEFAULT_CAP):
    """mu(M) = lambda(F/mM) - lambda(F/M), the dimension of M/mM."""
    if M._mu is None:
        x, y = Poly.monomial(1, 0), Poly.monomial(0, 1)
        mM_cols = []
        for col in M.columns():
            mM_cols.append([x * f for f in col])
            mM_cols.append([y * f for f in col])
        mM = SubmoduleOfFree(M.rank, mM_cols, _validate=False)
        M._mu = colength_FM(mM, cap=cap) - colength_FM(M, cap=cap)
    return M._mu


def minimalize_gens(M, cap=engine.DEFAULT_CAP, keep_first=0):
    """Drop redundant generator columns until the list is minimal.

    A column is redundant iff it lies in the submodule of the others, in
    which case that submodule equals M; so the membership probe can be
    capped just above M's own certification degree.
    """
    mu = min_gens(M, cap=cap)
    if mu == M.ngens:
        return M
    lam = colength_FM(M, cap=cap)
    probe_cap = min(cap, M.quotient().certified_at + 2)
    cols = list(range(M.ngens))
    j = len(cols) - 1
    while j >= keep_first and len(cols) > mu:
        rest = [c for c in cols if c != cols[j]]
        try:
            sub = M.subset(rest, _validate=False)
            q = sub.quotient(cap=probe_cap)
            if q.length == lam and q.contains(M.column(cols[j])):
                cols = rest
        except ExceedsCapError:
            pass
        j -= 1
    out = M.subset(cols)
    if min_gens(out, cap=cap) != out.ngens:
        raise InputError("generator minimalization failed")
    return out


def split_free(M):
    """Split off free rank-1 summands.

    Pivots on any generator entry with a unit constant term, using
    column/row operations that are invertible over the local ring
    (scaling by the unit entry is allowed), and drops the pivot
    row/column.  Preserves lambda(F/M), I(M) and e(M).  Returns
    (M', free_rank) with every entry of M' in m.
    """
    entries = [row[:] for row in M.gens.entries]
    r, n = M.rank, M.ngens
    free = 0
    while True:
        pivot = None
        for i in range(r):
            for j in range(n):
                if entries[i][j].constant_term() != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        u = entries[i][j]
        # clear row i: col_k <- u*col_k - e_{ik}*col_j (k != j)
        for k in range(n):
            if k == j:
                continue
            e = entries[i][k]
            if not e.is_zero():
                for l in range(r):
                    entries[l][k] = u * entries[l][k] - e * entries[l][j]
        # clear column j: row_l <- u*row_l - (col_j)_l * row_i (l != i)
        for l in range(r):
            if l == i:
                continue
            e = entries[l][j]
            if not e.is_zero():
                for k in range(n):
                    entries[l][k] = u * entries[l][k] - e * entries[i][k]
        entries = [
            [entries[l][k] for k in range(n) if k != j]
            for l in range(r)
            if l != i
        ]
        r -= 1
        n -= 1
        free += 1
        if r == 0:
            raise InputError("module is free; nothing left after splitting")
    if free == 0:
        return M, 0
    cols = [[entries[l][k] for l in range(r)] for k in range(n)]
    return SubmoduleOfFree(r, cols), free


def direct_sum(M1, M2):
    """Block-diagonal sum inside F1 + F2."""
    r = M1.rank + M2.rank
    cols = []
    zero1 = [Poly.zero()] * M1.rank
    zero2 = [Poly.zero()] * M2.rank
    for j in range(M1.ngens):
        cols.append(M1.column(j) + zero2)
    for j in range(M2.ngens):
        cols.append(zero1 + M2.column(j))
    return SubmoduleOfFree(r, cols)


def family_Mabc(a, b, c):
    """The worked-example family: the 2 x 4 module with columns
    (y^a, x^a), (x^b, 0), (0, y^b), (x^c y^c, 0), for 1 <= a <= c < b <= a+c.

    Returns (M, N) where N is the designated minimal reduction generated
    by the first three columns.
    """
    if not (1 <= a <= c < b <= a + c):
        raise PreconditionError(
            f"parameters must satisfy 1 <= a <= c < b <= a+c, got {(a, b, c)}"
        )
    x = Poly.monomial
    cols = [
        [x(0, a), x(a, 0)],
        [x(b, 0), Poly.zero()],
        [Poly.zero(), x(0, b)],
        [x(c, c), Poly.zero()],
    ]
    M = SubmoduleOfFree(2, cols)
    N = SubmoduleOfFree(2, cols[:3])
    return M, N


def is_contracted(M, cap=engine.DEFAULT_CAP):
    """Operational criterion: mu(M) = ord(I(M)) + rank, for M without
    free summands."""
    if not M.in_maximal_ideal():
        raise PreconditionError("apply split_free first: M has a unit entry")
    return min_gens(M, cap=cap) == M.max_minors_ideal().order() + M.rank

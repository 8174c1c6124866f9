"""Certified truncated linear algebra over R = k[[x,y]].

Lengths of quotients F/M (F free of some ambient rank) are computed in
the finite-dimensional truncations F_N = (R/m^N)^rank.  The stopping
rule is graded Nakayama: once every element x^a y^b T_i with a+b = N-1
lies in the image of M in F_N, we have m^{N-1} F contained in M + m^N F,
hence m^{N-1} F in M, and the length is exact:

    lambda(F/M) = dim F_N - rank(image of M in F_N).

This turns truncation from a heuristic into a proof; every length the
library reports is certified this way.
"""

import numpy as np

from . import field
from .errors import ExceedsCapError, InputError
from .linalg import new_echelon
from .poly import Poly

DEFAULT_CAP = 64


class TruncCtx:
    """Monomial bookkeeping for R_N = R/m^N.

    The monomial basis {x^a y^b : a+b < N} is ordered by (total degree,
    then x-exponent), so coefficient vectors are blocked by degree.
    """

    _cache = {}

    def __new__(cls, N):
        hit = cls._cache.get(N)
        if hit is not None:
            return hit
        self = super().__new__(cls)
        if N < 1:
            raise InputError("truncation degree must be positive")
        self.N = N
        self.monomials = [(d - b, b) for d in range(N) for b in range(d + 1)]
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.dimension = len(self.monomials)  # N(N+1)/2
        cls._cache[N] = self
        return self

    def trunc(self, f):
        """Coefficient vector of f mod m^N (length = dimension)."""
        if field.get_char():
            v = np.zeros(self.dimension, dtype=np.int64)
        else:
            v = [0] * self.dimension
        N = self.N
        for (a, b), c in f.terms.items():
            if a + b < N:
                v[self.index[(a, b)]] = c
        return v


def _zero_vec(length):
    if field.get_char():
        return np.zeros(length, dtype=np.int64)
    return [0] * length


class CertifiedQuotient:
    """Result of a certified colength computation.

    Holds the echelon of the image at the certifying truncation degree,
    so membership in the submodule can be decided exactly afterwards.
    """

    def __init__(self, length, certified_at, ctx, echelon, ambient_rank):
        self.length = length
        self.certified_at = certified_at
        self.ctx = ctx
        self.echelon = echelon
        self.ambient_rank = ambient_rank

    def element_vector(self, element):
        ctx, D = self.ctx, self.ctx.dimension
        v = _zero_vec(self.ambient_rank * D)
        for s, f in enumerate(element):
            for (a, b), c in f.terms.items():
                if a + b < ctx.N:
                    v[s * D + ctx.index[(a, b)]] = c
        return v

    def contains(self, element):
        """Exact membership: sound because m^{N-1} F is inside the module
        at the certification degree."""
        return self.echelon.contains(self.element_vector(element))


def _row_iter(gens, ctx, ambient_rank):
    """Yield (sort key, generator index, shift) for all products
    g * x^a y^b that survive truncation."""
    N = ctx.N
    for gi, g in enumerate(gens):
        o = min((f.order() for f in g if not f.is_zero()), default=N)
        o = int(o) if o != float("inf") else N
        for d in range(max(0, N - o)):
            for a in range(d + 1):
                yield (o + d, gi, (a, d - a))


def _build_row(g, a, b, ctx, ambient_rank):
    D = ctx.dimension
    N = ctx.N
    v = _zero_vec(ambient_rank * D)
    empty = True
    for s, f in enumerate(g):
        base = s * D
        for (u, w), c in f.terms.items():
            if u + a + w + b < N:
                v[base + ctx.index[(u + a, w + b)]] = c
                empty = False
    return None if empty else v


def _certified_at(ech, ctx, ambient_rank):
    """Check the Nakayama stopping rule at this truncation degree."""
    D, N = ctx.dimension, ctx.N
    top = [ctx.index[(N - 1 - b, b)] for b in range(N)]
    for s in range(ambient_rank):
        for idx in top:
            v = _zero_vec(ambient_rank * D)
            v[s * D + idx] = 1
            if not ech.contains(v):
                return False
    return True


def certified_colength(gens, ambient_rank=1, cap=DEFAULT_CAP, start=None):
    """lambda(F/M) for M generated by `gens` inside F = R^ambient_rank.

    Each generator is a sequence of `ambient_rank` Polys.  Raises
    ExceedsCapError when the stopping rule has not fired by the cap,
    which signals infinite colength or an example beyond desk scale.
    """
    gens = [tuple(g) for g in gens]
    if not gens or all(f.is_zero() for g in gens for f in g):
        raise InputError("no nonzero generators")
    maxdeg = max(f.degree() for g in gens for f in g)
    N = start if start is not None else min(cap, max(2, maxdeg + 2))
    N = max(2, min(N, cap))
    while True:
        ctx = TruncCtx(N)
        D = ctx.dimension
        ech = new_echelon(ambient_rank * D)
        seen = set()
        for _, gi, (a, b) in sorted(_row_iter(gens, ctx, ambient_rank)):
            v = _build_row(gens[gi], a, b, ctx, ambient_rank)
            if v is None:
                continue
            key = v.tobytes() if field.get_char() else tuple(v)
            if key in seen:
                continue
            seen.add(key)
            ech.insert(v)
        if _certified_at(ech, ctx, ambient_rank):
            return CertifiedQuotient(
                ambient_rank * D - ech.rank, N, ctx, ech, ambient_rank
            )
        if N >= cap:
            raise ExceedsCapError(cap)
        N = min(cap, max(N + 2, (N * 3) // 2))

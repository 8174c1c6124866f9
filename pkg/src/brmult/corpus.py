"""Seeded corpora of ideals and modules for the verification harness.

Modules are monomial-generated by default so that the ideal of maximal
minors is monomial and the polyhedral adjoint oracle is always
available.  Rank 2 and 3 matrices allow at most one column with two
nonzero entries; every minor is then a single monomial (each Laplace
expansion has at most one surviving term), which is re-checked on every
sample and resampled on failure.
"""

import random

from .errors import InputError
from .ideals import Ideal
from .modules import SubmoduleOfFree, direct_sum, family_Mabc, module_of_ideal
from .monomial import MonomialStaircase, random_ic_ideal
from .poly import Poly


def random_staircase(seed, order_max=4, colength_bound=25):
    """General (not necessarily integrally closed) m-primary staircase."""
    rng = random.Random(str(("staircase", seed)))
    for _ in range(200):
        A = rng.randint(1, 2 * order_max)
        B = rng.randint(1, 2 * order_max)
        pairs = [(A, 0), (0, B)]
        for _ in range(rng.randint(0, 3)):
            u, v = rng.randint(0, A), rng.randint(0, B)
            if u + v >= 1:
                pairs.append((u, v))
        s = MonomialStaircase(pairs)
        if s.colength() <= colength_bound:
            return s
    raise InputError("staircase sampling failed")


def ic_ideal_corpus(count, seed, order_range=(1, 4), colength_bound=30):
    out = []
    for i in range(count):
        order = (i % (order_range[1] - order_range[0] + 1)) + order_range[0]
        out.append(random_ic_ideal(order, colength_bound, seed=seed * 1000 + i))
    return out


def direct_sum_corpus(count, seed, colength_bound=12):
    """Direct sums of integrally closed monomial ideals (the certified
    integrally closed module class)."""
    out = []
    for i in range(count):
        rng = random.Random(str(("dsum", seed, i)))
        o1, o2 = rng.randint(1, 2), rng.randint(1, 2)
        s1 = random_ic_ideal(o1, colength_bound, seed=seed * 2000 + 2 * i)
        s2 = random_ic_ideal(o2, colength_bound, seed=seed * 2000 + 2 * i + 1)
        out.append(
            direct_sum(
                module_of_ideal(s1.to_ideal()), module_of_ideal(s2.to_ideal())
            )
        )
    return out


def _sparse_monomial_module(rank, seed, colength_bound=25, max_tries=200):
    """Random rank-2/3 module whose minors are all monomial: one column
    per ambient slot carries a pure power (finite colength), extra
    single-support columns, and at most one column with two entries."""
    rng = random.Random(str(("sparse", rank, seed)))
    for _ in range(max_tries):
        cols = []
        for i in range(rank):
            # pure powers in both directions per slot keep lambda(F/M) finite
            for mono in (
                Poly.monomial(rng.randint(1, 3), 0),
                Poly.monomial(0, rng.randint(1, 3)),
            ):
                col = [Poly.zero()] * rank
                col[i] = mono
                cols.append(col)
        for _ in range(rng.randint(0, 2)):
            i = rng.randrange(rank)
            col = [Poly.zero()] * rank
            col[i] = Poly.monomial(rng.randint(0, 3), rng.randint(0, 3))
            if col[i].constant_term():
                continue
            cols.append(col)
        if rng.random() < 0.7 and rank >= 2:
            i, j = rng.sample(range(rank), 2)
            col = [Poly.zero()] * rank
            col[i] = Poly.monomial(rng.randint(0, 2), rng.randint(0, 2))
            col[j] = Poly.monomial(rng.randint(0, 2), rng.randint(0, 2))
            if col[i].constant_term() or col[j].constant_term():
                continue
            cols.append(col)
        try:
            M = SubmoduleOfFree(rank, cols)
        except Exception:
            continue
        if M.quotient().length > colength_bound:
            continue
        if M.max_minors_ideal().staircase() is None:
            continue
        return M
    raise InputError(f"sparse module sampling failed for rank {rank}, seed {seed}")


def corpus_modules(count, seed, colength_bound=25):
    """The main verification corpus: monomial-generated modules of ranks
    1 to 3 (random staircase ideals, integrally closed direct sums, the
    M(a,b,c) grid, sparse higher-rank patterns)."""
    out = []
    grid = [
        (a, b, c)
        for a in range(1, 4)
        for c in range(a, 5)
        for b in range(c + 1, a + c + 1)
        if (a + b) ** 2 - a * a - (b - c) ** 2 <= colength_bound
    ]
    i = 0
    while len(out) < count:
        kind = i % 5
        if kind == 0:
            out.append(module_of_ideal(random_staircase(seed * 3000 + i, colength_bound=colength_bound).to_ideal()))
        elif kind == 1:
            out.append(
                module_of_ideal(
                    random_ic_ideal(
                        1 + i % 4, colength_bound, seed=seed * 3000 + i
                    ).to_ideal()
                )
            )
        elif kind == 2:
            out.extend(direct_sum_corpus(1, seed * 3000 + i, colength_bound=colength_bound // 2))
        elif kind == 3 and grid:
            a, b, c = grid[i % len(grid)]
            M, _ = family_Mabc(a, b, c)
            if M.quotient().length <= colength_bound:
                out.append(M)
        else:
            out.append(
                _sparse_monomial_module(2 + i % 2, seed * 3000 + i, colength_bound)
            )
        i += 1
    return out[:count]


def hard_modules(count, seed, colength_bound=20, max_tries=300):
    """Dense random-coefficient modules where I(M) is generally not
    monomial; only adjoint-free verdicts apply to these."""
    out = []
    i = 0
    rng = random.Random(str(("hard", seed)))
    while len(out) < count and i < max_tries:
        i += 1
        rank = rng.randint(1, 2)
        cols = []
        for _ in range(rank + rng.randint(1, 2)):
            col = []
            for _ in range(rank):
                terms = {}
                for _ in range(rng.randint(1, 3)):
                    a, b = rng.randint(0, 2), rng.randint(0, 2)
                    if a + b == 0:
                        continue
                    terms[(a, b)] = rng.randint(1, 5)
                col.append(Poly(terms))
            cols.append(col)
        try:
            M = SubmoduleOfFree(rank, cols)
        except Exception:
            continue
        if M.quotient().length == 0 or M.quotient().length > colength_bound:
            continue
        out.append(M)
    if len(out) < count:
        raise InputError("hard module sampling failed")
    return out


def psi_corpus(count, seed):
    """Modules in the psi domain: integrally closed monomial direct sums
    with ord(I(M)) equal to the rank (each summand has order 1, so each
    is (x, y^b) or (y, x^a))."""
    out = []
    for i in range(count):
        rng = random.Random(str(("psi", seed, i)))
        parts = []
        for _ in range(2):
            b = rng.randint(1, 4)
            if rng.random() < 0.5:
                s = MonomialStaircase([(1, 0), (0, b)])
            else:
                s = MonomialStaircase([(b, 0), (0, 1)])
            parts.append(module_of_ideal(s.to_ideal()))
        out.append(direct_sum(parts[0], parts[1]))
    return out


def monomial_pairs(count, seed, ic=False, colength_bound=14):
    """Pairs of m-primary monomial ideals for the mixed-multiplicity
    block; with ic=True both members are integrally closed."""
    out = []
    for i in range(count):
        if ic:
            rng = random.Random(str(("icpair", seed, i)))
            s1 = random_ic_ideal(rng.randint(1, 3), colength_bound, seed=seed * 4000 + 2 * i)
            s2 = random_ic_ideal(rng.randint(1, 3), colength_bound, seed=seed * 4000 + 2 * i + 1)
        else:
            s1 = random_staircase(seed * 4000 + 2 * i, colength_bound=colength_bound)
            s2 = random_staircase(seed * 4000 + 2 * i + 1, colength_bound=colength_bound)
        out.append((s1.to_ideal(), s2.to_ideal()))
    return out

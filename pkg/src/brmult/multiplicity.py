"""Reductions and Buchsbaum-Rim multiplicities.

e(M) is computed two independent ways: through the colength of the ideal
of maximal minors of a certified minimal reduction, and through the
normalized leading coefficient of p -> lambda(Sym^p F / M^p).  The limit
route never touches reductions, so agreement of the two is a genuine
cross-check rather than a tautology.
"""

import math
import random
from itertools import combinations_with_replacement

from . import engine, field, ideals
from .errors import (
    GenericityError,
    InputError,
    PreconditionError,
    ResourceError,
)
from .modules import SubmoduleOfFree, colength_FM, min_gens
from .monomial import MonomialStaircase, staircase_from_polys
from .poly import Poly

SYM_GEN_CAP = 20000


class ReductionCertificate:
    """A candidate minimal reduction N of M with its verified checks.

    parameter_module: lambda(F/N) finite, N inside mF, mu(N) = r+1.
    reduction_verified: e(I(N)) = e(I(M)) (Rees' criterion through the
    ideals of minors).
    """

    __slots__ = ("module", "seeds", "parameter_module", "reduction_verified")

    def __init__(self, module, seeds, parameter_module, reduction_verified):
        self.module = module
        self.seeds = seeds
        self.parameter_module = parameter_module
        self.reduction_verified = reduction_verified


def _combination_columns(M, count, rng):
    cols = []
    for _ in range(count):
        acc = [Poly.zero()] * M.rank
        for j in range(M.ngens):
            c = field.rand_scalar(rng)
            col = M.column(j)
            for i in range(M.rank):
                acc[i] = acc[i] + col[i].scale(c)
        cols.append(acc)
    return cols


def minimal_reduction(M, seed=0, retries=5, cap=engine.DEFAULT_CAP):
    """Certified generic minimal reduction of M (needs M inside mF).

    When mu(M) = r+1 the module is its own minimal reduction.  Otherwise
    N is generated by r+1 random combinations of the generators; each
    candidate is certified and resampled on failure.
    """
    if not M.in_maximal_ideal():
        raise PreconditionError("apply split_free first: M has a unit entry")
    r = M.rank
    if min_gens(M, cap=cap) == r + 1:
        return ReductionCertificate(M, (seed,), True, True)
    eI = ideals.hs_multiplicity(M.max_minors_ideal(), seed=seed, cap=cap)
    rng = random.Random(str(("minred", seed)))
    failures = []
    for attempt in range(retries):
        cols = _combination_columns(M, r + 1, rng)
        try:
            N = SubmoduleOfFree(r, cols, cap=cap)
            if min_gens(N, cap=cap) != r + 1:
                failures.append("mu(N) != r+1")
                continue
            eN = ideals.hs_multiplicity(
                N.max_minors_ideal(), seed=seed + attempt + 1, cap=cap
            )
            if eN != eI:
                failures.append(f"e(I(N)) = {eN} != e(I(M)) = {eI}")
                continue
        except Exception as exc:  # cap or rank failure for this draw
            failures.append(str(exc))
            continue
        return ReductionCertificate(N, (seed,), True, True)
    raise GenericityError(
        f"no certified minimal reduction after {retries} draws: {failures}",
        seeds=[seed],
    )


def br_multiplicity(M, seed=0, cap=engine.DEFAULT_CAP):
    """Buchsbaum-Rim multiplicity e(M) = lambda(R/I(N)) for a certified
    minimal reduction N, asserting the internal consistency
    lambda(F/N) = lambda(R/I(N)) and agreement across two seeds."""
    values = []
    for s in (seed, seed + 104729):
        cert = minimal_reduction(M, seed=s, cap=cap)
        N = cert.module
        lam_FN = colength_FM(N, cap=cap)
        lam_IN = ideals.colength_value(N.max_minors_ideal(), cap=cap)
        if lam_FN != lam_IN:
            raise GenericityError(
                f"lambda(F/N) = {lam_FN} != lambda(R/I(N)) = {lam_IN}",
                seeds=[s],
            )
        values.append(lam_IN)
    if values[0] != values[1]:
        raise GenericityError(
            f"reduction route disagrees across seeds: {values}", seeds=[seed]
        )
    return values[0]


# -- symmetric powers ---------------------------------------------------


def _sym_basis(r, p):
    """Exponent tuples of the monomial basis of Sym^p(R^r), fixed order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], p, r)
    return out


def _column_as_form(col):
    """A generator column as a linear form: T-exponent tuple -> Poly."""
    r = len(col)
    form = {}
    for i, f in enumerate(col):
        if not f.is_zero():
            e = tuple(1 if k == i else 0 for k in range(r))
            form[e] = f
    return form


def _form_product(f1, f2):
    out = {}
    for e1, p1 in f1.items():
        for e2, p2 in f2.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            prod = p1 * p2
            if e in out:
                out[e] = out[e] + prod
            else:
                out[e] = prod
    return {e: f for e, f in out.items() if not f.is_zero()}


def _power_module_gens(columns, p):
    """Generators of M^p inside Sym^p F, as vectors over the fixed
    monomial basis of Sym^p."""
    r = len(columns[0])
    n = len(columns)
    if math.comb(n + p - 1, p) > SYM_GEN_CAP:
        raise ResourceError(f"symmetric power would need more than {SYM_GEN_CAP} generators")
    basis = _sym_basis(r, p)
    index = {e: i for i, e in enumerate(basis)}
    forms = [_column_as_form(c) for c in columns]
    gens = []
    seen = set()
    for combo in combinations_with_replacement(range(n), p):
        prod = forms[combo[0]]
        for j in combo[1:]:
            prod = _form_product(prod, forms[j])
        vec = [Poly.zero()] * len(basis)
        for e, f in prod.items():
            vec[index[e]] = f
        key = tuple(vec)
        if key not in seen:
            seen.add(key)
            gens.append(vec)
    return gens, len(basis)


def sym_power_length(M, p, cap=engine.DEFAULT_CAP):
    """lambda(Sym^p F / M^p), by the certified truncation engine on the
    free module Sym^p F."""
    if p < 1:
        raise InputError("power must be >= 1")
    if p == 1:
        return colength_FM(M, cap=cap)
    gens, rank = _power_module_gens(M.columns(), p)
    return engine.certified_colength(gens, ambient_rank=rank, cap=cap).length


def br_limit_multiplicity(M, pmax=None, cap=engine.DEFAULT_CAP):
    """e(M) as the stabilized (r+1)-st finite difference of
    p -> lambda(Sym^p F/M^p); the anti-circularity oracle (no reductions
    involved anywhere on this route)."""
    r = M.rank
    if pmax is None:
        pmax = r + 4
    if pmax < r + 3:
        raise InputError(f"pmax must be at least rank+3 = {r + 3}")
    vals = [0]  # lambda at p = 0
    prev = None
    for p in range(1, pmax + 1):
        vals.append(sym_power_length(M, p, cap=cap))
        base = p - (r + 1)
        if base < 0:
            continue
        d = sum(
            (-1) ** k * math.comb(r + 1, k) * vals[base + r + 1 - k]
            for k in range(r + 2)
        )
        if prev is not None and d == prev:
            return d
        prev = d
    raise ResourceError(
        f"(r+1)-st differences did not stabilize by p = {pmax}; raise pmax"
    )


# -- integral closure ---------------------------------------------------


def closure_member(M, element, seed=0, cap=engine.DEFAULT_CAP):
    """f in the integral closure of M iff I(M) is a reduction of
    I(M + Rf); the containment I(M) <= I(M + Rf) is automatic."""
    element = list(element)
    if len(element) != M.rank:
        raise InputError("element length does not match ambient rank")
    if M.contains_element(element, cap=cap):
        return True
    bigger = SubmoduleOfFree(M.rank, M.columns() + [element], _validate=False)
    I_small = M.max_minors_ideal()
    I_big = bigger.max_minors_ideal()
    e_small = ideals.hs_multiplicity(I_small, seed=seed, cap=cap)
    e_big = ideals.hs_multiplicity(I_big, seed=seed, cap=cap)
    return e_small == e_big


def _monomial_direct_sum_parts(M):
    """If M is (up to column order) a direct sum of monomial ideals, the
    list of staircases per ambient coordinate; else None."""
    parts = [[] for _ in range(M.rank)]
    for j in range(M.ngens):
        col = M.column(j)
        support = [i for i, f in enumerate(col) if not f.is_zero()]
        if len(support) != 1 or not col[support[0]].is_monomial():
            return None
        parts[support[0]].append(col[support[0]])
    staircases = []
    for gens in parts:
        if not gens:
            return None
        s = staircase_from_polys(gens)
        if s is None or not s.is_m_primary():
            return None
        staircases.append(s)
    return staircases


def closure_approx(M, degree_bound=None, seed=0, probes=8, cap=engine.DEFAULT_CAP):
    """Best-effort integral closure M <= M+ <= Mbar.

    Certified exactly when M is a direct sum of monomial ideals (closure
    commutes with direct sums and is polyhedral per summand); otherwise
    monomial elements up to the degree bound plus a few random probes are
    adjoined elementwise.  Returns (M+, status) with status one of
    "certified", "witnessed-not-closed", "unknown".
    """
    parts = _monomial_direct_sum_parts(M)
    if parts is not None:
        cols = []
        changed = False
        for i, s in enumerate(parts):
            closed = s.closure()
            if closed != s:
                changed = True
            for (a, b) in closed.corners:
                col = [Poly.zero()] * M.rank
                col[i] = Poly.monomial(a, b)
                cols.append(col)
        plus = SubmoduleOfFree(M.rank, cols) if changed else M
        return plus, "certified"
    if degree_bound is None:
        degree_bound = M.gens.max_degree() + 1
    rng = random.Random(str(("closure", seed)))
    found = []
    for i in range(M.rank):
        for d in range(degree_bound + 1):
            for a in range(d + 1):
                el = [Poly.zero()] * M.rank
                el[i] = Poly.monomial(a, d - a)
                if not M.contains_element(el, cap=cap) and closure_member(
                    M, el, seed=seed, cap=cap
                ):
                    found.append(el)
    for _ in range(probes):
        el = [Poly.zero()] * M.rank
        i = rng.randrange(M.rank)
        a = rng.randrange(degree_bound + 1)
        b = rng.randrange(max(1, degree_bound + 1 - a))
        el[i] = Poly.monomial(a, b)
        if not M.contains_element(el, cap=cap) and closure_member(M, el, seed=seed, cap=cap):
            found.append(el)
    if found:
        plus = SubmoduleOfFree(M.rank, M.columns() + found)
        return plus, "witnessed-not-closed"
    return M, "unknown"


def is_integrally_closed(M, seed=0, cap=engine.DEFAULT_CAP):
    """Three-valued integral-closedness.

    Returns (status, witness): status True only on the certified class
    (direct sums of monomial ideals), False with an explicit element of
    Mbar \\ M when probing finds one, None for an honest unknown.
    """
    plus, status = closure_approx(M, seed=seed, cap=cap)
    if status == "certified":
        if plus is M:
            return True, None
        for j in range(plus.ngens):
            col = plus.column(j)
            if not M.contains_element(col, cap=cap):
                return False, col
        return True, None
    if status == "witnessed-not-closed":
        for j in range(M.ngens, plus.ngens):
            col = plus.column(j)
            if not M.contains_element(col, cap=cap):
                return False, col
    return None, None


# -- power identities ---------------------------------------------------


def check_power_identity(M, N, p=1, cap=engine.DEFAULT_CAP):
    """Whether M^{p+1} = N M^p inside Sym^{p+1} F.

    The containment N M^p <= M^{p+1} is automatic once N <= M (checked);
    the reverse is decided by certified membership of every generator of
    M^{p+1} in the image of N M^p.
    """
    if p < 1:
        raise InputError("power must be >= 1")
    for j in range(N.ngens):
        if not M.contains_element(N.column(j), cap=cap):
            raise PreconditionError("N is not contained in M")
    m_cols = M.columns()
    n_cols = N.columns()
    big_gens, rank = _power_module_gens(m_cols, p + 1)
    # generators of N * M^p: one N column times a p-fold M product
    mp_gens, _ = _power_module_gens(m_cols, p)
    basis = _sym_basis(M.rank, p + 1)
    index = {e: i for i, e in enumerate(basis)}
    basis_p = _sym_basis(M.rank, p)
    nm_gens = []
    for ncol in n_cols:
        nform = _column_as_form(ncol)
        for g in mp_gens:
            gform = {
                e: f for e, f in zip(basis_p, g) if not f.is_zero()
            }
            prod = _form_product(nform, gform)
            vec = [Poly.zero()] * len(basis)
            for e, f in prod.items():
                vec[index[e]] = f
            nm_gens.append(vec)
    q = engine.certified_colength(nm_gens, ambient_rank=rank, cap=cap)
    return all(q.contains(g) for g in big_gens)

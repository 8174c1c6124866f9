"""Minimal presentations, syzygy submatrices, adjoints via minors and
the psi-correspondence between integrally closed modules and contracted
modules.

Syzygies are found inside a bounded coefficient-degree window: the map
(R_{<=d0})^n -> F is evaluated without truncation (the target window is
wide enough to hold every product), so each kernel vector is an exact
syzygy and annihilation can be asserted by exact arithmetic.  Generation
is certified afterwards: if the selected columns A were only a proper
submodule of the syzygy module then A = A_true * H with det(H) in m, and
the colength of I_{n-r}(A) would exceed that of I(M); equality of the
two colengths therefore proves that A presents M.
"""

import itertools

from . import engine, ideals, multiplicity
from .errors import (
    InputError,
    PreconditionError,
    PresentationUnavailableError,
)
from .linalg import kernel_basis
from .modules import (
    SubmoduleOfFree,
    colength_FM,
    is_contracted,
    min_gens,
    minimalize_gens,
    module_of_ideal,
)
from .poly import Poly, PolyMatrix

DEGREE_WINDOW_CAP = 40


class PresentationMatrix:
    """Minimal presenting matrix A (n x (n-r), exact entries in m) of a
    module, together with the generator order it refers to.

    first_block = r+1 marks a reduction-first generator order (the first
    r+1 rows correspond to a chosen minimal reduction); 0 otherwise.
    """

    __slots__ = ("A", "module", "first_block")

    def __init__(self, A, module, first_block=0):
        self.A = A
        self.module = module
        self.first_block = first_block

    def B(self):
        """The submatrix with the first r+1 rows deleted (only for a
        reduction-first generator order)."""
        if self.first_block == 0:
            raise PreconditionError("B needs a reduction-first presentation")
        return self.A.delete_rows(range(self.first_block))

    def minors_ideal(self, k):
        if k == 0:
            return ideals.Ideal([Poly.const(1)])
        mats = [m for m in self.A.minors(k) if not m.is_zero()]
        return ideals.Ideal(mats)


def _syzygy_candidates(M, d0):
    """Exact syzygies among the generator columns with coefficient degree
    at most d0, as n-tuples of Polys, sorted low degree first."""
    n = M.ngens
    dom = engine.TruncCtx(d0 + 1)
    tgt = engine.TruncCtx(d0 + M.gens.max_degree() + 1)
    Dc, Dt = dom.dimension, tgt.dimension
    cols = M.columns()
    images = []
    for j in range(n):
        for (a, b) in dom.monomials:
            v = engine._zero_vec(M.rank * Dt)
            for s, f in enumerate(cols[j]):
                for (u, w), c in f.terms.items():
                    v[s * Dt + tgt.index[(u + a, w + b)]] = c
            images.append(v)
    rows = [[images[t][i] for t in range(n * Dc)] for i in range(M.rank * Dt)]
    out = []
    for v in kernel_basis(rows, n * Dc):
        entry = []
        for j in range(n):
            f = Poly(
                {
                    dom.monomials[mi]: int(v[j * Dc + mi])
                    for mi in range(Dc)
                    if v[j * Dc + mi]
                }
            )
            entry.append(f)
        out.append(tuple(entry))
    out.sort(key=lambda sy: (max(f.degree() for f in sy), str(sy)))
    return out, dom, Dc


def _syzygy_vector(sy, dom, Dc, n):
    v = engine._zero_vec(n * Dc)
    for j, f in enumerate(sy):
        for (a, b), c in f.terms.items():
            if a + b <= dom.N - 1:
                v[j * Dc + dom.index[(a, b)]] = c
    return v


def _select_minimal(cands, d0, n):
    """Nakayama pre-selection.  The span of x*tau and y*tau over all
    window candidates tau is an exact subspace of m*Syz (computed in the
    one-degree-larger window, so nothing is truncated); candidates that
    are dependent modulo that subspace are redundant for certain, and
    the remaining ones are kept for the certified subset search."""
    from .linalg import new_echelon

    big = engine.TruncCtx(d0 + 2)
    D = big.dimension
    ech = new_echelon(n * D)
    for sy in cands:
        for (a, b) in ((1, 0), (0, 1)):
            shifted = tuple(f.shift(a, b) for f in sy)
            ech.insert(_syzygy_vector(shifted, big, D, n))
    picked = []
    for sy in cands:
        v = _syzygy_vector(sy, big, D, n)
        if ech.contains(v):
            continue
        picked.append(sy)
        ech.insert(v)
    return picked


def presentation(M, cap=engine.DEFAULT_CAP, first_block=0):
    """Minimal presenting matrix of M (generators must already be
    minimal; re-minimalize first otherwise).

    Self-checks on every exit path: exact annihilation of the generator
    row, all entries in m, exactly n-r columns, and the certifying
    identity lambda(R/I_{n-r}(A)) = lambda(R/I(M)).
    """
    n, r = M.ngens, M.rank
    if min_gens(M, cap=cap) != n:
        raise PreconditionError("generators are not minimal; minimalize first")
    want = n - r
    lam_I = ideals.colength_value(M.max_minors_ideal(), cap=cap)
    ord_I = M.max_minors_ideal().order()
    cols = M.columns()
    d0 = M.gens.max_degree() + 2
    failures = []
    while d0 <= DEGREE_WINDOW_CAP:
        cands, dom, Dc = _syzygy_candidates(M, d0)
        pool = _select_minimal(cands, d0, n)
        if len(pool) < want:
            failures.append(f"only {len(pool)} of {want} syzygies at window {d0}")
            d0 = d0 + max(2, d0 // 2)
            continue
        tried = 0
        for combo in itertools.combinations(range(len(pool)), want):
            tried += 1
            if tried > 500:
                break
            A = PolyMatrix(
                [[pool[c][j] for c in combo] for j in range(n)],
                rows=n,
                cols=want,
            )
            ok = True
            for c in range(want):
                total = [Poly.zero()] * r
                for j in range(n):
                    for i in range(r):
                        total[i] = total[i] + A.entry(j, c) * cols[j][i]
                if any(not t.is_zero() for t in total):
                    ok = False
                    failures.append("annihilation failed")
                    break
                if any(
                    A.entry(j, c).constant_term() != 0 for j in range(n)
                ):
                    ok = False
                    failures.append("a presentation entry is a unit")
                    break
            if not ok:
                continue
            mins = [m for m in A.minors(want) if not m.is_zero()]
            if not mins:
                continue
            # Cauchy-Binet: a non-generating subset has A = A_true * H
            # with det(H) in m, so every maximal minor picks up a factor
            # of det(H) and the order of the minors ideal jumps.  The
            # order test is therefore an exact certificate; the colength
            # identity is re-checked once on the accepted subset.
            I_A = ideals.Ideal(mins)
            if I_A.order() != ord_I:
                continue
            try:
                lam_A = ideals.colength_value(I_A, cap=cap)
            except engine.ExceedsCapError:
                lam_A = None  # not m-primary: the span is too small
            if lam_A == lam_I:
                return PresentationMatrix(A, M, first_block=first_block)
        failures.append(f"no certifying subset at window {d0}")
        d0 = d0 + max(2, d0 // 2)
    raise PresentationUnavailableError(
        f"no certified presentation within degree window {DEGREE_WINDOW_CAP}: {failures}"
    )


def reduction_first_presentation(M, cert, cap=engine.DEFAULT_CAP):
    """Presentation whose generator order starts with the r+1 generators
    of the certified minimal reduction in `cert`."""
    N = cert.module
    r = M.rank
    ext = SubmoduleOfFree(
        r, N.columns() + M.columns(), _validate=False, cap=cap
    )
    ext = minimalize_gens(ext, cap=cap, keep_first=r + 1)
    return presentation(ext, cap=cap, first_block=r + 1)


def keylem_check(M, cert, cap=engine.DEFAULT_CAP):
    """Both sides of lambda(M/N) = lambda(R/I_{n-r-1}(B)), computed
    independently: the left side needs no syzygies at all.

    Returns (lhs, rhs, equal); rhs and equal are None when the
    presentation does not certify.
    """
    N = cert.module
    lhs = colength_FM(N, cap=cap) - colength_FM(M, cap=cap)
    try:
        pres = reduction_first_presentation(M, cert, cap=cap)
    except PresentationUnavailableError:
        return lhs, None, None
    B = pres.B()
    k = B.rows  # n - r - 1 maximal minors of the (n-r-1) x (n-r) block
    if k == 0:
        rhs = 0
    else:
        mins = [m for m in B.minors(k) if not m.is_zero()]
        if not mins:
            return lhs, None, None
        rhs = ideals.colength_value(ideals.Ideal(mins), cap=cap)
    return lhs, rhs, lhs == rhs


def _require_certified_closed_ideal(I):
    s = I.staircase()
    if s is None:
        raise PreconditionError(
            "adjoint via presentation needs a monomial ideal (the certified class)"
        )
    if not s.is_integrally_closed():
        raise PreconditionError("ideal is not integrally closed")
    return s


def adjoint_via_presentation(obj, cap=engine.DEFAULT_CAP, seed=0):
    """adj via minors of a minimal presentation: I_{n-2}(A) for an
    integrally closed ideal, I_{n-r-1}(A) = I_{n-r-1}(B) for an
    integrally closed module (both forms computed and asserted equal).

    Refuses inputs outside the certified integrally closed class rather
    than returning an uncertified guess.
    """
    if isinstance(obj, ideals.Ideal):
        s = _require_certified_closed_ideal(obj)
        M = module_of_ideal(ideals.Ideal(s.gens()))
        pres = presentation(M, cap=cap)
        return pres.minors_ideal(M.ngens - 2)
    M = obj
    status, _ = multiplicity.is_integrally_closed(M, seed=seed, cap=cap)
    if status is not True:
        raise PreconditionError(
            "module is not in the certified integrally closed class"
        )
    M = minimalize_gens(M, cap=cap)
    n, r = M.ngens, M.rank
    cert = multiplicity.minimal_reduction(M, seed=seed, cap=cap)
    pres = reduction_first_presentation(M, cert, cap=cap)
    a_form = pres.minors_ideal(n - r - 1)
    B = pres.B()
    if B.rows == 0:
        b_form = ideals.Ideal([Poly.const(1)])
    else:
        mins = [m for m in B.minors(n - r - 1) if not m.is_zero()]
        b_form = ideals.Ideal(mins) if mins else None
    if b_form is None or not ideals.equals(a_form, b_form, cap=cap):
        raise PresentationUnavailableError(
            "A-form and B-form adjoints disagree"
        )
    return a_form


def fitt_r1(M, cap=engine.DEFAULT_CAP):
    """Fitt_{r+1}(M) = I_{n-r-1}(A) of a minimal presentation."""
    M = minimalize_gens(M, cap=cap)
    pres = presentation(M, cap=cap)
    return pres.minors_ideal(M.ngens - M.rank - 1)


def psi(M, cap=engine.DEFAULT_CAP, seed=0):
    """The correspondence M -> K: K is generated by the columns of the
    transpose of a minimal presenting matrix of M.

    Preconditions: M certified integrally closed of rank r with
    M inside mF and ord(I(M)) = r.  Postconditions asserted: mu(M) = 2r,
    I(K) = I(M), I_{r-1}(K) = adj(I(M)), K contracted.
    """
    r = M.rank
    if not M.in_maximal_ideal():
        raise PreconditionError("M must sit inside mF")
    status, _ = multiplicity.is_integrally_closed(M, seed=seed, cap=cap)
    if status is not True:
        raise PreconditionError("M is not certified integrally closed")
    M = minimalize_gens(M, cap=cap)
    I = M.max_minors_ideal()
    s = _require_certified_closed_ideal(I)
    if s.order() != r:
        raise PreconditionError(f"ord(I(M)) = {s.order()} != rank = {r}")
    if M.ngens != 2 * r:
        raise PreconditionError(f"mu(M) = {M.ngens} != 2*rank = {2 * r}")
    pres = presentation(M, cap=cap)
    A = pres.A  # 2r x r
    K = SubmoduleOfFree(
        r, [[A.entry(j, c) for c in range(r)] for j in range(2 * r)]
    )
    if not ideals.equals(K.max_minors_ideal(), I, cap=cap):
        raise PresentationUnavailableError("I(K) != I(M)")
    adj = s.adjoint().to_ideal()
    if not ideals.equals(K.fitting_ideal(r - 1), adj, cap=cap):
        raise PresentationUnavailableError("I_{r-1}(K) != adj(I)")
    if not is_contracted(K, cap=cap):
        raise PresentationUnavailableError("K is not contracted")
    return K


def psi_inverse(K, cap=engine.DEFAULT_CAP, seed=0):
    """The reverse correspondence K -> M; asserts I(M) = I(K) and the
    certifying equality e(M) - lambda(F/M) = lambda(R/adj(I))."""
    r = K.rank
    if not K.in_maximal_ideal():
        raise PreconditionError("K must sit inside mF")
    K = minimalize_gens(K, cap=cap)
    if not is_contracted(K, cap=cap):
        raise PreconditionError("K is not contracted")
    if K.ngens != 2 * r:
        raise PreconditionError(f"mu(K) = {K.ngens} != 2*rank = {2 * r}")
    I = K.max_minors_ideal()
    s = _require_certified_closed_ideal(I)
    pres = presentation(K, cap=cap)
    A = pres.A  # 2r x r
    M = SubmoduleOfFree(r, [[A.entry(j, c) for c in range(r)] for j in range(2 * r)])
    if not ideals.equals(M.max_minors_ideal(), I, cap=cap):
        raise PresentationUnavailableError("I(M) != I(K)")
    eM = multiplicity.br_multiplicity(M, seed=seed, cap=cap)
    lam_adj = s.adjoint().to_ideal()
    gap = eM - colength_FM(M, cap=cap)
    if gap != ideals.colength_value(lam_adj, cap=cap):
        raise PresentationUnavailableError(
            "e(M) - lambda(F/M) != lambda(R/adj(I))"
        )
    return M

"""Invariant reports and theorem verdicts.

A report is a flat record of the numeric invariants of one module plus a
`verdicts` block of booleans; every verdict is recomputed from the
numeric fields alone, so reports are replayable from their own JSON.
"""

from . import corpus, engine, ideals, multiplicity
from .errors import BrmultError
from .presentation import adjoint_via_presentation, fitt_r1, psi
from .modules import (
    colength_FM,
    direct_sum,
    family_Mabc,
    is_contracted,
    min_gens,
    minimalize_gens,
    module_of_ideal,
    split_free,
)


class InvariantReport:
    """Numeric invariants of one module and the derived verdicts."""

    FIELDS = (
        "rank",
        "n_gens",
        "mu",
        "free_rank",
        "ord_IM",
        "len_F_M",
        "len_R_IM",
        "e_M",
        "e_M_limit",
        "e_IM",
        "len_R_adj",
        "adj_tier",
        "len_R_fitt",
        "len_R_Ir1",
        "ic_status",
        "contracted",
    )

    def __init__(self, **kw):
        for f in self.FIELDS:
            setattr(self, f, kw.get(f))
        self.errors = kw.get("errors", {})
        self.verdicts = compute_verdicts(self)

    def to_dict(self):
        out = {f: getattr(self, f) for f in self.FIELDS}
        out["verdicts"] = dict(self.verdicts)
        if self.errors:
            out["errors"] = dict(self.errors)
        return out


def compute_verdicts(r):
    """Boolean verdicts from the numeric fields; None when a needed
    field is unavailable."""
    v = {}
    have_adj = r.len_R_adj is not None
    v["sandwich_lower"] = (r.e_IM - r.len_R_adj <= r.e_M) if have_adj else None
    v["sandwich_upper"] = (r.e_M <= r.len_F_M + r.len_R_adj) if have_adj else None
    v["closed_equality"] = (r.e_M == r.len_F_M + r.len_R_adj) if have_adj else None
    v["ideal_equality"] = (r.e_M == r.e_IM - r.len_R_adj) if have_adj else None
    # equality case (1) is equivalent to integral closedness; a certified
    # witness of non-closedness must never coexist with eq1
    if have_adj:
        ok = True
        if r.ic_status == "witness_not_closed" and v["closed_equality"]:
            ok = False
        if r.ic_status == "certified" and not v["closed_equality"]:
            ok = False
        v["closed_equality_consistent"] = ok
    else:
        v["closed_equality_consistent"] = None
    v["fitting_gap_bound"] = (
        (r.e_M - r.len_F_M >= r.len_R_fitt) if r.len_R_fitt is not None else None
    )
    v["minors_gap_bound"] = (
        (r.e_IM - r.e_M >= r.len_R_Ir1) if r.len_R_Ir1 is not None else None
    )
    v["length_identity_ineq"] = r.e_IM - r.e_M >= r.len_R_IM - r.len_F_M
    v["length_identity_eq"] = r.e_IM - r.e_M == r.len_R_IM - r.len_F_M
    v["adjoint_gap_bound"] = (r.e_IM - r.e_M <= r.len_R_adj) if have_adj else None
    v["dual_route"] = (
        (r.e_M == r.e_M_limit) if r.e_M_limit is not None else None
    )
    return v


def _adjoint_colength(I, cap, seed):
    """(lambda(R/adj), tier): polyhedral when I is monomial, the minors
    route when I is a certified integrally closed non-monomial ideal,
    else unavailable."""
    s = I.staircase()
    if s is not None:
        adj = s.closure().adjoint()
        return adj.colength(), "polyhedral"
    try:
        adj = adjoint_via_presentation(I, cap=cap, seed=seed)
        return ideals.colength_value(adj, cap=cap), "presentation"
    except BrmultError:
        return None, "unavailable"


def report(M, seed=0, cap=engine.DEFAULT_CAP, with_limit=False):
    """All invariants and verdicts for one module.

    Free summands are split off first (this changes neither lambda(F/M),
    I(M) nor e(M)); per-field failures are recorded in `errors` instead
    of failing the whole report.
    """
    errors = {}
    n_gens = M.ngens
    M2, free = split_free(M)
    M2 = minimalize_gens(M2, cap=cap)
    I = M2.max_minors_ideal()
    fields = {
        "rank": M.rank,
        "n_gens": n_gens,
        "free_rank": free,
        "mu": min_gens(M2, cap=cap) + free,
        "ord_IM": I.order(),
        "len_F_M": colength_FM(M2, cap=cap),
        "len_R_IM": ideals.colength_value(I, cap=cap),
        "errors": errors,
    }
    fields["e_M"] = multiplicity.br_multiplicity(M2, seed=seed, cap=cap)
    fields["e_IM"] = ideals.hs_multiplicity(I, seed=seed, cap=cap)
    la, tier = _adjoint_colength(I, cap, seed)
    fields["len_R_adj"] = la
    fields["adj_tier"] = tier
    if with_limit:
        try:
            fields["e_M_limit"] = multiplicity.br_limit_multiplicity(M2, cap=cap)
        except BrmultError as exc:
            errors["e_M_limit"] = str(exc)
    try:
        fields["len_R_fitt"] = ideals.colength_value(
            fitt_r1(M2, cap=cap), cap=cap
        )
    except BrmultError as exc:
        errors["len_R_fitt"] = str(exc)
    r = M2.rank
    Ir1 = M2.fitting_ideal(r - 1)
    fields["len_R_Ir1"] = ideals.colength_value(Ir1, cap=cap) if r > 1 else 0
    status, _witness = multiplicity.is_integrally_closed(M2, seed=seed, cap=cap)
    fields["ic_status"] = (
        "certified"
        if status is True
        else ("witness_not_closed" if status is False else "unknown")
    )
    fields["contracted"] = is_contracted(M2, cap=cap)
    return InvariantReport(**fields)


def verify_corpus(count=100, seed=1, colength_bound=25, cap=engine.DEFAULT_CAP, hard=0):
    """Generate the seeded corpus, run report on every module and
    aggregate verdicts.  Failures are data: the summary lists them."""
    modules = corpus.corpus_modules(count, seed, colength_bound=colength_bound)
    if hard:
        modules += corpus.hard_modules(hard, seed, colength_bound=colength_bound)
    summary = {
        "count": len(modules),
        "violations": [],
        "per_verdict": {},
        "reports": [],
    }
    for i, M in enumerate(modules):
        rep = report(M, seed=seed + i, cap=cap)
        d = rep.to_dict()
        d["index"] = i
        summary["reports"].append(d)
        for name, val in rep.verdicts.items():
            if name in ("closed_equality", "ideal_equality", "length_identity_eq"):
                continue  # equality cases are not universal claims
            bucket = summary["per_verdict"].setdefault(
                name, {"pass": 0, "fail": 0, "skipped": 0}
            )
            if val is None:
                bucket["skipped"] += 1
            elif val:
                bucket["pass"] += 1
            else:
                bucket["fail"] += 1
                summary["violations"].append({"index": i, "verdict": name})
    summary["ok"] = not summary["violations"]
    return summary


# -- the worked-example suite -------------------------------------------


def _grid(limit=8):
    return [
        (a, b, c)
        for a in range(1, limit)
        for c in range(a, limit)
        for b in range(c + 1, a + c + 1)
        if a + b <= limit
    ]


def _mabc_differences(a, b, c, seed=0, cap=engine.DEFAULT_CAP):
    """(e(I) - lambda(R/I), e(M) - lambda(F/M)) for M(a,b,c), using the
    designated reduction after certifying it via Rees' criterion."""
    M, N = family_Mabc(a, b, c)
    I = M.max_minors_ideal()
    IN = N.max_minors_ideal()
    if not ideals.is_reduction(IN, I, seed=seed, cap=cap):
        raise BrmultError(f"designated reduction fails Rees at {(a, b, c)}")
    eI = ideals.hs_multiplicity(I, seed=seed, cap=cap)
    eM = colength_FM(N, cap=cap)
    return eI - ideals.colength_value(I, cap=cap), eM - colength_FM(M, cap=cap)


def example_suite(seed=0, cap=engine.DEFAULT_CAP):
    """The full worked-example battery; returns named results with
    boolean `ok` fields and enough numbers to audit each claim."""
    out = {}

    # (a) closed forms on the (a,b,c) grid with a+b <= 8
    grid_rows = []
    ok = True
    for (a, b, c) in _grid(8):
        d_ideal, d_mod = _mabc_differences(a, b, c, seed=seed, cap=cap)
        want_ideal = a * a + (b - c) ** 2
        want_mod = a * (b - c) + (b - c) ** 2
        row_ok = (
            d_ideal == want_ideal
            and d_mod == want_mod
            and ((d_ideal == d_mod) == (a == b - c))
        )
        ok = ok and row_ok
        grid_rows.append(
            {"a": a, "b": b, "c": c, "ideal_diff": d_ideal, "module_diff": d_mod, "ok": row_ok}
        )
    out["grid"] = {"ok": ok, "rows": grid_rows}

    # (b) M(2,4,3): power identity holds yet the length-multiplicity
    # identity fails
    M, N = family_Mabc(2, 4, 3)
    I = M.max_minors_ideal()
    vals = {
        "e_I": ideals.hs_multiplicity(I, seed=seed, cap=cap),
        "len_R_I": ideals.colength_value(I, cap=cap),
        "e_M": multiplicity.br_multiplicity(M, seed=seed, cap=cap),
        "len_F_M": colength_FM(M, cap=cap),
        "power_identity": multiplicity.check_power_identity(M, N, p=1, cap=cap),
    }
    vals["identity_gap"] = (vals["e_I"] - vals["e_M"]) - (
        vals["len_R_I"] - vals["len_F_M"]
    )
    vals["ok"] = (
        vals["e_I"] == 36
        and vals["len_R_I"] == 31
        and vals["e_M"] == 32
        and vals["len_F_M"] == 29
        and vals["power_identity"]
        and vals["identity_gap"] != 0
    )
    out["m243"] = vals

    # (c) M^2 = NM on the a+b <= 2c subgrid
    rows = []
    ok = True
    for (a, b, c) in _grid(8):
        if a + b > 2 * c:
            continue
        M, N = family_Mabc(a, b, c)
        holds = multiplicity.check_power_identity(M, N, p=1, cap=cap)
        ok = ok and holds
        rows.append({"a": a, "b": b, "c": c, "holds": holds})
    out["subgrid_power"] = {"ok": ok, "rows": rows}

    # (d) the counterexample pair I = (x, y^6), J = (x^3, x*y^4, y^6)
    I = ideals.Ideal.parse("x, y^6")
    J = ideals.Ideal.parse("x^3, x*y^4, y^6")
    IJ = ideals.product(I, J)
    # xJ + y^6 I versus xJ + y^6 J: both printed readings are compared
    reading_I = ideals.equals(
        IJ,
        ideals.Ideal(
            [g.shift(1, 0) for g in J.gens] + [g.shift(0, 6) for g in I.gens]
        ),
        cap=cap,
    )
    reading_J = ideals.equals(
        IJ,
        ideals.Ideal(
            [g.shift(1, 0) for g in J.gens] + [g.shift(0, 6) for g in J.gens]
        ),
        cap=cap,
    )
    K = ideals.Ideal.parse("x^3, y^6")
    J2 = ideals.product(J, J)
    KJ = ideals.product(K, J)
    j2_differs = not ideals.equals(J2, KJ, cap=cap)
    Msum = direct_sum(module_of_ideal(I), module_of_ideal(J))
    rep = report(Msum, seed=seed, cap=cap)
    out["counterexample_pair"] = {
        "reading_xJ_plus_y6I": reading_I,
        "reading_xJ_plus_y6J": reading_J,
        "J2_neq_KJ": j2_differs,
        "length_identity_ineq_identity": rep.verdicts["length_identity_eq"],
        "ok": reading_I and j2_differs and bool(rep.verdicts["length_identity_eq"]),
    }

    # (e) transposed-presentation multiplicity formula on the psi corpus
    rows = []
    ok = True
    for i, M in enumerate(corpus.psi_corpus(10, seed + 7)):
        K = psi(M, cap=cap, seed=seed + i)
        eK = multiplicity.br_multiplicity(K, seed=seed + i, cap=cap)
        IK = K.max_minors_ideal()
        eIK = ideals.hs_multiplicity(IK, seed=seed + i, cap=cap)
        la_adj, _tier = _adjoint_colength(IK, cap, seed + i)
        holds = la_adj is not None and eK == eIK - la_adj
        ok = ok and holds
        rows.append({"index": i, "e_K": eK, "e_IK": eIK, "len_R_adj": la_adj, "holds": holds})
    out["transpose_multiplicity"] = {"ok": ok, "rows": rows}

    # (f) mixed multiplicities: the equality on integrally closed pairs,
    # the inequality in general, and the Kirby-Rees decompositions
    rows = []
    ok = True
    for i, (I, J) in enumerate(corpus.monomial_pairs(15, seed + 11, ic=True)):
        e1 = ideals.mixed_multiplicity(I, J, cap=cap)
        rhs = (
            ideals.colength_value(ideals.product(I, J), cap=cap)
            - ideals.colength_value(I, cap=cap)
            - ideals.colength_value(J, cap=cap)
        )
        eI = ideals.hs_multiplicity(I, seed=seed + i, cap=cap)
        eJ = ideals.hs_multiplicity(J, seed=seed + i, cap=cap)
        Msum = direct_sum(module_of_ideal(I), module_of_ideal(J))
        eM = multiplicity.br_multiplicity(Msum, seed=seed + i, cap=cap)
        eIJ = ideals.hs_multiplicity(ideals.product(I, J), seed=seed + i, cap=cap)
        holds = (
            e1 == rhs and eM == eI + e1 + eJ and eIJ == eI + 2 * e1 + eJ
        )
        ok = ok and holds
        rows.append({"index": i, "e1": e1, "rhs": rhs, "holds": holds})
    out["mixed_equality"] = {"ok": ok, "rows": rows}
    rows = []
    ok = True
    for i, (I, J) in enumerate(corpus.monomial_pairs(30, seed + 13, ic=False)):
        e1 = ideals.mixed_multiplicity(I, J, cap=cap)
        rhs = (
            ideals.colength_value(ideals.product(I, J), cap=cap)
            - ideals.colength_value(I, cap=cap)
            - ideals.colength_value(J, cap=cap)
        )
        holds = e1 >= rhs
        ok = ok and holds
        rows.append({"index": i, "e1": e1, "rhs": rhs, "holds": holds})
    out["mixed_inequality"] = {"ok": ok, "rows": rows}

    out["ok"] = all(
        out[k]["ok"]
        for k in (
            "grid",
            "m243",
            "subgrid_power",
            "counterexample_pair",
            "transpose_multiplicity",
            "mixed_equality",
            "mixed_inequality",
        )
    )
    return out

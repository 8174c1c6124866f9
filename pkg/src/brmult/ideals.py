"""Invariants of m-primary ideals: certified colength, order,
Hilbert-Samuel multiplicity, products, containment, reductions and mixed
multiplicities.

The multiplicity routines follow the standing infinite-residue-field
hypothesis: generic elements are realized as random combinations over a
2^31-sized field, the minimum over samples is taken, and an optional
second route (finite differences of power colengths) converts any
residual genericity risk into a detectable error.
"""

import random

from . import engine, field
from .errors import (
    ExceedsCapError,
    GenericityError,
    InputError,
    PreconditionError,
    ResourceError,
)
from .monomial import staircase_from_polys, staircase_product
from .poly import Poly, parse_poly

PRODUCT_CAP = 10**5
MIXED_POWER_CAP = 6


class ColengthResult:
    """Certified value of lambda(R/I), or the exceeds-cap marker."""

    __slots__ = ("value", "certified_at")

    def __init__(self, value, certified_at):
        self.value = value
        self.certified_at = certified_at

    @property
    def exceeds_cap(self):
        return self.value is None

    def __repr__(self):
        if self.exceeds_cap:
            return f"ColengthResult(exceeds-cap at {self.certified_at})"
        return f"ColengthResult({self.value}, certified_at={self.certified_at})"


class Ideal:
    """Finite generator list of Polys; equality is containment-based,
    never generator-list comparison."""

    __slots__ = ("gens", "_quotient", "_staircase", "_staircase_known")

    def __init__(self, gens):
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise InputError("ideal needs a nonzero generator")
        self.gens = tuple(gens)
        self._quotient = None
        self._staircase = None
        self._staircase_known = False

    @staticmethod
    def parse(text):
        """Comma-separated polynomial list, e.g. `x^6, x^4*y^4, y^6`."""
        parts = [p for p in text.split(",")]
        return Ideal([parse_poly(p) for p in parts])

    def staircase(self):
        """The staircase when every generator is a monomial, else None."""
        if not self._staircase_known:
            self._staircase = staircase_from_polys(self.gens)
            self._staircase_known = True
        return self._staircase

    def is_monomial(self):
        return self.staircase() is not None

    def quotient(self, cap=engine.DEFAULT_CAP):
        if self._quotient is None:
            self._quotient = engine.certified_colength(
                [(g,) for g in self.gens], ambient_rank=1, cap=cap
            )
        return self._quotient

    def order(self):
        """min over generators of the m-adic order (the order of the
        ideal, since ord is a valuation)."""
        return int(min(g.order() for g in self.gens))


def colength(I, cap=engine.DEFAULT_CAP):
    """Certified lambda(R/I); 'exceeds-cap' result instead of a value
    when the Nakayama rule does not fire below the cap."""
    try:
        q = I.quotient(cap=cap)
    except ExceedsCapError:
        return ColengthResult(None, cap)
    return ColengthResult(q.length, q.certified_at)


def colength_value(I, cap=engine.DEFAULT_CAP):
    res = colength(I, cap=cap)
    if res.exceeds_cap:
        raise ExceedsCapError(cap, "ideal is not m-primary within the truncation cap")
    return res.value


def product(I, J):
    """Pairwise-product generators; staircase-minimalized when both
    sides are monomial so that powers do not blow up."""
    sI, sJ = I.staircase(), J.staircase()
    if sI is not None and sJ is not None:
        return Ideal(staircase_product(sI, sJ).gens())
    if len(I.gens) * len(J.gens) > PRODUCT_CAP:
        raise ResourceError("generator blowup in ideal product")
    return Ideal([g * h for g in I.gens for h in J.gens])


def power(I, p):
    if p < 0:
        raise InputError("negative ideal power")
    out = Ideal([Poly.const(1)])
    for _ in range(p):
        out = product(out, I)
    return out


def contains(I, f, cap=engine.DEFAULT_CAP):
    """Exact membership f in I, certified at I's truncation degree."""
    s = I.staircase()
    if s is not None and f.is_monomial():
        ((a, b),) = f.terms.keys()
        return s.contains(a, b)
    if f.is_zero():
        return True
    return I.quotient(cap=cap).contains((f,))


def equals(I, J, cap=engine.DEFAULT_CAP):
    """Mutual containment of generators (representation-independent)."""
    sI, sJ = I.staircase(), J.staircase()
    if sI is not None and sJ is not None:
        return sI == sJ
    return all(contains(I, g, cap) for g in J.gens) and all(
        contains(J, g, cap) for g in I.gens
    )


def _random_combination(gens, rng):
    f = Poly.zero()
    for g in gens:
        f = f + g.scale(field.rand_scalar(rng))
    return f


def hs_multiplicity(I, seed=0, samples=3, cap=engine.DEFAULT_CAP, cross_check=False):
    """Hilbert-Samuel multiplicity e(I).

    Primary route: lambda(R/(g1, g2)) for random combinations g1, g2 of
    the generators, minimized over `samples` draws (any such lambda is
    an upper bound for e(I), attained generically).  The optional
    cross-check recomputes e(I) as the stabilized second difference of
    p -> lambda(R/I^p) and must agree.
    """
    colength_value(I, cap=cap)  # certifies I is m-primary
    rng = random.Random(str(("hs", seed)))
    best = None
    misses = 0
    for _ in range(samples):
        g1 = _random_combination(I.gens, rng)
        g2 = _random_combination(I.gens, rng)
        try:
            val = colength_value(Ideal([g1, g2]), cap=cap)
        except ExceedsCapError:
            misses += 1
            if misses > samples:
                raise GenericityError(
                    "random parameter pairs kept hitting the cap", seeds=[seed]
                )
            continue
        best = val if best is None else min(best, val)
    if best is None:
        raise GenericityError("no parameter pair certified", seeds=[seed])
    if cross_check:
        alt = _hs_by_differences(I, cap=cap)
        if alt != best:
            raise GenericityError(
                f"multiplicity routes disagree: generic pairs give {best}, "
                f"power differences give {alt}",
                seeds=[seed],
            )
    return best


def _hs_by_differences(I, cap=engine.DEFAULT_CAP, pmax=8):
    vals = [0]
    prev = None
    for p in range(1, pmax + 1):
        vals.append(colength_value(power(I, p), cap=cap))
        if p >= 2:
            d2 = vals[p] - 2 * vals[p - 1] + vals[p - 2]
            if prev is not None and d2 == prev:
                return d2
            prev = d2
    raise ResourceError(f"second differences did not stabilize by p = {pmax}")


def is_reduction(J, I, seed=0, cap=engine.DEFAULT_CAP):
    """Rees' multiplicity criterion: J a reduction of I iff e(J) = e(I).
    Containment J <= I is a checked precondition, not a false return."""
    for g in J.gens:
        if not contains(I, g, cap):
            raise PreconditionError("J is not contained in I")
    return hs_multiplicity(J, seed=seed, cap=cap) == hs_multiplicity(
        I, seed=seed, cap=cap
    )


def mixed_multiplicity(I, J, cap=engine.DEFAULT_CAP, power_cap=MIXED_POWER_CAP):
    """Mixed multiplicity e_1(I|J): the stabilized second mixed difference
    of (p, q) -> lambda(R/I^p J^q) along the diagonal."""
    colength_value(I, cap=cap)
    colength_value(J, cap=cap)
    lam = {}

    def T(p, q):
        if (p, q) not in lam:
            lam[(p, q)] = colength_value(product(power(I, p), power(J, q)), cap=cap)
        return lam[(p, q)]

    def D(p, q):
        return T(p + 1, q + 1) - T(p + 1, q) - T(p, q + 1) + T(p, q)

    prev = None
    for k in range(1, power_cap):
        cur = D(k, k)
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise ResourceError(
        f"mixed differences did not stabilize with powers up to {power_cap}"
    )

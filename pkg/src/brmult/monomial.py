"""Combinatorics of m-primary monomial ideals.

A staircase is the minimal antichain of exponent pairs generating a
monomial ideal.  Everything here (colength by lattice-point count,
integral closure by Newton polyhedron, adjoint by the interior-point
rule, Hilbert-Burch syzygies) is an independent oracle against which the
truncated linear algebra is cross-checked.
"""

import random
from itertools import combinations

from .errors import InputError
from .poly import Poly, PolyMatrix


def _minimalize(pairs):
    pairs = sorted(set(pairs))
    keep = []
    for (a, b) in pairs:
        if not any(u <= a and v <= b for (u, v) in pairs if (u, v) != (a, b)):
            keep.append((a, b))
    # sort with a descending, b ascending (staircase order)
    return sorted(keep, key=lambda t: (-t[0], t[1]))


class MonomialStaircase:
    """m-primary monomial ideal as its minimal corner antichain.

    Corners are stored with a strictly decreasing and b strictly
    increasing; m-primary means pure powers of x and of y are present.
    """

    __slots__ = ("corners",)

    def __init__(self, pairs):
        corners = _minimalize(pairs)
        if not corners:
            raise InputError("empty staircase")
        for (a, b) in corners:
            if a < 0 or b < 0:
                raise InputError("negative exponent in staircase")
        self.corners = tuple(corners)

    @staticmethod
    def parse(text):
        """Parse the `[(6,0),(5,3),(0,6)]` exponent-pair format."""
        stripped = "".join(text.split())
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise InputError("staircase must be a bracketed pair list")
        body = stripped[1:-1]
        pairs = []
        if body:
            chunks = body.replace("),(", ");(").split(";")
            for ch in chunks:
                if not (ch.startswith("(") and ch.endswith(")")):
                    raise InputError(f"bad exponent pair {ch!r}")
                a, b = ch[1:-1].split(",")
                pairs.append((int(a), int(b)))
        return MonomialStaircase(pairs)

    def is_m_primary(self):
        return self.corners[-1][0] == 0 and self.corners[0][1] == 0

    def _require_m_primary(self):
        if not self.is_m_primary():
            raise InputError("staircase is not m-primary (missing a pure power)")

    def contains(self, a, b):
        return any(u <= a and v <= b for (u, v) in self.corners)

    def order(self):
        return min(a + b for (a, b) in self.corners)

    def gens(self):
        return [Poly.monomial(a, b) for (a, b) in self.corners]

    def to_ideal(self):
        from .ideals import Ideal

        return Ideal(self.gens())

    def colength(self):
        """Exact count of lattice points under the staircase."""
        self._require_m_primary()
        A = self.corners[0][0]  # pure power of x
        total = 0
        for u in range(A):
            total += min(b for (a, b) in self.corners if a <= u)
        return total

    # -- Newton polyhedron ---------------------------------------------

    def hull_edges(self):
        """Inequalities alpha*u + beta*v >= gamma cutting out the Newton
        polyhedron conv(corners) + R^2_{>=0} (besides u,v >= 0)."""
        self._require_m_primary()
        pts = list(self.corners)  # a descending
        # lower-left convex chain from (A, 0) to (0, B)
        chain = []
        for pt in pts:
            while len(chain) >= 2:
                (x1, y1), (x2, y2) = chain[-2], chain[-1]
                # drop chain[-1] if it is above segment chain[-2] -> pt
                if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) >= 0:
                    chain.pop()
                else:
                    break
            chain.append(pt)
        edges = []
        for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
            alpha, beta = y2 - y1, x1 - x2  # both positive
            gamma = alpha * x1 + beta * y1
            edges.append((alpha, beta, gamma))
        return edges

    def closure(self):
        """Integral closure: all lattice points of the Newton polyhedron,
        reminimalized.  Idempotent and extensive."""
        edges = self.hull_edges()
        A, B = self.corners[0][0], self.corners[-1][1]
        pts = []
        for u in range(A + 1):
            for v in range(B + 1):
                if all(al * u + be * v >= ga for (al, be, ga) in edges):
                    pts.append((u, v))
        return MonomialStaircase(pts)

    def is_integrally_closed(self):
        return self.corners == self.closure().corners

    def adjoint(self):
        """Adjoint ideal by the interior-point rule: keep x^u y^v whenever
        (u+1, v+1) lies strictly inside every bounding edge of the Newton
        polyhedron.  Independent oracle for the presentation route."""
        edges = self.hull_edges()
        A, B = self.corners[0][0], self.corners[-1][1]
        pts = []
        for u in range(A + 1):
            for v in range(B + 1):
                if all(al * (u + 1) + be * (v + 1) > ga for (al, be, ga) in edges):
                    pts.append((u, v))
        if not pts:
            raise InputError("adjoint has no lattice points below the corner box")
        return MonomialStaircase(pts)

    # -- Hilbert-Burch -------------------------------------------------

    def hilbert_burch(self):
        """The n x (n-1) bidiagonal matrix of consecutive syzygies.

        Column i carries y^{b_{i+1}-b_i} at row i and -x^{a_i-a_{i+1}} at
        row i+1; its maximal minors regenerate the staircase (verified on
        construction).
        """
        self._require_m_primary()
        cs = self.corners
        n = len(cs)
        entries = [[Poly.zero() for _ in range(n - 1)] for _ in range(n)]
        for i in range(n - 1):
            (a1, b1), (a2, b2) = cs[i], cs[i + 1]
            entries[i][i] = Poly.monomial(0, b2 - b1)
            entries[i + 1][i] = -Poly.monomial(a1 - a2, 0)
        mat = PolyMatrix(entries, rows=n, cols=n - 1)
        regenerated = set()
        for m in mat.minors(n - 1):
            ((a, b),) = m.terms.keys()
            regenerated.add((a, b))
        if _minimalize(regenerated) != list(cs):
            raise AssertionError("Hilbert-Burch round-trip failed")
        return mat

    def __eq__(self, other):
        return isinstance(other, MonomialStaircase) and self.corners == other.corners

    def __hash__(self):
        return hash(self.corners)

    def __le__(self, other):
        """Containment of ideals (self inside other)."""
        return all(other.contains(a, b) for (a, b) in self.corners)

    def __repr__(self):
        return "[" + ",".join(f"({a},{b})" for (a, b) in self.corners) + "]"


def staircase_product(s1, s2):
    return MonomialStaircase(
        [(a1 + a2, b1 + b2) for (a1, b1) in s1.corners for (a2, b2) in s2.corners]
    )


def staircase_from_polys(gens):
    """Staircase of a monomial ideal given by (monomial) generators, or
    None when some generator is not a monomial."""
    pairs = []
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_monomial():
            return None
        ((a, b),) = g.terms.keys()
        pairs.append((a, b))
    if not pairs:
        return None
    return MonomialStaircase(pairs)


def random_ic_ideal(order, colength_bound, seed, max_tries=400):
    """Uniform-ish integrally closed m-primary staircase with the given
    order and colength at most the bound.  Deterministic in the seed."""
    if order < 1:
        raise InputError("order must be >= 1")
    rng = random.Random(str(("ic-ideal", order, colength_bound, seed)))
    for _ in range(max_tries):
        hi = max(order + 1, min(colength_bound, 3 * order + 4))
        A = rng.randint(order, hi)
        B = rng.randint(order, hi)
        pairs = [(A, 0), (0, B)]
        # pin the order: some corner of total degree exactly `order`
        k = rng.randint(0, order)
        pairs.append((k, order - k))
        for _ in range(rng.randint(0, 3)):
            a = rng.randint(0, A)
            b = rng.randint(0, B)
            if a + b >= order:
                pairs.append((a, b))
        try:
            s = MonomialStaircase(pairs).closure()
        except InputError:
            continue
        if s.order() == order and s.colength() <= colength_bound:
            return s
    raise InputError(
        f"could not sample an integrally closed staircase with order {order} "
        f"and colength <= {colength_bound}"
    )

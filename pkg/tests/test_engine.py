import pytest

from brmult import ExceedsCapError, InputError, Poly, parse_poly
from brmult.engine import TruncCtx, certified_colength
from brmult.corpus import random_staircase


def test_trunc_ctx_dimensions():
    ctx = TruncCtx(5)
    assert ctx.dimension == 15
    assert ctx.monomials[0] == (0, 0)
    assert all(a + b < 5 for (a, b) in ctx.monomials)
    assert TruncCtx(5) is ctx  # cached


def test_colength_of_maximal_ideal_powers():
    # lambda(R/m^k) = k(k+1)/2
    for k in range(1, 6):
        gens = [(Poly.monomial(a, k - a),) for a in range(k + 1)]
        q = certified_colength(gens, ambient_rank=1)
        assert q.length == k * (k + 1) // 2


def test_colength_agrees_with_staircase_on_100_random_ideals():
    """Dual-engine agreement: truncated linear algebra versus the
    combinatorial lattice-point count."""
    for i in range(100):
        s = random_staircase(i, colength_bound=30)
        q = certified_colength([(g,) for g in s.gens()], ambient_rank=1)
        assert q.length == s.colength(), s


def test_certification_degree_is_sound():
    """At the certifying degree, every monomial of degree N-1 must be a
    member; memberships below it must be decided correctly."""
    s = random_staircase(3, colength_bound=25)
    q = certified_colength([(g,) for g in s.gens()], ambient_rank=1)
    N = q.certified_at
    for b in range(N):
        assert q.contains((Poly.monomial(N - 1 - b, b),))
    for a in range(4):
        for b in range(4):
            assert q.contains((Poly.monomial(a, b),)) == s.contains(a, b)


def test_membership_handles_polynomials():
    gens = [(parse_poly("x^2 + y^3"),), (parse_poly("x*y"),), (parse_poly("y^4"),)]
    q = certified_colength(gens, ambient_rank=1)
    f = parse_poly("x^2 + y^3") * parse_poly("x + 7*y")
    assert q.contains((f,))
    assert not q.contains((parse_poly("x^2"),))


def test_ambient_rank_two():
    x, y = Poly.monomial(1, 0), Poly.monomial(0, 1)
    z = Poly.zero()
    gens = [(x, z), (y, z), (z, x), (z, y)]
    q = certified_colength(gens, ambient_rank=2)
    assert q.length == 2  # (R/m)^2


def test_non_primary_input_exceeds_cap():
    with pytest.raises(ExceedsCapError):
        certified_colength([(Poly.monomial(1, 0),)], ambient_rank=1, cap=12)


def test_no_generators_rejected():
    with pytest.raises(InputError):
        certified_colength([], ambient_rank=1)
    with pytest.raises(InputError):
        certified_colength([(Poly.zero(),)], ambient_rank=1)

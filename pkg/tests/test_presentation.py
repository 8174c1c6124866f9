import pytest

from brmult import (
    Ideal,
    MonomialStaircase,
    PreconditionError,
    SubmoduleOfFree,
    br_multiplicity,
    colength_value,
    direct_sum,
    equals,
    family_Mabc,
    fitt_r1,
    hs_multiplicity,
    keylem_check,
    minimal_reduction,
    minimalize_gens,
    module_of_ideal,
    presentation,
    psi,
    psi_inverse,
    reduction_first_presentation,
)
from brmult.corpus import psi_corpus, random_staircase
from brmult.ideals import product
from brmult.modules import colength_FM, min_gens
from brmult.poly import Poly, PolyMatrix, parse_poly
from brmult.presentation import adjoint_via_presentation


def test_presentation_shape_and_annihilation():
    I = Ideal.parse("x^3, x*y, y^2")
    M = module_of_ideal(I)
    pres = presentation(M)
    A = pres.A
    assert A.rows == 3 and A.cols == 2
    for c in range(A.cols):
        total = Poly.zero()
        for j in range(A.rows):
            total = total + A.entry(j, c) * M.column(j)[0]
        assert total.is_zero()
        for j in range(A.rows):
            assert A.entry(j, c).constant_term() == 0


def test_presentation_requires_minimal_generators():
    M = module_of_ideal(Ideal.parse("x, y, x + y"))
    with pytest.raises(PreconditionError):
        presentation(M)


def test_presentation_minors_match_hilbert_burch():
    # at every minor size the two presentations define equal ideals
    for i in range(8):
        s = random_staircase(900 + i, colength_bound=16)
        M = module_of_ideal(s.to_ideal())
        A = presentation(M).A
        H = s.hilbert_burch()
        n = A.rows
        for k in range(1, n):
            IA = Ideal([m for m in A.minors(k) if not m.is_zero()])
            IH = Ideal([m for m in H.minors(k) if not m.is_zero()])
            assert equals(IA, IH), (s, k)


def test_mabc_presentation_matches_reference_matrix():
    a, b, c = 2, 4, 3
    M, N = family_Mabc(a, b, c)
    cert = minimal_reduction(M, seed=0)
    pres = reduction_first_presentation(M, cert)
    A = pres.A
    assert A.rows == 4 and A.cols == 2
    ref = PolyMatrix(
        [
            [Poly.zero(), parse_poly("x^3*y^4")],
            [-parse_poly("y^3"), Poly.zero()],
            [Poly.zero(), -parse_poly("x^5")],
            [parse_poly("x"), -parse_poly("y^3")],
        ]
    )
    for k in (1, 2):
        IA = Ideal([m for m in A.minors(k) if not m.is_zero()])
        IR = Ideal([m for m in ref.minors(k) if not m.is_zero()])
        assert equals(IA, IR), k


def test_keylem_mabc():
    M, _ = family_Mabc(2, 4, 3)
    cert = minimal_reduction(M, seed=0)
    lhs, rhs, equal = keylem_check(M, cert)
    assert (lhs, rhs, equal) == (3, 3, True)
    # lambda(R/(x^{b-c}, y^{a+b-c})) = lambda(R/(x, y^3)) = 3
    assert colength_value(Ideal.parse("x, y^3")) == 3


def test_keylem_self_reduction():
    M = direct_sum(module_of_ideal(Ideal.parse("x, y^2")), module_of_ideal(Ideal.parse("y, x^2")))
    N = minimal_reduction(M, seed=3).module
    lhs, rhs, equal = keylem_check(N, minimal_reduction(N, seed=4))
    assert (lhs, rhs, equal) == (0, 0, True)


def test_keylem_on_corpus():
    count = 0
    for i in range(25):
        s = random_staircase(1100 + i, colength_bound=14)
        M = minimalize_gens(module_of_ideal(s.to_ideal()))
        cert = minimal_reduction(M, seed=i)
        lhs, rhs, equal = keylem_check(M, cert)
        if equal is None:
            continue
        assert equal, s
        count += 1
    assert count >= 20


def test_adjoint_via_presentation_matches_polyhedral():
    checked = 0
    for i in range(30):
        s = random_staircase(1300 + i, colength_bound=25).closure()
        I = s.to_ideal()
        adj_pres = adjoint_via_presentation(I)
        assert equals(adj_pres, s.adjoint().to_ideal()), s
        checked += 1
    assert checked >= 25


def test_adjoint_refuses_non_closed():
    with pytest.raises(PreconditionError):
        adjoint_via_presentation(Ideal.parse("x^2, y^2"))
    with pytest.raises(PreconditionError):
        adjoint_via_presentation(module_of_ideal(Ideal.parse("x^2, y^2")))


def test_module_adjoint_two_forms():
    # module adjoints: I_{n-r-1}(A) = I_{n-r-1}(B), equal to
    # the polyhedral adjoint of the product ideal
    checked = 0
    for i in range(12):
        s1 = random_staircase(1500 + 2 * i, colength_bound=8).closure()
        s2 = random_staircase(1501 + 2 * i, colength_bound=8).closure()
        M = direct_sum(module_of_ideal(s1.to_ideal()), module_of_ideal(s2.to_ideal()))
        adj = adjoint_via_presentation(M, seed=i)
        oracle = product(s1.to_ideal(), s2.to_ideal()).staircase().adjoint()
        assert equals(adj, oracle.to_ideal()), (s1, s2)
        checked += 1
    assert checked >= 10


def test_fitt_r1_mabc():
    M, _ = family_Mabc(2, 4, 3)
    F = fitt_r1(M)
    assert equals(F, Ideal.parse("x, y^3"))
    assert colength_value(F) == 3


def test_fitt_r1_rank_one_is_adj_candidate():
    s = MonomialStaircase([(2, 0), (1, 1), (0, 2)])
    F = fitt_r1(module_of_ideal(s.to_ideal()))
    assert equals(F, Ideal.parse("x, y"))


def test_psi_postconditions_and_inverse():
    for i, M in enumerate(psi_corpus(4, seed=21)):
        K = psi(M, seed=i)
        r = M.rank
        assert K.rank == r and K.ngens == 2 * r
        assert equals(K.max_minors_ideal(), M.max_minors_ideal())
        Mback = psi_inverse(K, seed=i)
        # invariant vector comparison (isomorphism testing is out of scope)
        assert colength_FM(Mback) == colength_FM(M)
        assert min_gens(Mback) == min_gens(M)
        assert br_multiplicity(Mback, seed=i) == br_multiplicity(M, seed=i)
        for k in range(1, r + 1):
            assert colength_value(Mback.fitting_ideal(k)) == colength_value(
                M.fitting_ideal(k)
            )


def test_psi_requires_closed_module():
    M, _ = family_Mabc(2, 4, 3)
    with pytest.raises(PreconditionError):
        psi(M)


def test_psi_rank_one():
    # r = 1: two-generated order-one ideals pair with contracted ideals
    I = Ideal.parse("x, y^3")
    K = psi(module_of_ideal(I))
    assert K.rank == 1 and K.ngens == 2
    assert equals(K.max_minors_ideal(), I)

import pytest

from brmult import InputError, MonomialStaircase, random_ic_ideal
from brmult.corpus import random_staircase
from brmult.ideals import colength_value, hs_multiplicity
from brmult.monomial import staircase_from_polys, staircase_product
from brmult.poly import Poly, parse_poly


def test_parse_and_minimalize():
    s = MonomialStaircase.parse("[(6,0),(5,3),(4,4),(0,6),(6,2)]")
    assert s.corners == ((6, 0), (5, 3), (4, 4), (0, 6))


def test_colength_known_values():
    assert MonomialStaircase([(1, 0), (0, 1)]).colength() == 1
    assert MonomialStaircase([(2, 0), (1, 1), (0, 2)]).colength() == 3
    assert MonomialStaircase([(2, 0), (0, 3)]).colength() == 6


def test_colength_requires_m_primary():
    with pytest.raises(InputError):
        MonomialStaircase([(1, 0)]).colength()


def test_order():
    assert MonomialStaircase([(3, 0), (1, 1), (0, 4)]).order() == 2


def test_closure_is_idempotent_extensive_and_monotone():
    for i in range(40):
        s = random_staircase(i, colength_bound=30)
        c = s.closure()
        assert s <= c
        assert c.closure() == c
        assert c.colength() <= s.colength()


def test_closure_known_example():
    s = MonomialStaircase([(4, 0), (0, 4)])
    # hull edge u + v >= 4
    assert s.closure().corners == ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))


def test_adjoint_of_maximal_ideal_powers():
    m = MonomialStaircase([(1, 0), (0, 1)])
    assert m.adjoint().corners == ((0, 0),)
    m2 = MonomialStaircase([(2, 0), (1, 1), (0, 2)])
    assert m2.adjoint().corners == ((1, 0), (0, 1))


def test_adjoint_closure_invariant():
    # adj(I) = adj(closure(I)) on 25 random staircases
    for i in range(25):
        s = random_staircase(100 + i, colength_bound=30)
        assert s.adjoint() == s.closure().adjoint()


def test_adjoint_length_formula_on_closed_staircases():
    # lambda(R/adj(I)) = e(I) - lambda(R/I) for integrally closed I
    for i in range(20):
        s = random_ic_ideal(1 + i % 3, 25, seed=i)
        I = s.to_ideal()
        e = hs_multiplicity(I, seed=i)
        lam = colength_value(I)
        assert s.adjoint().colength() == e - lam


def test_hilbert_burch_shape_and_roundtrip():
    s = MonomialStaircase([(3, 0), (1, 2), (0, 5)])
    A = s.hilbert_burch()
    assert A.rows == 3 and A.cols == 2
    regenerated = staircase_from_polys([m for m in A.minors(2)])
    assert regenerated == s


def test_staircase_product():
    s1 = MonomialStaircase([(1, 0), (0, 2)])
    s2 = MonomialStaircase([(2, 0), (0, 1)])
    prod = staircase_product(s1, s2)
    assert prod.colength() == len(
        [
            (u, v)
            for u in range(10)
            for v in range(10)
            if not prod.contains(u, v)
        ]
    )


def test_staircase_from_polys():
    assert staircase_from_polys([parse_poly("x^2"), parse_poly("y^2")]).corners == (
        (2, 0),
        (0, 2),
    )
    assert staircase_from_polys([parse_poly("x + y")]) is None
    assert staircase_from_polys([Poly.zero()]) is None


def test_random_ic_ideal_contract():
    for i in range(30):
        order = 1 + i % 4
        s = random_ic_ideal(order, 30, seed=i)
        assert s.is_integrally_closed()
        assert s.order() == order
        assert s.colength() <= 30
    assert random_ic_ideal(2, 30, seed=5) == random_ic_ideal(2, 30, seed=5)

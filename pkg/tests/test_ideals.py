import random

import pytest

from brmult import (
    ExceedsCapError,
    GenericityError,
    Ideal,
    InputError,
    PreconditionError,
    colength,
    colength_value,
    contains,
    equals,
    hs_multiplicity,
    is_reduction,
    mixed_multiplicity,
    power,
    product,
)
from brmult.corpus import random_staircase
from brmult.poly import Poly, parse_poly


def test_parse_and_basic_invariants():
    I = Ideal.parse("x^2, x*y, y^2")
    assert colength_value(I) == 3
    assert I.order() == 2
    assert I.is_monomial()


def test_colength_exceeds_cap_result():
    res = colength(Ideal.parse("x^3"), cap=10)
    assert res.exceeds_cap and res.value is None


def test_empty_ideal_rejected():
    with pytest.raises(InputError):
        Ideal([Poly.zero()])


def test_equals_is_representation_independent():
    I = Ideal.parse("x^2, y^2")
    J = Ideal.parse("y^2, x^2, x^2 + y^2, x^3")
    assert equals(I, J)
    assert not equals(I, Ideal.parse("x^2, x*y, y^2"))


def test_contains_mixed_generators():
    I = Ideal.parse("x^2 + y^3, y^4")
    assert contains(I, parse_poly("x^2 + y^3"))
    assert contains(I, parse_poly("x^3 + x*y^3 + y^4"))
    assert not contains(I, parse_poly("x^2"))
    assert contains(I, Poly.zero())


def test_product_and_power_against_staircase():
    I = Ideal.parse("x^2, y^3")
    J = Ideal.parse("x, y^2")
    assert colength_value(product(I, J)) == product(I, J).staircase().colength()
    assert equals(power(I, 2), Ideal.parse("x^4, x^2*y^3, y^6"))


def test_hs_multiplicity_known_values():
    # e((x^a, y^b)) = ab; e(m^k) = k^2
    assert hs_multiplicity(Ideal.parse("x, y")) == 1
    assert hs_multiplicity(Ideal.parse("x^3, y^5")) == 15
    assert hs_multiplicity(Ideal.parse("x^2, x*y, y^2")) == 4
    assert hs_multiplicity(Ideal.parse("x^2 + y^3, x*y^2")) == colength_value(
        Ideal.parse("x^2 + y^3, x*y^2")
    )


def test_hs_multiplicity_monomial_equals_newton_volume():
    for i in range(15):
        s = random_staircase(400 + i, colength_bound=20)
        # e(I) = e(closure(I)) = lambda of the closed staircase's reduction:
        # for integrally closed monomial ideals e = 2 * area under the hull,
        # computed here through the independent difference route
        e = hs_multiplicity(s.to_ideal(), seed=i, cross_check=True)
        assert e == hs_multiplicity(s.closure().to_ideal(), seed=i)


def test_is_reduction():
    I = Ideal.parse("x^2, x*y, y^2")
    J = Ideal.parse("x^2, y^2")
    assert is_reduction(J, I)
    assert not is_reduction(Ideal.parse("x^2, y^2"), Ideal.parse("x, y"))
    with pytest.raises(PreconditionError):
        is_reduction(Ideal.parse("x"), Ideal.parse("x^2, y^2"))


def test_reduction_not_containment_confusion():
    # J^2 != (x^3, y^6) J even though (x^3, y^6) is a reduction of J
    J = Ideal.parse("x^3, x*y^4, y^6")
    K = Ideal.parse("x^3, y^6")
    assert is_reduction(K, J)
    assert not equals(product(J, J), product(K, J))


def test_mixed_multiplicity_known_values():
    m = Ideal.parse("x, y")
    assert mixed_multiplicity(m, m) == 1
    # e_1((x,y^b) | (x,y^c)) = min(b,c) for these closed ideals: check via
    # the length formula
    I = Ideal.parse("x, y^2")
    J = Ideal.parse("x, y^3")
    lhs = mixed_multiplicity(I, J)
    rhs = (
        colength_value(product(I, J)) - colength_value(I) - colength_value(J)
    )
    assert lhs == rhs == 2


def test_order_is_a_valuation_on_random_pairs():
    rng = random.Random(17)
    from tests_util import random_poly  # local helper

    for _ in range(100):
        f, g = random_poly(rng), random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).order() == f.order() + g.order()
        if not (f + g).is_zero():
            assert (f + g).order() >= min(f.order(), g.order())

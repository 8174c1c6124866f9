import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brmult import Poly, PolyMatrix, PolyParseError, parse_poly
from brmult.poly import format_poly


def random_poly(rng, max_exp=4, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[(rng.randint(0, max_exp), rng.randint(0, max_exp))] = rng.randint(-9, 9)
    return Poly(terms)


def test_parse_basic():
    f = parse_poly("x^2 + 3*x*y - y^3")
    assert f.terms == {(2, 0): 1, (1, 1): 3, (0, 3): Poly.const(-1).terms[(0, 0)]}


def test_parse_signs_and_constants():
    assert parse_poly("-x + x").is_zero()
    assert parse_poly("7").constant_term() == 7
    assert parse_poly("2^3") == Poly.const(8)


@pytest.mark.parametrize(
    "text,pos",
    [("x +", 3), ("x^y", 2), ("", 0), ("x x", 2), ("z", 0), ("x^", 2)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as exc:
        parse_poly(text)
    assert exc.value.position == pos


def test_exponent_cap():
    with pytest.raises(PolyParseError):
        parse_poly("x^100000")


def test_format_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        f = random_poly(rng)
        assert parse_poly(format_poly(f)) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_ring_axioms(a, b, c):
    f = Poly({(1, 0): a, (0, 2): b})
    g = Poly({(2, 1): c, (0, 0): a})
    h = Poly({(1, 1): b})
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f + (-f) == Poly.zero()
    assert (f * g) * h == f * (g * h)


def test_order_and_degree():
    f = parse_poly("x^2*y + y^5")
    assert f.order() == 3
    assert f.degree() == 5
    assert Poly.zero().order() == float("inf")
    assert Poly.zero().degree() == -1


def test_pow_matches_repeated_mul():
    f = parse_poly("x + y^2")
    g = Poly.const(1)
    for _ in range(5):
        g = g * f
    assert f**5 == g


def test_truncate():
    f = parse_poly("1 + x*y + x^3*y^3")
    assert f.truncate(3) == parse_poly("1 + x*y")


def _brute_det3(m):
    import itertools

    total = Poly.zero()
    for perm in itertools.permutations(range(3)):
        sign = 1
        p = list(perm)
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    sign = -sign
        term = Poly.const(sign)
        for i in range(3):
            term = term * m.entry(i, perm[i])
        total = total + term
    return total


def test_matrix_minors_vs_permanent_expansion():
    rng = random.Random(11)
    for _ in range(10):
        m = PolyMatrix(
            [[random_poly(rng, max_exp=2, max_terms=2) for _ in range(3)] for _ in range(3)]
        )
        assert m.minor((0, 1, 2), (0, 1, 2)) == _brute_det3(m)


def test_matrix_minors_counts_and_k0():
    m = PolyMatrix([[Poly.monomial(1, 0), Poly.monomial(0, 1)]] * 3)
    assert m.minors(0) == [Poly.const(1)]
    assert len(m.minors(1)) == 6
    assert len(m.minors(2)) == 3


def test_transpose_and_delete_rows():
    m = PolyMatrix([[Poly.const(i * 3 + j) for j in range(3)] for i in range(2)])
    t = m.transpose()
    assert t.rows == 3 and t.cols == 2
    assert t.entry(2, 1) == m.entry(1, 2)
    d = m.delete_rows([0])
    assert d.rows == 1 and d.entry(0, 0) == m.entry(1, 0)

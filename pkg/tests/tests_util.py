"""Small shared helpers for the test suite."""

from brmult.poly import Poly


def random_poly(rng, max_exp=5, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[(rng.randint(0, max_exp), rng.randint(0, max_exp))] = rng.randint(1, 9)
    return Poly(terms)

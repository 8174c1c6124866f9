"""Session-level coefficient field.

All arithmetic in the library is exact.  Coefficients live either in a
prime field F_p (default p = 2^31 - 1) or in the rationals (characteristic
0, kept for paranoia runs).  The characteristic is a session setting: the
CLI sets it once at startup and the test suite runs in the default prime
field.  A large prime makes genericity failures of random choices
vanishingly rare while keeping the linear algebra in machine words.
"""

from fractions import Fraction

DEFAULT_PRIME = 2147483647  # 2^31 - 1, Mersenne prime
MIN_PRIME = 1 << 20

_char = DEFAULT_PRIME


def _is_prime(n):
    # deterministic Miller-Rabin, valid for n < 3.3 * 10^24
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def set_char(p):
    """Set the session characteristic.  0 selects the rationals."""
    global _char
    if p == 0:
        _char = 0
        return
    if p < MIN_PRIME:
        raise ValueError(f"prime must exceed 2^20, got {p}")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    _char = p


def get_char():
    return _char


def normalize(c):
    """Canonical representative of a coefficient in the session field."""
    p = _char
    if p:
        return int(c) % p
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def neg(c):
    p = _char
    return (p - c) % p if p else -c


def inv(c):
    p = _char
    if p:
        return pow(c, -1, p)
    return Fraction(1) / c


def mul(a, b):
    p = _char
    return a * b % p if p else normalize(a * b)


def rand_scalar(rng):
    """Nonzero random scalar, for generic combinations."""
    p = _char
    if p:
        return rng.randrange(1, p)
    return rng.randrange(1, 1 << 30)

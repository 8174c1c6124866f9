"""Exact bivariate polynomials in x, y and matrices of them.

A polynomial is a sparse map from exponent pairs to nonzero coefficients
in the session field; the canonical form is unique.  The m-adic order of
an element of the local ring is the minimal total degree of a term.
"""

from . import field
from .errors import PolyParseError, InputError

EXP_CAP = 10**4

_INF = float("inf")


class Poly:
    """Sparse exact polynomial sum of c_{ab} x^a y^b."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None, _canonical=False):
        if terms is None:
            terms = {}
        if not _canonical:
            clean = {}
            for (a, b), c in terms.items():
                c = field.normalize(c)
                if c:
                    clean[(a, b)] = c
            terms = clean
        self.terms = terms
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return Poly({}, _canonical=True)

    @staticmethod
    def monomial(a, b, c=1):
        if a < 0 or b < 0:
            raise InputError("negative exponent")
        return Poly({(a, b): c})

    @staticmethod
    def const(c):
        return Poly({(0, 0): c})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def order(self):
        """m-adic order; +inf for the zero polynomial."""
        if not self.terms:
            return _INF
        return min(a + b for a, b in self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(a + b for a, b in self.terms)

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        t = dict(self.terms)
        p = field.get_char()
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            s = s % p if p else s
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return Poly(t, _canonical=True)

    def __neg__(self):
        return Poly({k: field.neg(c) for k, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return Poly.zero()
        p = field.get_char()
        t = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = t.get(k, 0) + c1 * c2
                s = s % p if p else s
                if s:
                    t[k] = s
                else:
                    t.pop(k, None)
        return Poly(t, _canonical=True)

    def scale(self, c):
        c = field.normalize(c)
        if not c:
            return Poly.zero()
        return Poly({k: field.mul(v, c) for k, v in self.terms.items()}, _canonical=True)

    def shift(self, a, b):
        """Multiply by the monomial x^a y^b."""
        return Poly({(u + a, v + b): c for (u, v), c in self.terms.items()}, _canonical=True)

    def __pow__(self, n):
        if n < 0:
            raise InputError("negative power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def truncate(self, n):
        """Drop all terms of total degree >= n."""
        return Poly({k: c for k, c in self.terms.items() if k[0] + k[1] < n}, _canonical=True)

    def evaluate(self, x0, y0):
        """Exact evaluation in the session field."""
        p = field.get_char()
        acc = 0
        for (a, b), c in self.terms.items():
            if p:
                acc = (acc + c * pow(x0, a, p) * pow(y0, b, p)) % p
            else:
                acc += c * x0**a * y0**b
        return field.normalize(acc)

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


# -- text format -------------------------------------------------------


def format_poly(f):
    if not f.terms:
        return "0"
    parts = []
    for (a, b) in sorted(f.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
        c = f.terms[(a, b)]
        factors = []
        if a:
            factors.append("x" if a == 1 else f"x^{a}")
        if b:
            factors.append("y" if b == 1 else f"y^{b}")
        if not factors or c != 1:
            factors.insert(0, str(c))
        parts.append("*".join(factors))
    return " + ".join(parts).replace("+ -", "- ")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch in "xy":
            tokens.append(("var", ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_poly(text):
    """Parse the polynomial grammar: signed integer coefficients,
    variables x and y, operators + - * ^; juxtaposition is forbidden.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        kind, val, at = take() if pos < len(tokens) else ("eof", None, len(text))
        if kind == "int":
            base = Poly.const(val)
        elif kind == "var":
            base = Poly.monomial(1, 0) if val == "x" else Poly.monomial(0, 1)
        else:
            raise PolyParseError("expected a number or variable", at)
        if peek() == "^":
            take()
            kind, e, at = take() if pos < len(tokens) else ("eof", None, len(text))
            if kind != "int":
                raise PolyParseError("expected an integer exponent", at)
            if e > EXP_CAP:
                raise PolyParseError(f"exponent exceeds cap {EXP_CAP}", at)
            base = base**e
        return base

    def term():
        f = atom()
        while peek() == "*":
            take()
            f = f * atom()
        return f

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            if take()[0] == "-":
                sign = -1
        f = term().scale(sign)
        while peek() in ("+", "-"):
            op = take()[0]
            g = term()
            f = f + g if op == "+" else f - g
        return f

    if not tokens:
        raise PolyParseError("empty input", 0)
    out = expr()
    if pos != len(tokens):
        raise PolyParseError("trailing input", tokens[pos][2])
    return out


# -- matrices ----------------------------------------------------------


class PolyMatrix:
    """Dense matrix of Polys with memoized minor expansion.

    Minor computation caches determinants of (row-subset, column-subset)
    pairs so that Fitting-ideal computations reuse overlapping minors.
    """

    __slots__ = ("rows", "cols", "entries", "_det_cache")

    def __init__(self, entries, rows=None, cols=None):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries) if rows is None else rows
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        for r in self.entries:
            if len(r) != self.cols:
                raise InputError("ragged matrix")
        self._det_cache = {}

    def entry(self, i, j):
        return self.entries[i][j]

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self):
        return PolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            rows=self.cols,
            cols=self.rows,
        )

    def delete_rows(self, drop):
        keep = [i for i in range(self.rows) if i not in set(drop)]
        return PolyMatrix([self.entries[i] for i in keep], rows=len(keep), cols=self.cols)

    def _det(self, rows, cols):
        # Laplace expansion along the first row of the submatrix, memoized
        if not rows:
            return Poly.const(1)
        key = (rows, cols)
        cached = self._det_cache.get(key)
        if cached is not None:
            return cached
        if len(rows) == 1:
            d = self.entries[rows[0]][cols[0]]
        else:
            d = Poly.zero()
            i = rows[0]
            rest = rows[1:]
            for pos, j in enumerate(cols):
                e = self.entries[i][j]
                if e.is_zero():
                    continue
                sub = self._det(rest, cols[:pos] + cols[pos + 1 :])
                contrib = e * sub
                d = d + contrib if pos % 2 == 0 else d - contrib
        self._det_cache[key] = d
        return d

    def minor(self, rows, cols):
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise InputError("minor needs equal row and column counts")
        return self._det(rows, cols)

    def minors(self, k):
        """All k x k minors, in lexicographic row/column-subset order.

        k = 0 yields the single constant 1 (empty-minor convention).
        """
        from itertools import combinations

        if k == 0:
            return [Poly.const(1)]
        if k > min(self.rows, self.cols):
            raise InputError(f"minor size {k} exceeds matrix shape {self.rows}x{self.cols}")
        out = []
        for rs in combinations(range(self.rows), k):
            for cs in combinations(range(self.cols), k):
                out.append(self._det(rs, cs))
        return out

    def evaluate(self, x0, y0):
        """Scalar matrix of exact evaluations, as nested lists."""
        return [[e.evaluate(x0, y0) for e in row] for row in self.entries]

    def max_degree(self):
        d = 0
        for row in self.entries:
            for e in row:
                d = max(d, e.degree())
        return d

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

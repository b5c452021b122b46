"""Noncommutative polynomials in x_1..x_n with exact rational coefficients.

Words are tuples of variable indices in 1..n; the empty tuple is the unit.
Polynomials are sparse maps word -> Fraction.  All values are immutable
after construction and all operations are pure.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .exactrank import SparseVector


class AmbientMismatch(ValueError):
    """Operands live over different numbers of variables."""


def check_word(letters, n):
    for a in letters:
        if not 1 <= a <= n:
            raise ValueError(f"letter {a} outside 1..{n}")


def word_concat(u, v):
    """Concatenation of two words (the monomial product)."""
    return tuple(u) + tuple(v)


def word_index(w, n):
    """Position of a length-l word in the base-n ordering of all such words."""
    idx = 0
    for a in w:
        idx = idx * n + (a - 1)
    return idx


def word_from_index(idx, n, length):
    letters = []
    for _ in range(length):
        idx, r = divmod(idx, n)
        letters.append(r + 1)
    return tuple(reversed(letters))


def words_of_length(n, length):
    """All words of a given length, in base-n index order."""
    return itertools.product(range(1, n + 1), repeat=length)


def multidegree(w, n):
    """Exponent vector counting occurrences of each variable."""
    alpha = [0] * n
    for a in w:
        alpha[a - 1] += 1
    return tuple(alpha)


def cyclic_canonical(w):
    """Least cyclic rotation of a word; canonical representative of its
    necklace class.  The empty word is its own class."""
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


class NCPolynomial:
    """Sparse noncommutative polynomial over the rationals."""

    __slots__ = ("terms", "n")

    def __init__(self, terms, n):
        self.terms = {w: c for w, c in terms.items() if c}
        self.n = n

    @classmethod
    def zero(cls, n):
        return cls({}, n)

    @classmethod
    def one(cls, n):
        return cls({(): Fraction(1)}, n)

    @classmethod
    def variable(cls, i, n):
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        return cls({(i,): Fraction(1)}, n)

    @classmethod
    def from_word(cls, w, n, coeff=1):
        check_word(w, n)
        return cls({tuple(w): Fraction(coeff)}, n)

    def _check(self, other):
        if self.n != other.n:
            raise AmbientMismatch(f"{self.n} != {other.n}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NCPolynomial(terms, self.n)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) - c
        return NCPolynomial(terms, self.n)

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self.terms.items()}, self.n)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            return poly_mul(self, other)
        return NCPolynomial({w: c * other for w, c in self.terms.items()}, self.n)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, NCPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def degree(self):
        """Word length, for homogeneous polynomials."""
        if not self.terms:
            return None
        (length,) = {len(w) for w in self.terms}
        return length

    def multidegrees(self):
        """Multidegree -> coefficient-sum support map (for grading checks)."""
        out = {}
        for w in self.terms:
            out.setdefault(multidegree(w, self.n), []).append(w)
        return out

    def sorted_terms(self):
        """Terms sorted by (length, base-n index), for deterministic output."""
        return sorted(
            self.terms.items(), key=lambda t: (len(t[0]), word_index(t[0], self.n))
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            mono = "".join(f"x{a}" for a in w) or "1"
            bits.append(f"{c}*{mono}")
        return " + ".join(bits)


def poly_mul(p, q):
    """Product in the free algebra: bilinear extension of concatenation."""
    p._check(q)
    terms = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            terms[w] = terms.get(w, 0) + a * b
    return NCPolynomial(terms, p.n)


def lie_bracket(p, q):
    """[p, q] = pq - qp."""
    return poly_mul(p, q) - poly_mul(q, p)


def vectorize(p, length):
    """Coordinates of a homogeneous polynomial in the degree-l word basis.

    Indexing is the base-n encoding of the letter sequence; round-trips
    with word_from_index."""
    for w in p.terms:
        if len(w) != length:
            raise ValueError(f"term of length {len(w)}, expected {length}")
    entries = {word_index(w, p.n): c for w, c in p.terms.items()}
    return SparseVector(entries, p.n**length)


def devectorize(vec, n, length):
    """Inverse of vectorize."""
    terms = {word_from_index(i, n, length): c for i, c in vec.entries.items()}
    return NCPolynomial(terms, n)

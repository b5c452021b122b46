from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freelcs.lcs import necklace_count
from freelcs.ncpoly import (
    AmbientMismatch,
    NCPolynomial,
    cyclic_canonical,
    devectorize,
    lie_bracket,
    multidegree,
    poly_mul,
    vectorize,
    word_concat,
    word_from_index,
    word_index,
    words_of_length,
)


def x(i, n=2):
    return NCPolynomial.variable(i, n)


def test_word_index_roundtrip():
    for n in (1, 2, 3):
        for length in range(5):
            for w in words_of_length(n, length):
                assert word_from_index(word_index(w, n), n, length) == w


def test_word_index_order_matches_enumeration():
    words = list(words_of_length(3, 3))
    assert [word_index(w, 3) for w in words] == list(range(27))


def test_concat_and_multidegree():
    w = word_concat((1, 2), (2, 3))
    assert w == (1, 2, 2, 3)
    assert multidegree(w, 3) == (1, 2, 1)


def test_basic_arithmetic():
    p = x(1) * x(2) - x(2) * x(1)
    assert p == lie_bracket(x(1), x(2))
    assert (p - p).is_zero()
    assert (2 * p).terms[(1, 2)] == Fraction(2)


def test_mul_is_concatenation():
    p = NCPolynomial.from_word((1, 2), 2)
    q = NCPolynomial.from_word((2,), 2)
    assert poly_mul(p, q) == NCPolynomial.from_word((1, 2, 2), 2)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        x(1, 2) + x(1, 3)


def test_homogeneous_degree():
    p = x(1) * x(2) + x(2) * x(2)
    assert p.is_homogeneous()
    assert p.degree() == 2
    assert not (p + x(1)).is_homogeneous()


def test_vectorize_roundtrip():
    p = lie_bracket(x(1), x(1) * x(2))
    v = vectorize(p, 3)
    assert devectorize(v, 2, 3) == p


def test_cyclic_canonical_rotation_invariance():
    w = (1, 2, 2, 3)
    reps = {cyclic_canonical(w[i:] + w[:i]) for i in range(len(w))}
    assert len(reps) == 1


def test_cyclic_classes_match_necklace_count():
    for n in (2, 3):
        for length in range(1, 7):
            classes = {cyclic_canonical(w) for w in words_of_length(n, length)}
            assert len(classes) == necklace_count(n, length)


words = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, n), min_size=1, max_size=6),
    )
)


def _poly(n, letters):
    return NCPolynomial.from_word(tuple(letters), n)


@settings(max_examples=100, deadline=None)
@given(words, st.data())
def test_bracket_antisymmetry(nw, data):
    n, w1 = nw
    w2 = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=6))
    p, q = _poly(n, w1), _poly(n, w2)
    assert lie_bracket(p, q) == -lie_bracket(q, p)


@settings(max_examples=100, deadline=None)
@given(words, st.data())
def test_jacobi_identity(nw, data):
    n, w1 = nw
    w2 = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=4))
    w3 = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=4))
    p, q, r = _poly(n, w1), _poly(n, w2), _poly(n, w3)
    total = (
        lie_bracket(p, lie_bracket(q, r))
        + lie_bracket(q, lie_bracket(r, p))
        + lie_bracket(r, lie_bracket(p, q))
    )
    assert total.is_zero()


@settings(max_examples=60, deadline=None)
@given(words, st.data())
def test_vectorize_is_linear(nw, data):
    n, w1 = nw
    w2 = data.draw(
        st.lists(st.integers(1, n), min_size=len(w1), max_size=len(w1))
    )
    a = data.draw(st.integers(-5, 5))
    p, q = _poly(n, w1), _poly(n, tuple(w2))
    length = len(w1)
    lhs = vectorize(a * p + q, length)
    rhs = vectorize(p, length)
    combined = {
        i: a * rhs.entries.get(i, 0) + vectorize(q, length).entries.get(i, 0)
        for i in set(rhs.entries) | set(vectorize(q, length).entries)
    }
    assert lhs.entries == {i: c for i, c in combined.items() if c}

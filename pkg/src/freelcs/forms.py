"""Polynomial differential forms on C^n and the quantized product.

A form monomial is x^alpha dx_{s_1} ^ ... ^ dx_{s_m} with S stored strictly
increasing; the permutation sign is absorbed into the coefficient at
construction.  The star product

    w1 * w2 = w1 ^ w2 + (-1)^(deg w1) d(w1) ^ d(w2)

is associative; restricted to even forms it closes, and the algebra map
from the free associative algebra sending each generator to the
coordinate function x_i lands there.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .exactrank import EchelonBasis, SparseVector
from .fields import GF, QQ
from .ncpoly import (
    NCPolynomial,
    lie_bracket,
    poly_mul,
    word_index,
    words_of_length,
)


class OddFormError(ValueError):
    """Operation stated for even forms applied to an odd-degree term."""


@dataclass(frozen=True)
class FormMonomial:
    """x^alpha dx_S; degree = |S|, weight = |alpha| + |S|."""

    alpha: tuple
    ds: tuple

    @property
    def degree(self):
        return len(self.ds)

    @property
    def weight(self):
        return sum(self.alpha) + len(self.ds)

    def __repr__(self):
        poly = "".join(
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(self.alpha)
            if e
        )
        dxs = "^".join(f"dx{s}" for s in self.ds)
        return (poly + ("*" if poly and dxs else "") + dxs) or "1"


def _merge_ds(s1, s2):
    """Sign and merged index tuple for dx_{s1} ^ dx_{s2}; None if repeated."""
    if set(s1) & set(s2):
        return None
    inversions = sum(1 for a in s1 for b in s2 if a > b)
    merged = tuple(sorted(s1 + s2))
    return (-1) ** inversions, merged


class DifferentialForm:
    """Sparse polynomial differential form with exact rational coefficients."""

    __slots__ = ("terms", "n")

    def __init__(self, terms, n):
        self.terms = {m: c for m, c in terms.items() if c}
        self.n = n

    @classmethod
    def zero(cls, n):
        return cls({}, n)

    @classmethod
    def one(cls, n):
        return cls({FormMonomial((0,) * n, ()): Fraction(1)}, n)

    @classmethod
    def coordinate(cls, i, n):
        """The 0-form x_i."""
        alpha = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls({FormMonomial(alpha, ()): Fraction(1)}, n)

    @classmethod
    def d_coordinate(cls, i, n):
        """The 1-form dx_i."""
        return cls({FormMonomial((0,) * n, (i,)): Fraction(1)}, n)

    @classmethod
    def monomial(cls, alpha, ds, n, coeff=1):
        if tuple(ds) != tuple(sorted(set(ds))):
            raise ValueError("ds must be strictly increasing")
        return cls({FormMonomial(tuple(alpha), tuple(ds)): Fraction(coeff)}, n)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return DifferentialForm(terms, self.n)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) - c
        return DifferentialForm(terms, self.n)

    def __neg__(self):
        return DifferentialForm({m: -c for m, c in self.terms.items()}, self.n)

    def __mul__(self, scalar):
        return DifferentialForm(
            {m: c * scalar for m, c in self.terms.items()}, self.n
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, DifferentialForm)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def is_even(self):
        return all(m.degree % 2 == 0 for m in self.terms)

    def degrees(self):
        return {m.degree for m in self.terms}

    def weights(self):
        return {m.weight for m in self.terms}

    def homogeneous_parts(self):
        """Split by form degree."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(m.degree, {})[m] = c
        return {
            deg: DifferentialForm(terms, self.n)
            for deg, terms in sorted(parts.items())
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c}){m}" for m, c in sorted(
                self.terms.items(), key=lambda t: (t[0].ds, t[0].alpha)
            )
        )


def wedge(f, g):
    """Graded-commutative product; weight and degree additive."""
    f._check(g)
    terms = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            merged = _merge_ds(m1.ds, m2.ds)
            if merged is None:
                continue
            sign, ds = merged
            alpha = tuple(a + b for a, b in zip(m1.alpha, m2.alpha))
            m = FormMonomial(alpha, ds)
            terms[m] = terms.get(m, 0) + sign * c1 * c2
    return DifferentialForm(terms, f.n)


def de_rham(f):
    """d: degree +1, weight preserved, d^2 = 0."""
    terms = {}
    for m, c in f.terms.items():
        for i in range(1, f.n + 1):
            e = m.alpha[i - 1]
            if not e or i in m.ds:
                continue
            sign = (-1) ** sum(1 for s in m.ds if s < i)
            alpha = tuple(
                a - 1 if j == i - 1 else a for j, a in enumerate(m.alpha)
            )
            ds = tuple(sorted(m.ds + (i,)))
            out = FormMonomial(alpha, ds)
            terms[out] = terms.get(out, 0) + sign * e * c
    return DifferentialForm(terms, f.n)


def star_product(f, g):
    """w1*w2 = w1^w2 + (-1)^(deg w1) dw1 ^ dw2, extended bilinearly over
    degree-homogeneous parts of w1."""
    f._check(g)
    dg = de_rham(g)
    out = DifferentialForm.zero(f.n)
    for deg, part in f.homogeneous_parts().items():
        out = out + wedge(part, g)
        correction = wedge(de_rham(part), dg)
        out = (out + correction) if deg % 2 == 0 else (out - correction)
    return out


def star_commutator(f, g):
    """w1*w2 - w2*w1 for even forms; equals 2 dw1 ^ dw2 and is closed."""
    if not (f.is_even() and g.is_even()):
        raise OddFormError("star commutator contract stated for even forms")
    return star_product(f, g) - star_product(g, f)


_PHI_CACHE = {}


def phi_word(w, n):
    """Image of a single word under the algebra map into even starred forms:
    the left-to-right star product of its letters."""
    key = (n, tuple(w))
    cached = _PHI_CACHE.get(key)
    if cached is not None:
        return cached
    if not w:
        out = DifferentialForm.one(n)
    else:
        out = star_product(phi_word(w[:-1], n), DifferentialForm.coordinate(w[-1], n))
    _PHI_CACHE[key] = out
    return out


def phi_map(p):
    """Linear extension of phi_word to noncommutative polynomials."""
    out = DifferentialForm.zero(p.n)
    for w, c in p.terms.items():
        out = out + c * phi_word(w, p.n)
    return out


# monomial bases and vectorization


def form_monomials(n, degree, weight):
    """All monomials x^alpha dx_S with |S| = degree and total weight, in a
    fixed deterministic order."""
    if degree < 0 or degree > n or weight < degree:
        return []
    poly_weight = weight - degree
    out = []
    for ds in itertools.combinations(range(1, n + 1), degree):
        for alpha in _compositions(poly_weight, n):
            out.append(FormMonomial(alpha, ds))
    return out


def even_form_monomials(n, weight):
    out = []
    for degree in range(0, n + 1, 2):
        out.extend(form_monomials(n, degree, weight))
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def form_vector(f, index_map):
    entries = {}
    for m, c in f.terms.items():
        if m not in index_map:
            raise ValueError(f"monomial {m} outside the chosen basis")
        entries[index_map[m]] = c
    return SparseVector(entries, len(index_map))


def closed_form_dim(n, degree, weight):
    """Dimension of closed degree-j forms of the given weight, as the rank
    of d restricted from weight-preserving (j-1)-forms (closed = exact in
    positive degree by the Poincare lemma)."""
    if degree == 0:
        return 1 if weight == 0 else 0
    if degree > n:
        return 0
    targets = form_monomials(n, degree, weight)
    if not targets:
        return 0
    index_map = {m: i for i, m in enumerate(targets)}
    basis = EchelonBasis(len(targets), QQ())
    for m in form_monomials(n, degree - 1, weight):
        image = de_rham(DifferentialForm({m: Fraction(1)}, n))
        basis.reduce_insert(form_vector(image, index_map))
    return basis.rank


# identity verification suites


def verify_eta_relation(n):
    """Check eta_{i,j} eta_{k,l} + eta_{i,k} eta_{j,l} = 0 under wedge for
    all i<j, k<l from 1..n."""
    def eta(i, j):
        return wedge(
            DifferentialForm.d_coordinate(i, n), DifferentialForm.d_coordinate(j, n)
        )

    violations = []
    cases = 0
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k, l in itertools.combinations(range(1, n + 1), 2):
            cases += 1
            total = wedge(eta(i, j), eta(k, l)) + wedge(eta(i, k), eta(j, l))
            if not total.is_zero():
                violations.append({"i": i, "j": j, "k": k, "l": l})
    return {
        "check": "eta-relation",
        "params": {"n": n},
        "cases": cases,
        "violations": violations,
        "pass": not violations,
    }


def verify_strange3(n):
    """Check, in the free algebra, the rewriting identity that puts products
    of two brackets into the triple-bracket ideal:

    [xi,xj][xk,xl] + [xi,xk][xj,xl]
      = [[xj,xk], xi xl] + xi [xk,[xj,xl]] + [[xi,xj],xk] xl - [[xi xl,xk],xj]
    for all quadruples of generators."""
    x = {i: NCPolynomial.variable(i, n) for i in range(1, n + 1)}
    violations = []
    cases = 0
    for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
        cases += 1
        lhs = poly_mul(lie_bracket(x[i], x[j]), lie_bracket(x[k], x[l])) + poly_mul(
            lie_bracket(x[i], x[k]), lie_bracket(x[j], x[l])
        )
        xixl = poly_mul(x[i], x[l])
        rhs = (
            lie_bracket(lie_bracket(x[j], x[k]), xixl)
            + poly_mul(x[i], lie_bracket(x[k], lie_bracket(x[j], x[l])))
            + poly_mul(lie_bracket(lie_bracket(x[i], x[j]), x[k]), x[l])
            - lie_bracket(lie_bracket(xixl, x[k]), x[j])
        )
        if lhs != rhs:
            violations.append({"i": i, "j": j, "k": k, "l": l})
    return {
        "check": "bracket-product-rewrite",
        "params": {"n": n},
        "cases": cases,
        "violations": violations,
        "pass": not violations,
    }


def verify_bracket_shift_identity(t1, t2, t3, t4, t5, n):
    """Check the expansion of [t1, t2 [t3,[t4,t5]]] into triple brackets:

    [t1, t2[t3,[t4,t5]]] = [[t3,t2],[t4,t5] t1] - [[t4,t5], t1 t2 t3]
                           + [[t4,t5], t1 t3 t2] + [t1,[t3, t2 [t4,t5]]]
    for arbitrary words t1..t5."""
    p = [NCPolynomial.from_word(t, n) for t in (t1, t2, t3, t4, t5)]
    b45 = lie_bracket(p[3], p[4])
    lhs = lie_bracket(p[0], poly_mul(p[1], lie_bracket(p[2], b45)))
    rhs = (
        lie_bracket(lie_bracket(p[2], p[1]), poly_mul(b45, p[0]))
        - lie_bracket(b45, poly_mul(poly_mul(p[0], p[1]), p[2]))
        + lie_bracket(b45, poly_mul(poly_mul(p[0], p[2]), p[1]))
        + lie_bracket(p[0], lie_bracket(p[2], poly_mul(p[1], b45)))
    )
    return lhs == rhs


def bracket_shift_identity_suite(n, cases=100, max_len=3, seed=0):
    """Randomized word tuples for verify_bracket_shift_identity."""
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        words = tuple(
            tuple(rng.randint(1, n) for _ in range(rng.randint(1, max_len)))
            for _ in range(5)
        )
        if not verify_bracket_shift_identity(*words, n=n):
            failures.append(list(map(list, words)))
    return {
        "check": "bracket-shift-identity",
        "params": {"n": n, "cases": cases, "max_len": max_len, "seed": seed},
        "cases": cases,
        "violations": failures,
        "pass": not failures,
    }


def even_forms_isomorphism_check(n, l, engine=None, field=None):
    """Triple agreement for the weight-l slice:

    (a) dim of the second lower-central quotient from the filtration engine,
    (b) sum over even j >= 2 of closed j-form dimensions,
    (c) rank of the starred-commutator images of a spanning set of the
        commutant, inside even forms of weight l.
    Also checks surjectivity of the algebra map onto the full even slice."""
    from .lcs import FiltrationEngine

    if engine is None:
        engine = FiltrationEngine(n, field)
    a = engine.quotient_dim(2, l)
    b = sum(closed_form_dim(n, j, l) for j in range(2, n + 1, 2))

    monomials = even_form_monomials(n, l)
    index_map = {m: i for i, m in enumerate(monomials)}
    rank_field = field if field is not None else GF()
    basis = EchelonBasis(len(monomials), rank_field)
    for j in range(1, l // 2 + 1):
        for w in words_of_length(n, j):
            fw = phi_word(w, n)
            for v in words_of_length(n, l - j):
                if j == l - j and word_index(w, n) >= word_index(v, n):
                    continue
                image = star_commutator(fw, phi_word(v, n))
                if image.is_zero():
                    continue
                basis.reduce_insert(form_vector(image, index_map))
    c = basis.rank

    surj = EchelonBasis(len(monomials), rank_field)
    for w in words_of_length(n, l):
        surj.reduce_insert(form_vector(phi_word(w, n), index_map))
    surjective = surj.rank == len(monomials)

    return {
        "check": "even-closed-forms-isomorphism",
        "params": {"n": n, "l": l},
        "quotient_dim": a,
        "closed_even_form_dim": b,
        "phi_image_rank": c,
        "even_slice_dim": len(monomials),
        "phi_surjective_on_slice": surjective,
        "pass": a == b == c and surjective,
    }


def lambda2_quotient_dim(n, l, field=None):
    """Dimension of the weight-l slice of the exterior square of the cyclic
    words modulo the cyclic-shuffle relations

        (a1 a2) ^ a3 + (a2 a3) ^ a1 + (a3 a1) ^ a2 = 0,

    instantiated over all monomial triples (complete by multilinearity).
    Must agree with the second lower-central quotient dimension."""
    from .ncpoly import cyclic_canonical

    def key(w):
        return (len(w), w)

    classes = []
    for m in range(1, l):
        classes.extend(sorted({cyclic_canonical(w) for w in words_of_length(n, m)}))
    pair_index = {}
    for u, v in itertools.combinations(sorted(classes, key=key), 2):
        if len(u) + len(v) == l:
            pair_index[(u, v)] = len(pair_index)
    if not pair_index:
        return 0

    basis = EchelonBasis(len(pair_index), field if field is not None else GF())
    for l1 in range(1, l - 1):
        for l2 in range(1, l - l1):
            l3 = l - l1 - l2
            for a1 in words_of_length(n, l1):
                for a2 in words_of_length(n, l2):
                    for a3 in words_of_length(n, l3):
                        ent = {}
                        for u, v in (
                            (a1 + a2, a3),
                            (a2 + a3, a1),
                            (a3 + a1, a2),
                        ):
                            cu = cyclic_canonical(u)
                            cv = cyclic_canonical(v)
                            if cu == cv:
                                continue
                            sign = 1
                            if key(cu) > key(cv):
                                cu, cv = cv, cu
                                sign = -1
                            idx = pair_index[(cu, cv)]
                            ent[idx] = ent.get(idx, 0) + sign
                        if ent:
                            basis.reduce_insert(SparseVector(ent, len(pair_index)))
    return len(pair_index) - basis.rank


def random_even_form(n, max_weight, rng, max_terms=4):
    """Small random even form with integer coefficients, for property
    suites.  Draws up to max_terms monomials of even degree and weight
    at most max_weight."""
    pool = []
    for weight in range(max_weight + 1):
        for degree in range(0, min(n, weight) + 1, 2):
            pool.extend(form_monomials(n, degree, weight))
    out = DifferentialForm.zero(n)
    for _ in range(rng.randrange(1, max_terms + 1)):
        m = pool[rng.randrange(len(pool))]
        c = rng.randrange(-3, 4) or 1
        out = out + DifferentialForm({m: Fraction(c)}, n)
    return out


def star_property_suite(cases=100, max_n=4, max_weight=5, seed=0):
    """Random checks of the star product on even forms: associativity,
    commutator equal to twice the wedge of differentials, and vanishing of
    the iterated commutator.  Exact term-map comparisons throughout."""
    rng = random.Random(seed)
    violations = []
    for case in range(cases):
        n = rng.randrange(2, max_n + 1)
        f = random_even_form(n, max_weight, rng)
        g = random_even_form(n, max_weight, rng)
        h = random_even_form(n, max_weight, rng)
        if star_product(star_product(f, g), h) != star_product(
            f, star_product(g, h)
        ):
            violations.append({"case": case, "law": "associativity"})
        comm = star_commutator(f, g)
        if comm != 2 * wedge(de_rham(f), de_rham(g)):
            violations.append({"case": case, "law": "commutator"})
        if not star_commutator(comm, h).is_zero():
            violations.append({"case": case, "law": "second commutator"})
    return {
        "check": "star-product-properties",
        "params": {
            "cases": cases,
            "max_n": max_n,
            "max_weight": max_weight,
            "seed": seed,
        },
        "violations": violations,
        "pass": not violations,
    }

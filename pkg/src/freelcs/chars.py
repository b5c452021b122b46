"""Partitions, Schur dimensions and weight expansions, Pieri products,
character decomposition of multigraded dimension data, and coinduced
dimension-series fits.

Everything here is a pure function on small combinatorial data; the heavy
lifting (the multigraded dimensions themselves) comes from the filtration
engine.
"""
from __future__ import annotations

import itertools
from math import comb


class NotACharacter(ValueError):
    """Weight data is not the character of a polynomial gl_n module."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def as_partition(parts):
    """Normalize to a tuple of weakly decreasing positive parts."""
    parts = tuple(int(p) for p in parts if p)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return parts


def schur_dim(lam, n):
    """Dimension of the irreducible gl_n module with highest weight lam,
    by the hook content formula: prod (n + j - i) / hook(i, j)."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} rows")
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    assert num % den == 0
    return num // den


def conjugate(lam):
    """Transpose of a Young diagram."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(
        sum(1 for row in lam if row > j) for j in range(lam[0])
    )


def _ssyt_count(lam, content):
    """Number of semistandard tableaux of shape lam and given content
    (Kostka number), by row-insertion over reverse-lex fillings via a
    horizontal-strip recursion: peel the cells holding the largest entry."""
    lam = tuple(lam)
    content = tuple(content)
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not lam else 0
    if sum(lam) != sum(content):
        return 0
    total = 0
    last = content[-1]
    for mu in _horizontal_substrips(lam, last):
        total += _ssyt_count(mu, content[:-1])
    return total


def _horizontal_substrips(lam, size):
    """All mu contained in lam with lam/mu a horizontal strip of the given
    size (at most one removed box per column)."""
    lam = tuple(lam)
    rows = len(lam)
    results = []

    def rec(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                results.append(as_partition(prefix))
            return
        lower = lam[i + 1] if i + 1 < rows else 0
        upper = min(lam[i], prefix[-1] if prefix else lam[i])
        for m in range(max(lower, lam[i] - remaining), upper + 1):
            # strip condition: removed cells in row i sit strictly right of
            # row i+1's removed cells, i.e. m >= lam[i+1]
            rec(i + 1, remaining - (lam[i] - m), prefix + [m])

    rec(0, size, [])
    return results


def schur_monomial_expansion(lam, n):
    """Weight multiplicities of the irreducible gl_n module: multidegree ->
    Kostka number.  Symmetric under coordinate permutation; values sum to
    schur_dim(lam, n)."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} rows")
    size = sum(lam)
    out = {}
    for dom in _partitions_of(size, max_parts=n):
        k = _ssyt_count(lam, dom)
        if not k:
            continue
        padded = dom + (0,) * (n - len(dom))
        for perm in set(itertools.permutations(padded)):
            out[perm] = k
    return out


def _partitions_of(size, max_parts, max_part=None):
    """All partitions of size with at most max_parts parts."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, max_parts - 1, first):
            yield (first,) + rest


def decompose_character(weights, n):
    """Express symmetric weight data as a nonnegative combination of
    irreducible gl_n characters by dominance peeling: repeatedly take the
    lexicographically greatest weight with nonzero multiplicity as the next
    highest weight.  Raises NotACharacter when that fails."""
    residual = {tuple(a): int(c) for a, c in weights.items() if c}
    for a, c in residual.items():
        if len(a) != n:
            raise ValueError(f"weight {a} has length {len(a)}, expected {n}")
        for perm in set(itertools.permutations(a)):
            if residual.get(perm, 0) != c:
                raise NotACharacter(
                    f"weights not symmetric: {a} -> {c} but {perm} -> "
                    f"{residual.get(perm, 0)}"
                )
    expansion = {}
    while residual:
        top = max(residual)
        mult = residual[top]
        if mult < 0 or any(a < b for a, b in zip(top, top[1:])):
            raise NotACharacter(
                f"peeling failed at weight {top} (multiplicity {mult})",
                residual=dict(residual),
            )
        lam = as_partition(top)
        expansion[lam] = expansion.get(lam, 0) + mult
        for a, k in schur_monomial_expansion(lam, n).items():
            c = residual.get(a, 0) - mult * k
            if c:
                residual[a] = c
            else:
                residual.pop(a, None)
    return expansion


def pieri_row(lam, strip):
    """All partitions obtained from lam by adding a horizontal strip of the
    given size (no two new boxes in one column).  Schur expansion of
    s_lam * h_strip."""
    lam = as_partition(lam)
    rows = len(lam)
    results = []

    def rec(i, remaining, prefix):
        if i == rows + 1:
            if remaining == 0:
                results.append(as_partition(prefix))
            return
        here = lam[i] if i < rows else 0
        cap = prefix[-1] if prefix else here + remaining
        # new boxes in row i must avoid columns of new boxes in row i-1,
        # so row i cannot grow past the old length of row i-1
        if i > 0:
            cap = min(cap, lam[i - 1] if i - 1 < rows else 0)
        for m in range(here, min(here + remaining, cap) + 1):
            rec(i + 1, remaining - (m - here), prefix + [m])

    rec(0, strip, [])
    return sorted(results, reverse=True)


def pieri_column(lam, strip):
    """All partitions obtained from lam by adding a vertical strip of the
    given size (at most one new box per row).  Schur expansion of
    s_lam * e_strip."""
    lam = as_partition(lam)
    rows = len(lam)
    results = set()

    def rec(i, remaining, prefix):
        if remaining == 0:
            tail = list(lam[i:])
            cand = prefix + tail
            if all(a >= b for a, b in zip(cand, cand[1:])):
                results.add(as_partition(cand))
            return
        if i == rows + strip:
            return
        here = lam[i] if i < rows else 0
        for add in (0, 1):
            m = here + add
            if prefix and m > prefix[-1]:
                continue
            if m == 0 and remaining - add > 0:
                continue
            rec(i + 1, remaining - add, prefix + [m])

    rec(0, strip, [])
    return sorted(results, reverse=True)


def coinduced_dim_series(dim_d, l0, n, l_max):
    """Graded dimension series of the module coinduced from a dim_d
    dimensional fiber placed at level l0: dim_d * C(l - l0 + n - 1, n - 1)
    for l >= l0, zero below."""
    if dim_d < 1 or l0 < 1:
        raise ValueError("need dim_d >= 1 and l0 >= 1")
    return {
        l: dim_d * comb(l - l0 + n - 1, n - 1) if l >= l0 else 0
        for l in range(l_max + 1)
    }


def fit_coinduced(series, n):
    """Greedy layer fit: at the least degree with a nonzero residual value v,
    subtract the coinduced series with fiber dimension v starting there;
    repeat.  Returns {"layers": [(dim_d, l0), ...], "residual": {...},
    "ok": bool}; a negative residual stops the fit with ok False."""
    residual = {int(l): int(v) for l, v in series.items()}
    if residual:
        degrees = sorted(residual)
        if degrees != list(range(degrees[0], degrees[-1] + 1)):
            raise ValueError("series must cover a contiguous degree range")
    layers = []
    l_max = max(residual) if residual else 0
    while True:
        live = sorted(l for l, v in residual.items() if v)
        if not live:
            return {"layers": layers, "residual": {}, "ok": True}
        l0 = live[0]
        v = residual[l0]
        if v < 0 or l0 < 1:
            return {
                "layers": layers,
                "residual": {l: residual[l] for l in live},
                "ok": False,
            }
        layers.append((v, l0))
        for l, c in coinduced_dim_series(v, l0, n, l_max).items():
            residual[l] = residual.get(l, 0) - c
        bad = [l for l, c in residual.items() if c < 0]
        if bad:
            return {
                "layers": layers,
                "residual": {l: c for l, c in sorted(residual.items()) if c},
                "ok": False,
            }

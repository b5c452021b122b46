"""Lower central series engine for the free associative algebra.

F_1 = A_n and F_k = [A_n, F_{k-1}]; the graded quotient dimensions
dim A_{n,k}^l = dim F_k^l - dim F_{k+1}^l assemble into the bigraded
Hilbert table.  Bracket generation preserves the multidegree, so every
degree-l component splits into independent rank problems, one per
exponent vector; the engine shards its echelon bases accordingly.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import sympy

from . import cache as cellcache
from .exactrank import EchelonBasis, SparseVector
from .fields import GF, QQ, FieldDisagreement, random_prime_pair
from .ncpoly import multidegree, word_index, words_of_length

DEFAULT_BUDGET = 2**18


class BudgetExceeded(RuntimeError):
    """Ambient dimension n**l above the configured cap."""


def necklace_count(n, l):
    """Number of cyclic words of length l on n letters."""
    if l == 0:
        return 1
    total = sum(sympy.totient(d) * n ** (l // d) for d in sympy.divisors(l))
    return int(total // l)


def witt_dim(n, l):
    """Dimension of the degree-l component of the free Lie algebra on n
    generators: (1/l) sum_{d|l} mu(d) n^(l/d)."""
    if l == 0:
        return 0
    total = sum(sympy.mobius(d) * n ** (l // d) for d in sympy.divisors(l))
    return int(total // l)


@dataclass
class FiltrationCell:
    """Echelon bases of F_k^l, one per multidegree (local cell indices)."""

    n: int
    k: int
    l: int
    bases: dict | None = None  # multidegree -> EchelonBasis; None when full
    full: bool = False  # k = 1: the whole degree-l component

    def dim(self, index_maps=None):
        if self.full:
            return self.n**self.l
        return sum(b.rank for b in self.bases.values())

    def dims_by_multidegree(self, index_maps):
        if self.full:
            return {a: len(g) for a, (g, _) in index_maps.items()}
        out = {a: 0 for a in index_maps}
        for a, b in self.bases.items():
            out[a] = b.rank
        return out

    def iter_alpha_rows(self, index_maps):
        """Yield (multidegree, rows) sorted by multidegree; rows are dicts in
        local cell indices, sorted by pivot (canonical order)."""
        if self.full:
            for a in sorted(index_maps):
                size = len(index_maps[a][0])
                yield a, [{i: 1} for i in range(size)]
        else:
            for a in sorted(self.bases):
                rows = [row for _, row in self.bases[a].row_dicts_sorted()]
                if rows:
                    yield a, rows


class FiltrationEngine:
    """Computes and memoizes graded filtration bases for one (n, field)."""

    def __init__(self, n, field=None, cache_dir=None, budget=DEFAULT_BUDGET):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.field = field if field is not None else GF()
        self.cache_dir = cache_dir
        self.budget = budget
        self._cells = {}
        self._maps = {}

    def index_maps(self, l):
        """multidegree -> (sorted global index list, global->local dict) for
        the degree-l component."""
        if l not in self._maps:
            by_alpha = {}
            for w in words_of_length(self.n, l):
                by_alpha.setdefault(multidegree(w, self.n), []).append(
                    word_index(w, self.n)
                )
            self._maps[l] = {
                a: (idxs, {g: i for i, g in enumerate(idxs)})
                for a, idxs in by_alpha.items()
            }
        return self._maps[l]

    def _check_budget(self, l):
        if self.n**l > self.budget:
            raise BudgetExceeded(
                f"ambient dimension {self.n}**{l} exceeds budget {self.budget}"
            )

    def filtration_basis(self, k, l):
        if k < 1 or l < 0:
            raise ValueError("need k >= 1 and l >= 0")
        self._check_budget(l)
        key = (k, l)
        if key in self._cells:
            return self._cells[key]
        if k == 1:
            cell = FiltrationCell(self.n, k, l, full=True)
        elif l < k:
            cell = FiltrationCell(self.n, k, l, bases={})
        else:
            cell = self._load_cached(k, l) or self._compute(k, l)
        self._cells[key] = cell
        return cell

    def _compute(self, k, l):
        n = self.n
        maps = self.index_maps(l)
        bases = {}
        for j in range(1, l - k + 2):
            lb = l - j
            prev = self.filtration_basis(k - 1, lb)
            if prev.dim(self.index_maps(lb)) == 0:
                continue
            prev_maps = self.index_maps(lb)
            n_lb = n**lb
            n_j = n**j
            prev_rows = list(prev.iter_alpha_rows(prev_maps))
            for w in words_of_length(n, j):
                wc = word_index(w, n)
                wdeg = multidegree(w, n)
                for alpha_b, rows in prev_rows:
                    alpha = tuple(x + y for x, y in zip(wdeg, alpha_b))
                    tgt_globals, tgt_g2l = maps[alpha]
                    amb = len(tgt_globals)
                    basis = bases.get(alpha)
                    if basis is None:
                        basis = bases[alpha] = EchelonBasis(amb, self.field)
                    if basis.rank == amb:
                        continue
                    src_globals = prev_maps[alpha_b][0]
                    for row in rows:
                        if basis.rank == amb:
                            break
                        ent = {}
                        for li, c in row.items():
                            g = src_globals[li]
                            i1 = tgt_g2l[wc * n_lb + g]
                            i2 = tgt_g2l[g * n_j + wc]
                            ent[i1] = ent.get(i1, 0) + c
                            ent[i2] = ent.get(i2, 0) - c
                        basis.reduce_insert(SparseVector(ent, amb))
        cell = FiltrationCell(self.n, k, l, bases=bases)
        self._store_cached(cell)
        return cell

    # cache plumbing (prime-field cells only)

    def _load_cached(self, k, l):
        if self.cache_dir is None or not isinstance(self.field, GF):
            return None
        rows_by_alpha = cellcache.load_cell(
            self.cache_dir, self.n, k, l, self.field.name, self.field.p
        )
        if rows_by_alpha is None:
            return None
        maps = self.index_maps(l)
        bases = {}
        for alpha, rows in rows_by_alpha.items():
            _, g2l = maps[alpha]
            basis = EchelonBasis(len(maps[alpha][0]), self.field)
            for row in rows:
                basis.insert_prepared_row({g2l[g]: c for g, c in row.items()})
            bases[alpha] = basis
        return FiltrationCell(self.n, k, l, bases=bases)

    def _store_cached(self, cell):
        if self.cache_dir is None or not isinstance(self.field, GF):
            return
        maps = self.index_maps(cell.l)
        rows_by_alpha = {}
        for alpha, basis in cell.bases.items():
            if basis.rank == 0:
                continue
            globals_ = maps[alpha][0]
            rows_by_alpha[alpha] = [
                {globals_[i]: c for i, c in row.items()}
                for _, row in basis.row_dicts_sorted()
            ]
        cellcache.save_cell(
            self.cache_dir,
            self.n,
            cell.k,
            cell.l,
            self.field.name,
            self.field.p,
            self.n**cell.l,
            rows_by_alpha,
        )

    # dimensions

    def quotient_dim(self, k, l):
        """dim A_{n,k}^l = dim F_k^l - dim F_{k+1}^l."""
        a = self.filtration_basis(k, l).dim(self.index_maps(l))
        b = self.filtration_basis(k + 1, l).dim(self.index_maps(l))
        return a - b

    def multigraded_quotient_dims(self, k, l):
        """Per-multidegree dimensions of A_{n,k}^l."""
        maps = self.index_maps(l)
        top = self.filtration_basis(k, l).dims_by_multidegree(maps)
        bot = self.filtration_basis(k + 1, l).dims_by_multidegree(maps)
        return {a: top[a] - bot.get(a, 0) for a in sorted(top)}

    def hilbert_table(self, l_max):
        entries = {(1, 0): 1}
        for l in range(1, l_max + 1):
            for k in range(1, l + 1):
                entries[(k, l)] = self.quotient_dim(k, l)
        meta = {"field": self.field.name}
        if isinstance(self.field, GF):
            meta["primes"] = [self.field.p]
        return BigradedTable(self.n, entries, meta)


@dataclass
class BigradedTable:
    """dim A_{n,k}^l indexed by (k, l)."""

    n: int
    entries: dict
    metadata: dict = dc_field(default_factory=dict)

    def column(self, l):
        """Coefficients (k = 1..max(l,1)) of the t^l row."""
        return [self.entries.get((k, l), 0) for k in range(1, max(l, 1) + 1)]

    def max_length(self):
        return max(l for _, l in self.entries)

    def text_lines(self):
        """One '(c1 u + c2 u^2 + ...) t^l' row per length l."""
        lines = [f"H_{self.n}(u,t) ="]
        for l in range(self.max_length() + 1):
            terms = []
            for k in range(1, max(l, 1) + 1):
                c = self.entries.get((k, l), 0)
                if not c:
                    continue
                coeff = "" if c == 1 else str(c)
                power = "u" if k == 1 else f"u^{k}"
                terms.append(f"{coeff}{power}")
            inner = " + ".join(terms) if terms else "0"
            if l == 0:
                suffix = ""
            elif l == 1:
                suffix = "t"
            else:
                suffix = f"t^{l}"
            lines.append(f"({inner}){suffix}")
        return lines

    def to_json_obj(self):
        return {
            "version": 1,
            "kind": "bigraded_hilbert_table",
            "n": self.n,
            "metadata": self.metadata,
            "entries": [
                {"k": k, "l": l, "dim": self.entries[(k, l)]}
                for (k, l) in sorted(self.entries, key=lambda kl: (kl[1], kl[0]))
            ],
        }

    def csv_lines(self):
        lines = ["k,l,dim"]
        for (k, l) in sorted(self.entries, key=lambda kl: (kl[1], kl[0])):
            lines.append(f"{k},{l},{self.entries[(k, l)]}")
        return lines


def quotient_dim(n, k, l, field=None, cache_dir=None, budget=DEFAULT_BUDGET):
    return FiltrationEngine(n, field, cache_dir, budget).quotient_dim(k, l)


def hilbert_table(n, l_max, field=None, cache_dir=None, budget=DEFAULT_BUDGET):
    return FiltrationEngine(n, field, cache_dir, budget).hilbert_table(l_max)


def hilbert_table_two_prime(n, l_max, seed=None, cache_dir=None,
                            budget=DEFAULT_BUDGET):
    """Compute the table twice over distinct random 31-bit primes and demand
    exact agreement (accepted as the characteristic-0 answer)."""
    p, q = random_prime_pair(seed)
    t1 = FiltrationEngine(n, GF(p), cache_dir, budget).hilbert_table(l_max)
    t2 = FiltrationEngine(n, GF(q), cache_dir, budget).hilbert_table(l_max)
    if t1.entries != t2.entries:
        bad = {kl for kl in t1.entries if t1.entries[kl] != t2.entries[kl]}
        raise FieldDisagreement(
            f"primes {p} and {q} disagree at cells {sorted(bad)}"
        )
    return BigradedTable(n, t1.entries, {"field": "two-prime", "primes": [p, q]})

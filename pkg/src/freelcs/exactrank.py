"""Streaming exact rank engine.

Incremental row-echelon reduction of sparse vectors over F_p or Q.  Rows
keep their least nonzero index as pivot, normalized to 1; rank is the row
count.  Over a prime field, rows that fill in past a density threshold are
stored as dense int64 numpy arrays so that long elimination chains run at
vector speed; rational rows stay sparse.
"""
from __future__ import annotations

from bisect import insort

import numpy as np

from .fields import GF, QQ

DENSIFY_FRACTION = 0.25
MIN_DENSE_DIM = 64


class DimensionMismatch(ValueError):
    pass


class SparseVector:
    """Sparse coefficient vector: map index -> nonzero scalar."""

    __slots__ = ("entries", "dim")

    def __init__(self, entries, dim):
        self.entries = {i: c for i, c in entries.items() if c}
        self.dim = dim

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseVector)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __repr__(self):
        items = ", ".join(f"{i}: {c}" for i, c in sorted(self.entries.items()))
        return f"SparseVector({{{items}}}, dim={self.dim})"


class EchelonBasis:
    """Incremental row-echelon store; rank = number of rows."""

    def __init__(self, dim, field=None):
        self.dim = dim
        self.field = field if field is not None else GF()
        self._prime = getattr(self.field, "p", None)
        self._pivots = []  # sorted pivot indices
        self._rows = {}  # pivot -> dict row or dense int64 array
        self._insertion = []  # pivots in insertion order

    @property
    def rank(self):
        return len(self._pivots)

    def _densify(self, entries):
        arr = np.zeros(self.dim, dtype=np.int64)
        for i, c in entries.items():
            arr[i] = c
        return arr

    def _reduce(self, entries):
        """One ascending pass over pivots; rows have no entries below their
        pivot, so a single pass fully eliminates.  Returns dict or array."""
        field = self.field
        p = self._prime
        r = {}
        for i, c in entries.items():
            if not 0 <= i < self.dim:
                raise DimensionMismatch(f"index {i} outside dimension {self.dim}")
            c = field.coerce(c)
            if c:
                r[i] = c
        dense = None
        nnz_limit = max(MIN_DENSE_DIM, int(self.dim * DENSIFY_FRACTION))
        for piv in self._pivots:
            c = int(dense[piv]) if dense is not None else r.get(piv, 0)
            if not c:
                continue
            row = self._rows[piv]
            if (
                dense is None
                and p is not None
                and (isinstance(row, np.ndarray) or len(r) > nnz_limit)
            ):
                dense = self._densify(r)
                r = None
            if dense is not None:
                if isinstance(row, np.ndarray):
                    dense -= c * row
                    dense %= p
                else:
                    for i, rv in row.items():
                        dense[i] = (dense[i] - c * rv) % p
            elif p is not None:
                for i, rv in row.items():
                    x = (r.get(i, 0) - c * rv) % p
                    if x:
                        r[i] = x
                    else:
                        r.pop(i, None)
            else:
                for i, rv in row.items():
                    x = r.get(i, 0) - c * rv
                    if x:
                        r[i] = x
                    else:
                        r.pop(i, None)
        if dense is not None:
            nz = np.nonzero(dense)[0]
            r = {int(i): int(dense[i]) for i in nz}
        return r

    def reduce_insert(self, v):
        """Reduce v against the basis; insert the normalized residual if
        nonzero.  Returns (residual, inserted)."""
        if v.dim != self.dim:
            raise DimensionMismatch(f"{v.dim} != {self.dim}")
        r = self._reduce(v.entries)
        if not r:
            return SparseVector({}, self.dim), False
        lead = min(r)
        inv = self.field.inv(r[lead])
        if self._prime is not None:
            p = self._prime
            row = {i: c * inv % p for i, c in r.items()}
        else:
            row = {i: c * inv for i, c in r.items()}
        stored = row
        if self._prime is not None and self.dim >= MIN_DENSE_DIM:
            if len(row) > self.dim * DENSIFY_FRACTION:
                stored = self._densify(row)
        self._rows[lead] = stored
        insort(self._pivots, lead)
        self._insertion.append(lead)
        return SparseVector(row, self.dim), True

    def contains(self, v):
        """True iff v lies in the row space."""
        return not self._reduce(v.entries)

    def iter_rows(self):
        """Rows in insertion order, each as a plain index -> scalar dict."""
        for piv in self._insertion:
            row = self._rows[piv]
            if isinstance(row, np.ndarray):
                nz = np.nonzero(row)[0]
                yield {int(i): int(row[i]) for i in nz}
            else:
                yield row

    def row_dicts_sorted(self):
        """Rows sorted by pivot index (deterministic serialization order)."""
        out = []
        for piv in self._pivots:
            row = self._rows[piv]
            if isinstance(row, np.ndarray):
                nz = np.nonzero(row)[0]
                row = {int(i): int(row[i]) for i in nz}
            out.append((piv, row))
        return out

    def insert_prepared_row(self, row):
        """Install an already-echelonized row (cache restore path)."""
        lead = min(row)
        if lead in self._rows:
            raise ValueError(f"duplicate pivot {lead}")
        stored = dict(row)
        if self._prime is not None and self.dim >= MIN_DENSE_DIM:
            if len(stored) > self.dim * DENSIFY_FRACTION:
                stored = self._densify(stored)
        self._rows[lead] = stored
        insort(self._pivots, lead)
        self._insertion.append(lead)


def rank_of_stream(vectors, dim=None, field=None):
    """Rank of the matrix whose rows are the given vectors."""
    basis = None
    for v in vectors:
        if basis is None:
            basis = EchelonBasis(dim if dim is not None else v.dim, field)
        basis.reduce_insert(v)
    return basis.rank if basis is not None else 0

"""On-disk cache for filtration cells.

One file per cell: a magic tag, a JSON header (n, k, l, field, prime,
row count, ambient dimension), then echelon rows as sorted
(index, coefficient) pairs with little-endian integers.  A plain-text
JSON sidecar records the dimensions.  Only prime-field cells are cached;
rational rows have unbounded coefficients and are cheap to recompute at
the scales where rational mode is used.
"""
from __future__ import annotations

import json
import os
import struct
import tempfile

MAGIC = b"FLCSCELL1\n"


class CacheCorruption(RuntimeError):
    def __init__(self, path, reason):
        super().__init__(f"corrupt cache file {path}: {reason}")
        self.path = path


def cell_filename(n, k, l, field_name):
    return f"cell_n{n}_k{k}_l{l}_{field_name}.bin"


def save_cell(cache_dir, n, k, l, field_name, prime, ambient, rows_by_alpha):
    """rows_by_alpha: multidegree -> list of row dicts in GLOBAL indices,
    sorted by pivot.  Writes atomically; also writes a JSON sidecar."""
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, cell_filename(n, k, l, field_name))
    alphas = sorted(rows_by_alpha)
    header = {
        "version": 1,
        "n": n,
        "k": k,
        "l": l,
        "field": field_name,
        "prime": prime,
        "ambient": ambient,
        "rows": sum(len(rows_by_alpha[a]) for a in alphas),
        "multidegrees": [list(a) for a in alphas],
        "rows_per_multidegree": [len(rows_by_alpha[a]) for a in alphas],
    }
    blob = json.dumps(header, sort_keys=True).encode()
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(MAGIC)
            fh.write(struct.pack("<I", len(blob)))
            fh.write(blob)
            for a in alphas:
                for row in rows_by_alpha[a]:
                    items = sorted(row.items())
                    fh.write(struct.pack("<I", len(items)))
                    for idx, coeff in items:
                        fh.write(struct.pack("<Qq", idx, coeff))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    sidecar = {
        "n": n,
        "k": k,
        "l": l,
        "field": field_name,
        "prime": prime,
        "ambient": ambient,
        "dim": header["rows"],
        "dims_by_multidegree": {
            ",".join(map(str, a)): len(rows_by_alpha[a]) for a in alphas
        },
    }
    side_path = path + ".json"
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(sidecar, fh, indent=1, sort_keys=True)
    os.replace(tmp, side_path)
    return path


def load_cell(cache_dir, n, k, l, field_name, prime):
    """Returns rows_by_alpha (global indices) or None if absent.
    Raises CacheCorruption on a damaged file."""
    path = os.path.join(cache_dir, cell_filename(n, k, l, field_name))
    if not os.path.exists(path):
        return None
    try:
        with open(path, "rb") as fh:
            if fh.read(len(MAGIC)) != MAGIC:
                raise CacheCorruption(path, "bad magic")
            (hlen,) = struct.unpack("<I", fh.read(4))
            header = json.loads(fh.read(hlen).decode())
            if (header["n"], header["k"], header["l"]) != (n, k, l):
                raise CacheCorruption(path, "header/key mismatch")
            if header["field"] != field_name or header["prime"] != prime:
                raise CacheCorruption(path, "field mismatch")
            rows_by_alpha = {}
            for a, count in zip(
                header["multidegrees"], header["rows_per_multidegree"]
            ):
                alpha = tuple(a)
                rows = []
                for _ in range(count):
                    (nnz,) = struct.unpack("<I", fh.read(4))
                    row = {}
                    for _ in range(nnz):
                        idx, coeff = struct.unpack("<Qq", fh.read(16))
                        row[idx] = coeff
                    rows.append(row)
                rows_by_alpha[alpha] = rows
            return rows_by_alpha
    except CacheCorruption:
        raise
    except (struct.error, json.JSONDecodeError, KeyError, ValueError, OSError) as e:
        raise CacheCorruption(path, str(e)) from e

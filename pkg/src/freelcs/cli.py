"""Command line front end.

Three subcommands: `hilbert` prints the bigraded dimension table,
`verify` runs a named verification suite, `chars` decomposes the graded
pieces at fixed filtration depth into gl_n characters and fits the
dimension row by coinduced layers.

Exit codes: 0 success, 1 verification failure, 2 budget exceeded,
64 usage error, 65 cache corruption.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import chars as charmod
from . import forms
from .cache import CacheCorruption
from .fields import GF, QQ, DEFAULT_PRIME
from .lcs import (
    DEFAULT_BUDGET,
    BigradedTable,
    BudgetExceeded,
    FiltrationEngine,
    hilbert_table_two_prime,
    necklace_count,
    witt_dim,
)

EX_OK = 0
EX_VERIFY_FAILED = 1
EX_BUDGET = 2
EX_USAGE = 64
EX_CACHE = 65

CACHE_ENV_VAR = "FREELCS_CACHE_DIR"

VERIFY_SUITES = (
    "theorem-1-3",
    "theorem-1-4",
    "theorem-2-2",
    "identities",
    "star-assoc",
    "lambda2",
    "oracles",
)


class UsageError(SystemExit):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; remap to 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _add_common(p):
    p.add_argument("--n", type=int, default=None, help="number of generators")
    p.add_argument("--max-len", type=int, default=None, dest="max_len",
                   help="largest word length computed")
    p.add_argument("--field", choices=("prime", "two-prime", "rational"),
                   default="prime", help="rank arithmetic mode")
    p.add_argument("--prime", type=int, default=None,
                   help="modulus override for --field prime")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for table columns")
    p.add_argument("--cache-dir", default=None, dest="cache_dir",
                   help=f"cell cache directory (default ${CACHE_ENV_VAR})")
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default="text", help="output format")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized suites and two-prime mode")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest allowed ambient dimension n**l")


def build_parser():
    parser = _Parser(prog="freelcs",
                     description="lower central series of the free "
                                 "associative algebra: tables, checks, and "
                                 "character decompositions")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("hilbert", help="bigraded dimension table")
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    _add_common(p)

    p = sub.add_parser("chars", help="character decomposition at depth k")
    _add_common(p)
    p.add_argument("--k", type=int, default=2, help="filtration depth")

    return parser


def _validate(args):
    if args.n is not None and args.n < 1:
        raise UsageError(EX_USAGE)
    if args.max_len is not None and args.max_len < 1:
        raise UsageError(EX_USAGE)
    if args.jobs < 1:
        raise UsageError(EX_USAGE)
    if args.cache_dir is None:
        args.cache_dir = os.environ.get(CACHE_ENV_VAR) or None


def _field(args):
    if args.field == "rational":
        return QQ()
    return GF(args.prime if args.prime is not None else DEFAULT_PRIME)


def _engine(args, n):
    return FiltrationEngine(n, _field(args), args.cache_dir, args.budget)


def _emit(obj, args, text_lines):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, indent=1))
    elif args.format == "csv":
        for line in obj_csv(obj):
            print(line)
    else:
        for line in text_lines:
            print(line)


def obj_csv(obj):
    kind = obj.get("kind")
    if kind == "bigraded_hilbert_table":
        yield "k,l,dim"
        for e in obj["entries"]:
            yield f"{e['k']},{e['l']},{e['dim']}"
    elif kind == "verification_report":
        yield "check,pass,expected,got"
        for c in obj["checks"]:
            yield (f"{c['name']},{str(c['pass']).lower()},"
                   f"\"{c.get('expected', '')}\",\"{c.get('got', '')}\"")
    elif kind == "character_report":
        yield "l,dim,partitions"
        for row in obj["rows"]:
            parts = " ".join(
                f"{tuple(d['partition'])}x{d['mult']}"
                for d in row["decomposition"]
            )
            yield f"{row['l']},{row['dim']},\"{parts}\""
    else:
        yield json.dumps(obj, sort_keys=True)


# hilbert


def _column_entries(n, l, field_mode, prime, cache_dir, budget):
    """One table column, computed in a fresh engine (worker process)."""
    field = QQ() if field_mode == "rational" else GF(prime)
    engine = FiltrationEngine(n, field, cache_dir, budget)
    return {(k, l): engine.quotient_dim(k, l) for k in range(1, l + 1)}


def cmd_hilbert(args):
    n = args.n if args.n is not None else 2
    l_max = args.max_len if args.max_len is not None else 6
    if n**l_max > args.budget:
        raise BudgetExceeded(
            f"ambient dimension {n}**{l_max} exceeds budget {args.budget}"
        )
    if args.field == "two-prime":
        table = hilbert_table_two_prime(
            n, l_max, seed=args.seed, cache_dir=args.cache_dir,
            budget=args.budget,
        )
    elif args.jobs > 1:
        prime = args.prime if args.prime is not None else DEFAULT_PRIME
        entries = {(1, 0): 1}
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [
                pool.submit(_column_entries, n, l, args.field, prime,
                            args.cache_dir, args.budget)
                for l in range(1, l_max + 1)
            ]
            for fut in futures:
                entries.update(fut.result())
        field = _field(args)
        meta = {"field": field.name}
        if isinstance(field, GF):
            meta["primes"] = [field.p]
        table = BigradedTable(n, entries, meta)
    else:
        table = _engine(args, n).hilbert_table(l_max)
    _emit(table.to_json_obj(), args, table.text_lines())
    return EX_OK


# verify


def _check(name, expected, got):
    return {
        "name": name,
        "expected": expected,
        "got": got,
        "pass": expected == got,
    }


def _suite_theorem_1_3(args):
    l_max = args.max_len if args.max_len is not None else 12
    engine = _engine(args, 2)
    return [
        _check(f"dim A_(2,2)^{l} = l-1", l - 1, engine.quotient_dim(2, l))
        for l in range(2, l_max + 1)
    ]


def _suite_theorem_1_4(args):
    l_max = args.max_len if args.max_len is not None else 8
    engine = _engine(args, 3)
    return [
        _check(f"dim A_(3,2)^{l} = l^2-1", l * l - 1,
               engine.quotient_dim(2, l))
        for l in range(2, l_max + 1)
    ]


def _suite_theorem_2_2(args):
    n = args.n if args.n is not None else 3
    l_max = args.max_len if args.max_len is not None else 5
    engine = _engine(args, n)
    checks = []
    for l in range(2, l_max + 1):
        r = forms.even_forms_isomorphism_check(n, l, engine=engine,
                                           field=_field(args))
        checks.append({
            "name": f"even closed forms vs A_({n},2)^{l}",
            "expected": r["quotient_dim"],
            "got": {
                "closed_even_form_dim": r["closed_even_form_dim"],
                "phi_image_rank": r["phi_image_rank"],
            },
            "pass": r["pass"],
        })
    return checks


def _suite_identities(args):
    n = args.n if args.n is not None else 4
    checks = []
    r = forms.verify_eta_relation(n)
    checks.append({"name": f"eta relation, n={n}", "expected": "no violations",
                   "got": r["violations"] or "no violations",
                   "pass": r["pass"]})
    n3 = min(n, 4)
    r = forms.verify_strange3(n3)
    checks.append({"name": f"cubic commutator identity, n={n3}, all "
                           "quadruples",
                   "expected": "no violations",
                   "got": r["violations"] or "no violations",
                   "pass": r["pass"]})
    r = forms.bracket_shift_identity_suite(3, cases=100, max_len=3,
                                           seed=args.seed)
    checks.append({"name": "bracket shift identity, 100 random tuples",
                   "expected": "no violations",
                   "got": r["violations"] or "no violations",
                   "pass": r["pass"]})
    return checks


def _suite_star_assoc(args):
    n = min(args.n, 4) if args.n is not None else 4
    r = forms.star_property_suite(cases=100, max_n=n, max_weight=5,
                                  seed=args.seed)
    return [{
        "name": "star product: associativity, commutator law, second "
                "commutator",
        "expected": "no violations",
        "got": r["violations"] or "no violations",
        "pass": r["pass"],
    }]


def _suite_lambda2(args):
    n = args.n if args.n is not None else 2
    l_max = args.max_len if args.max_len is not None else 6
    engine = _engine(args, n)
    return [
        _check(f"exterior-square model of A_({n},2)^{l}",
               engine.quotient_dim(2, l),
               forms.lambda2_quotient_dim(n, l, field=_field(args)))
        for l in range(2, l_max + 1)
    ]


def _suite_oracles(args):
    n = args.n if args.n is not None else 2
    l_max = args.max_len if args.max_len is not None else 8
    engine = _engine(args, n)
    checks = []
    for l in range(1, l_max + 1):
        checks.append(_check(f"necklace count at l={l} (depth 1)",
                             necklace_count(n, l),
                             engine.quotient_dim(1, l)))
        checks.append(_check(f"free Lie dimension at l={l} (depth l)",
                             witt_dim(n, l),
                             engine.quotient_dim(l, l)))
    return checks


_SUITES = {
    "theorem-1-3": _suite_theorem_1_3,
    "theorem-1-4": _suite_theorem_1_4,
    "theorem-2-2": _suite_theorem_2_2,
    "identities": _suite_identities,
    "star-assoc": _suite_star_assoc,
    "lambda2": _suite_lambda2,
    "oracles": _suite_oracles,
}


def cmd_verify(args):
    checks = _SUITES[args.suite](args)
    ok = all(c["pass"] for c in checks)
    report = {
        "version": 1,
        "kind": "verification_report",
        "suite": args.suite,
        "checks": checks,
        "pass": ok,
    }
    lines = []
    for c in checks:
        tag = "ok  " if c["pass"] else "FAIL"
        lines.append(f"{tag} {c['name']}: expected {c['expected']}, "
                     f"got {c['got']}")
    lines.append(f"suite {args.suite}: {'pass' if ok else 'FAIL'}")
    _emit(report, args, lines)
    return EX_OK if ok else EX_VERIFY_FAILED


# chars


def cmd_chars(args):
    n = args.n if args.n is not None else 2
    k = args.k
    if k < 2:
        raise UsageError(EX_USAGE)
    l_max = args.max_len if args.max_len is not None else k + 2
    engine = _engine(args, n)
    rows = []
    series = {}
    for l in range(k, l_max + 1):
        weights = engine.multigraded_quotient_dims(k, l)
        dim = sum(weights.values())
        series[l] = dim
        decomposition = []
        if dim:
            expansion = charmod.decompose_character(weights, n)
            decomposition = [
                {"partition": list(lam), "mult": mult,
                 "dim": charmod.schur_dim(lam, n)}
                for lam, mult in sorted(expansion.items(), reverse=True)
            ]
        rows.append({"l": l, "dim": dim, "decomposition": decomposition})
    fit = charmod.fit_coinduced(series, n)
    report = {
        "version": 1,
        "kind": "character_report",
        "n": n,
        "k": k,
        "rows": rows,
        "fit": {
            "layers": [list(layer) for layer in fit["layers"]],
            "residual": {str(l): v for l, v in fit["residual"].items()},
            "ok": fit["ok"],
        },
    }
    lines = [f"A_({n},{k}) for l = {k}..{l_max}:"]
    for row in rows:
        parts = " + ".join(
            (f"{d['mult']}*" if d["mult"] > 1 else "")
            + f"F{tuple(d['partition'])}(dim {d['dim']})"
            for d in row["decomposition"]
        ) or "0"
        lines.append(f"  l={row['l']}: dim {row['dim']} = {parts}")
    if fit["ok"]:
        layers = ", ".join(f"(dim {d} at level {l0})"
                           for d, l0 in fit["layers"]) or "none"
        lines.append(f"coinduced layer fit: {layers}")
    else:
        lines.append(f"coinduced layer fit FAILED; residual "
                     f"{fit['residual']}")
    _emit(report, args, lines)
    return EX_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EX_USAGE
    try:
        _validate(args)
        if args.command == "hilbert":
            return cmd_hilbert(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_chars(args)
    except UsageError:
        return EX_USAGE
    except BudgetExceeded as e:
        print(f"freelcs: budget exceeded: {e}", file=sys.stderr)
        return EX_BUDGET
    except CacheCorruption as e:
        print(f"freelcs: {e}", file=sys.stderr)
        return EX_CACHE


if __name__ == "__main__":
    sys.exit(main())

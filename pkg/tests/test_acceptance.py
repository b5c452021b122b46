"""Acceptance gate: the eleven headline checks, one per test, each
printing a single PASS/FAIL line.  Run with `pytest tests/test_acceptance.py -v -s`."""
import random

import pytest

from freelcs.chars import decompose_character, fit_coinduced, schur_dim
from freelcs.fields import QQ
from freelcs.forms import (
    bracket_shift_identity_suite,
    closed_form_dim,
    lambda2_quotient_dim,
    star_property_suite,
    even_forms_isomorphism_check,
    verify_eta_relation,
    verify_strange3,
)
from freelcs.lcs import (
    FiltrationEngine,
    hilbert_table_two_prime,
    necklace_count,
    witt_dim,
)

# published graded dimension tables; row l -> coefficients for k = 1..l
H2 = {
    1: [2],
    2: [3, 1],
    3: [4, 2, 2],
    4: [6, 3, 4, 3],
    5: [8, 4, 6, 8, 6],
    6: [14, 5, 8, 13, 15, 9],
    7: [20, 6, 10, 18, 26, 30, 18],
    8: [36, 7, 12, 23, 37, 54, 57, 30],
    9: [60, 8, 14, 28, 48, 80, 108, 110, 56],
}

H3 = {
    1: [3],
    2: [6, 3],
    3: [11, 8, 8],
    4: [24, 15, 24, 18],
    5: [51, 24, 48, 72, 48],
    6: [130, 35, 80, 162, 206, 116],
}


def report(number, description, ok):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {description}")
    assert ok, f"criterion {number} failed: {description}"


@pytest.fixture(scope="module")
def table2(engine2):
    return engine2.hilbert_table(9)


@pytest.fixture(scope="module")
def table3(engine3):
    return engine3.hilbert_table(6)


def test_criterion_01_table_n2(table2):
    ok = all(table2.column(l) == row for l, row in H2.items())
    report(1, "full n=2 dimension table through length 9", ok)


def test_criterion_02_table_n3(table3):
    ok = all(table3.column(l) == row for l, row in H3.items())
    report(2, "full n=3 dimension table through length 6", ok)


def test_criterion_03_depth2_n2(engine2):
    ok = all(engine2.quotient_dim(2, l) == l - 1 for l in range(2, 13))
    report(3, "dim of the depth-2 quotient at n=2 equals l-1 for l=2..12",
           ok)


def test_criterion_04_depth2_n3(engine3):
    ok = all(engine3.quotient_dim(2, l) == l * l - 1 for l in range(2, 9))
    report(4, "dim of the depth-2 quotient at n=3 equals l^2-1 for l=2..8",
           ok)


def test_criterion_05_even_forms_triple_agreement(engine2, engine3, engine4):
    engines = {2: engine2, 3: engine3, 4: engine4}
    ok = True
    for n, engine in engines.items():
        l_top = 5 if n == 4 else 6
        for l in range(2, l_top + 1):
            r = even_forms_isomorphism_check(n, l, engine=engine)
            ok = ok and r["pass"]
    ok = ok and closed_form_dim(4, 4, 4) == 1
    report(5, "depth-2 quotient = closed even forms = commutator image, "
              "n=2,3,4", ok)


def test_criterion_06_identity_suites():
    ok = (
        all(verify_eta_relation(n)["pass"] for n in range(1, 6))
        and all(verify_strange3(n)["pass"] for n in range(1, 5))
        and bracket_shift_identity_suite(3, cases=100, max_len=3,
                                         seed=0)["pass"]
    )
    report(6, "polynomial identity suites (all quadruples and 100 random "
              "tuples)", ok)


def test_criterion_07_star_properties():
    r = star_property_suite(cases=100, max_n=4, max_weight=5, seed=0)
    report(7, "star product associativity and commutator laws on 100 "
              "random even forms", r["pass"])


def test_criterion_08_exterior_square_model(engine2, engine3):
    ok = all(
        lambda2_quotient_dim(n, l) == engine.quotient_dim(2, l)
        for n, engine in ((2, engine2), (3, engine3))
        for l in range(2, 7)
    )
    report(8, "exterior-square model matches the depth-2 quotient, n=2,3, "
              "l<=6", ok)


def test_criterion_09_oracle_rows(table2, table3):
    ok = True
    for n, table in ((2, table2), (3, table3)):
        for l in range(1, table.max_length() + 1):
            ok = ok and table.entries[(1, l)] == necklace_count(n, l)
            ok = ok and table.entries[(l, l)] == witt_dim(n, l)
    report(9, "cyclic-word row and free-Lie diagonal oracles on both "
              "tables", ok)


def test_criterion_10_character_fits(engine2, engine3):
    row_23 = {l: engine2.quotient_dim(3, l) for l in range(3, 10)}
    row_24 = {l: engine2.quotient_dim(4, l) for l in range(4, 10)}
    row_33 = {l: engine3.quotient_dim(3, l) for l in range(3, 7)}
    row_34 = {l: engine3.quotient_dim(4, l) for l in range(4, 7)}
    fits_ok = (
        fit_coinduced(row_23, 2) == {"layers": [(2, 3)], "residual": {},
                                     "ok": True}
        and fit_coinduced(row_24, 2) == {"layers": [(3, 4), (2, 5)],
                                         "residual": {}, "ok": True}
        and fit_coinduced(row_33, 3) == {"layers": [(8, 3)], "residual": {},
                                         "ok": True}
        and fit_coinduced(row_34, 3) == {"layers": [(18, 4), (18, 5)],
                                         "residual": {}, "ok": True}
    )
    expansion = decompose_character(
        engine3.multigraded_quotient_dims(4, 4), 3
    )
    dims = sorted(schur_dim(lam, 3) for lam, m in expansion.items()
                  for _ in range(m))
    report(10, "coinduced layer fits and the depth-4 decomposition at n=3",
           fits_ok and dims == [3, 15])


def test_criterion_11_field_mode_agreement(table2, table3):
    two_prime_ok = (
        hilbert_table_two_prime(2, 9, seed=0).entries == table2.entries
        and hilbert_table_two_prime(3, 6, seed=0).entries == table3.entries
    )
    rng = random.Random(0)
    cells = [(2, k, l) for l in range(2, 10) for k in range(2, l + 1)]
    cells += [(3, k, l) for l in range(2, 7) for k in range(2, l + 1)]
    sample = rng.sample(cells, 10)
    rational = {2: FiltrationEngine(2, QQ()), 3: FiltrationEngine(3, QQ())}
    tables = {2: table2, 3: table3}
    rational_ok = all(
        rational[n].quotient_dim(k, l) == tables[n].entries[(k, l)]
        for n, k, l in sample
    )
    report(11, "two-prime tables and 10 rational spot checks agree with "
               "the prime-field tables", two_prime_ok and rational_ok)

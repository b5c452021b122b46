"""Exact computation of lower central series quotients of the free
associative algebra, quantized even differential forms, and gl_n character
decompositions of the graded pieces."""

from .fields import GF, QQ, DEFAULT_PRIME, FieldDisagreement, PrimeExhausted
from .lcs import (
    BigradedTable,
    BudgetExceeded,
    FiltrationEngine,
    hilbert_table,
    hilbert_table_two_prime,
    necklace_count,
    quotient_dim,
    witt_dim,
)
from .ncpoly import NCPolynomial, cyclic_canonical, lie_bracket, poly_mul
from .forms import (
    DifferentialForm,
    closed_form_dim,
    de_rham,
    lambda2_quotient_dim,
    phi_map,
    star_commutator,
    star_product,
    wedge,
)
from .chars import (
    coinduced_dim_series,
    decompose_character,
    fit_coinduced,
    pieri_column,
    pieri_row,
    schur_dim,
    schur_monomial_expansion,
)

__all__ = [
    "DifferentialForm",
    "closed_form_dim",
    "de_rham",
    "lambda2_quotient_dim",
    "phi_map",
    "star_commutator",
    "star_product",
    "wedge",
    "coinduced_dim_series",
    "decompose_character",
    "fit_coinduced",
    "pieri_column",
    "pieri_row",
    "schur_dim",
    "schur_monomial_expansion",
    "GF",
    "QQ",
    "DEFAULT_PRIME",
    "FieldDisagreement",
    "PrimeExhausted",
    "BigradedTable",
    "BudgetExceeded",
    "FiltrationEngine",
    "hilbert_table",
    "hilbert_table_two_prime",
    "necklace_count",
    "quotient_dim",
    "witt_dim",
    "NCPolynomial",
    "cyclic_canonical",
    "lie_bracket",
    "poly_mul",
]

__version__ = "0.1.0"

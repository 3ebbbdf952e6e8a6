"""Exact expansions of higher derivatives of implicitly defined functions.

For F(x, y) = 0 defining y(x) where F_y != 0, the n-th derivative of y has a
closed-form expansion over two-dimensional partitions with exact integer
coefficients.  This package builds, renders, counts and numerically evaluates
that expansion, verifies it against a brute-force total-derivative engine,
and reproduces the coefficient and term-count errors of the 1974
Comtet-Fiolet publication of the formula.
"""

from .counting import (
    TruncatedSeries,
    cf_term_count,
    log_series,
    series_table,
    term_count_enum,
    term_count_gf,
)
from .expressions import (
    ExpressionSyntaxError,
    differentiate,
    evaluate,
    mixed_partial,
    parse_expression,
)
from .formula import (
    CfNotation,
    DerivativeFormula,
    FormulaTerm,
    build_formula,
    cf_notation,
    cf_original_coefficient,
    formula_from_json,
    render,
    required_derivatives,
)
from .numeric import (
    ConvergenceError,
    DerivativeTable,
    EvalConfig,
    FiniteDifferenceCheck,
    SingularPointError,
    derivative_table,
    evaluate_formula,
    finite_difference_check,
    implicit_solve,
)
from .oracle import (
    ComparisonReport,
    SymbolicExpr,
    brute_force_expansion,
    compare_with_formula,
    faa_di_bruno_expansion,
    formula_to_expr,
    monomial,
    total_derivative,
)
from .partitions import (
    Partition2D,
    faa_di_bruno_coefficient,
    formula_partitions,
    lex_compare,
    lower_x,
    lower_y,
    partition_coefficient,
    partitions_1d,
    partitions_2d,
)

__version__ = "0.1.0"

__all__ = [
    "CfNotation",
    "ComparisonReport",
    "ConvergenceError",
    "DerivativeFormula",
    "DerivativeTable",
    "EvalConfig",
    "ExpressionSyntaxError",
    "FiniteDifferenceCheck",
    "FormulaTerm",
    "Partition2D",
    "SingularPointError",
    "SymbolicExpr",
    "TruncatedSeries",
    "brute_force_expansion",
    "build_formula",
    "cf_notation",
    "cf_original_coefficient",
    "cf_term_count",
    "compare_with_formula",
    "derivative_table",
    "differentiate",
    "evaluate",
    "evaluate_formula",
    "faa_di_bruno_coefficient",
    "faa_di_bruno_expansion",
    "finite_difference_check",
    "formula_from_json",
    "formula_partitions",
    "formula_to_expr",
    "implicit_solve",
    "lex_compare",
    "log_series",
    "lower_x",
    "lower_y",
    "mixed_partial",
    "monomial",
    "parse_expression",
    "partition_coefficient",
    "partitions_1d",
    "partitions_2d",
    "render",
    "required_derivatives",
    "series_table",
    "term_count_enum",
    "term_count_gf",
    "total_derivative",
]

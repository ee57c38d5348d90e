"""Exact non-commutative power series.

Sparse integer polynomials over the free associative algebra, truncated
series with inversion and fixed-point solving, the Catalan polynomial
families d_n / c_n / u_n with their lattice-walk oracles, and the Jacobi
quasideterminant expansion with its Schroeder counts.
"""

from . import families, quasidet, symbols, walks
from .freealg import (
    EMPTY_WORD,
    NcPolynomial,
    ParseError,
    Variable,
    Word,
    from_json_terms,
    parse_polynomial,
    to_json_terms,
)
from .report import Report, Witness
from .series import (
    ConstantTermError,
    FixpointDivergenceError,
    OrderMismatchError,
    TruncatedSeries,
    fixpoint_solve,
    geometric_series,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY_WORD",
    "ConstantTermError",
    "FixpointDivergenceError",
    "NcPolynomial",
    "OrderMismatchError",
    "ParseError",
    "Report",
    "TruncatedSeries",
    "Variable",
    "Witness",
    "Word",
    "families",
    "fixpoint_solve",
    "from_json_terms",
    "geometric_series",
    "parse_polynomial",
    "quasidet",
    "symbols",
    "to_json_terms",
    "walks",
]

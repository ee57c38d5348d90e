"""Jacobi-matrix walk expansions, Schroeder counts, and the specialization."""

import pytest

from freeseries import symbols
from freeseries.families import D_series
from freeseries.freealg import NcPolynomial, parse_polynomial
from freeseries.quasidet import (
    JacobiSpec,
    count_closed_walks,
    d_series_specialization,
    entry_variable,
    schroeder_counts,
    specialize_to_D,
    t_inv_series,
    t_poly,
    t_series,
    verify_index_bound,
    verify_mutual_inverse,
)
from freeseries.series import TruncatedSeries

from fixtures import T_LISTINGS


def test_entry_grading():
    assert entry_variable(2, 2).degree == 2
    assert entry_variable(1, 2).degree == 1
    assert entry_variable(3, 2).degree == 1


def test_t1_fixture():
    expected = parse_polynomial(T_LISTINGS[1])
    assert t_poly(1) == expected
    assert t_poly(1).canonical_string() == expected.canonical_string()
    assert t_poly(1).monomial_count() == 2


def test_t2_fixture():
    expected = parse_polynomial(T_LISTINGS[2])
    assert t_poly(2) == expected
    assert t_poly(2).monomial_count() == 6


def test_t3_count_is_large_schroeder():
    assert t_poly(3).monomial_count() == 22


def test_t_homogeneity():
    for n in range(1, 7):
        p = t_poly(n)
        assert p.is_homogeneous()
        assert p.degree == 2 * n


def test_t_inv_series_trivial_orders():
    spec = JacobiSpec.generic()
    assert t_inv_series(spec, 0) == TruncatedSeries.one(0)
    assert t_series(spec, 1) == TruncatedSeries.one(1)  # no odd or degree-1 walks


def test_t_series_low_degrees():
    spec = JacobiSpec.generic()
    low = t_series(spec, 2)
    assert low.homogeneous_component(0) == NcPolynomial.one()
    assert low.homogeneous_component(2) == -parse_polynomial(T_LISTINGS[1])


def test_mutual_inverse():
    spec = JacobiSpec.generic()
    for order in (8, 10):
        t = t_series(spec, order)
        t_inv = t_inv_series(spec, order)
        assert t * t_inv == TruncatedSeries.one(order)
        assert t_inv * t == TruncatedSeries.one(order)
    assert verify_mutual_inverse(10).passed


def test_schroeder_counts_generic():
    counts = schroeder_counts(5)
    assert counts == [2, 6, 22, 90, 394]
    assert counts == [count_closed_walks(2 * n) for n in range(1, 6)]


def test_schroeder_counts_zero_diag():
    counts = schroeder_counts(5, zero_diag_first=True)
    assert counts == [1, 3, 11, 45, 197]
    assert counts == [count_closed_walks(2 * n, True) for n in range(1, 6)]


def test_zero_diag_counts_match_striking_a11_from_the_listings():
    # removing every monomial containing a_{1,1} from the explicit t_1, t_2
    a11 = entry_variable(1, 1)
    for n, expected in ((1, 1), (2, 3)):
        t_n = parse_polynomial(T_LISTINGS[n])
        kept = NcPolynomial(
            (word, coeff) for word, coeff in t_n.items() if a11 not in word.letters
        )
        assert kept.monomial_count() == expected
        assert t_poly(n, JacobiSpec.generic(zero_diag_first=True)) == kept


def test_entry_degree_validation():
    bad = JacobiSpec.uniform(
        NcPolynomial.monomial(symbols.a),  # degree 1 on the diagonal
        NcPolynomial.monomial(symbols.a),
        NcPolynomial.monomial(symbols.b),
    )
    with pytest.raises(ValueError):
        t_inv_series(bad, 4)


def test_specialization_recovers_D():
    spec = d_series_specialization()
    assert t_inv_series(spec, 4) == D_series(4)
    assert t_inv_series(spec, 4).homogeneous_component(2) == NcPolynomial.monomial(symbols.x)
    report = specialize_to_D(12)
    assert report.passed, report.line()
    assert specialize_to_D(0).passed


def test_specialized_t_series_identity():
    spec = d_series_specialization()
    order = 10
    a = NcPolynomial.monomial(symbols.a)
    b = NcPolynomial.monomial(symbols.b)
    x = NcPolynomial.monomial(symbols.x)
    expanded = t_inv_series(spec, order)
    rhs = TruncatedSeries(NcPolynomial.one() - x + a * b, order) - a * expanded * b
    assert t_series(spec, order) == rhs


def test_index_bound_is_invisible():
    spec = JacobiSpec.generic()
    for order in (6, 10):
        assert t_inv_series(spec, order, index_margin=2) == t_inv_series(spec, order)
        assert t_series(spec, order, index_margin=2) == t_series(spec, order)
    assert verify_index_bound(10).passed

"""The d/c/u families, their fixtures, and the identity verifiers."""

import pytest

from freeseries import symbols
from freeseries.families import (
    D_series,
    U_series,
    c_poly,
    catalan,
    d_poly,
    specialize_u_x1,
    substitute_commutator,
    u_poly,
    verify_bridge,
    verify_eq2,
    verify_eq3_sec2,
    verify_inverse_extraction,
    verify_remark5,
    verify_theorem1,
    verify_theorem4,
)
from freeseries.freealg import NcPolynomial, parse_polynomial
from freeseries.series import TruncatedSeries, fixpoint_solve, geometric_series

from fixtures import D3_COMMUTATOR, D_LISTINGS, GEOMETRIC_INVERSE_4, U_LISTINGS, U_X1_LISTINGS

PA = NcPolynomial.monomial(symbols.a)
PB = NcPolynomial.monomial(symbols.b)
PX = NcPolynomial.monomial(symbols.x)


def test_catalan_recurrence_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert catalan(0) == 1
    assert catalan(4) == 14
    assert catalan(7) == 429


def test_catalan_against_binomial_formula():
    import math

    for n in range(15):
        assert catalan(n) == math.comb(2 * n, n) // (n + 1)


def test_d_fixtures():
    for n, listing in D_LISTINGS.items():
        expected = parse_polynomial(listing)
        assert d_poly(n) == expected
        assert d_poly(n).canonical_string() == expected.canonical_string()


def test_d_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        d_poly(0)


def test_d_homogeneity_counts_and_unit_coefficients():
    for n in range(1, 11):
        p = d_poly(n)
        assert p.is_homogeneous()
        assert p.degree == (2 * n - 2 if n > 1 else 0)
        assert p.monomial_count() == catalan(n - 1)
        assert all(c == 1 for _, c in p.items())


def test_c_poly_examples():
    assert c_poly(1) == PA * PB
    assert c_poly(2) == NcPolynomial.monomial((symbols.a, symbols.x, symbols.b))
    assert substitute_commutator(c_poly(2)) == parse_polynomial("a a b b - a b a b")
    for n in range(1, 7):
        assert c_poly(n).is_homogeneous()
        assert c_poly(n).degree == 2 * n


def test_substitute_commutator_on_d3():
    assert substitute_commutator(d_poly(3)) == parse_polynomial(D3_COMMUTATOR)


def test_D_series_small_orders():
    assert D_series(0) == TruncatedSeries.one(0)
    assert D_series(2) == TruncatedSeries(NcPolynomial.one() + PX, 2)
    expect = NcPolynomial.one() + PX + parse_polynomial(D_LISTINGS[3])
    assert D_series(4) == TruncatedSeries(expect, 4)


def test_D_series_solves_its_equation_by_fixpoint():
    def step(s):
        return 1 + s * (PX - PA * PB) + s * PA * s * PB

    for order in range(0, 13, 3):
        assert fixpoint_solve(step, order) == D_series(order)
    assert fixpoint_solve(step, 12) == D_series(12)


def test_u_fixtures():
    for n, listing in U_LISTINGS.items():
        expected = parse_polynomial(listing)
        assert u_poly(n) == expected
        assert u_poly(n).canonical_string() == expected.canonical_string()


def test_U_series_components():
    U = U_series(4)
    assert U.homogeneous_component(0) == NcPolynomial.one()
    assert U.homogeneous_component(2) == parse_polynomial("b a + x")
    assert U.homogeneous_component(4) == parse_polynomial(U_LISTINGS[3])


def test_u_homogeneity_counts_and_positivity():
    for n in range(1, 9):
        p = u_poly(n)
        assert p.is_homogeneous()
        assert p.degree == (2 * n - 2 if n > 1 else 0)
        assert p.monomial_count() == catalan(n)
        assert all(c == 1 for _, c in p.items())


def test_u_x1_fixtures():
    for n, listing in U_X1_LISTINGS.items():
        assert specialize_u_x1(n) == parse_polynomial(listing)


def test_remark5_small_cases():
    assert substitute_commutator(u_poly(2)) == PA * PB
    assert substitute_commutator(u_poly(3)) == PA * PA * PB * PB


def test_verify_theorem1():
    assert verify_theorem1(0).passed
    assert verify_theorem1(4).passed
    assert verify_theorem1(12).passed
    # the degree-4 inverse is exactly the frozen expansion
    acc = substitute_commutator(c_poly(1)) + substitute_commutator(c_poly(2))
    lhs = TruncatedSeries.one(4) - TruncatedSeries(acc, 4)
    assert lhs == TruncatedSeries(parse_polynomial(GEOMETRIC_INVERSE_4), 4)
    assert lhs == geometric_series(4).inverse()


def test_verify_eq2_and_symmetric_form():
    assert verify_eq2(12).passed
    assert verify_eq3_sec2(12).passed


def test_verify_theorem4_and_bridge():
    assert verify_theorem4(12).passed
    assert verify_bridge(10).passed


def test_verify_remark5():
    assert verify_remark5(12).passed


def test_verify_extraction():
    assert verify_inverse_extraction(0).passed
    report = verify_inverse_extraction(6)
    assert report.passed
    inverse = (TruncatedSeries.one(6) - PA * D_series(6) * PB).inverse()
    assert inverse.homogeneous_component(4) == parse_polynomial("a b a b + a x b")
    assert verify_inverse_extraction(12).passed


def test_reports_carry_witnesses_on_failure():
    from freeseries.report import compare

    got = TruncatedSeries(NcPolynomial.one() + PX, 4)
    want = TruncatedSeries(NcPolynomial.one() + 2 * PX + PA * PB, 4)
    report = compare("example", got, want, 0.0)
    assert not report.passed
    assert report.witness is not None
    assert report.witness.degree == 2
    # x precedes a b in canonical order (shorter word first)
    assert report.witness.word == "x"
    assert report.witness.expected == "2"
    assert report.witness.actual == "1"

"""Shared front door for the CLI and the HTTP service.

Validates family/option combinations, maps suite names to verifier runs,
and builds count tables whose expected columns are computed locally (the
Catalan recurrence, the independent walk census) rather than hardcoded.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import families, quasidet, symbols, walks
from .freealg import NcPolynomial
from .report import Report

FAMILY_NAMES = ("d", "c", "u", "t")
COUNT_FAMILIES = ("d", "u", "t")
X_OPTIONS = ("keep", "comm", "one")
SUITES = (
    "theorem1",
    "eq2",
    "eq3-sec2",
    "theorem4",
    "remark5",
    "extraction",
    "involution",
    "dyck",
    "quasidet",
    "all",
)

#: above this total degree the run time grows combinatorially
EXPENSIVE_DEGREE = 24


class UsageError(ValueError):
    """An invalid family, suite, or option combination."""


def family_polynomial(
    family: str, n: int, x: str = "keep", zero_diag: bool = False
) -> NcPolynomial:
    if family not in FAMILY_NAMES:
        raise UsageError(f"unknown family {family!r}; expected one of {FAMILY_NAMES}")
    if x not in X_OPTIONS:
        raise UsageError(f"unknown x option {x!r}; expected one of {X_OPTIONS}")
    if n < 1:
        raise UsageError("n must be >= 1")
    if family == "t":
        if x != "keep":
            raise UsageError("the x option applies to the d, c and u families only")
        return quasidet.t_poly(n, quasidet.JacobiSpec.generic(zero_diag))
    if zero_diag:
        raise UsageError("--zero-diag applies to the t family only")
    if family == "d":
        poly = families.d_poly(n)
    elif family == "c":
        poly = families.c_poly(n)
    else:
        poly = families.u_poly(n)
    if x == "comm":
        return families.substitute_commutator(poly)
    if x == "one":
        return poly.substitute({symbols.x: 1})
    return poly


def family_degree(family: str, n: int) -> int:
    """Total degree of the requested polynomial, for cost warnings."""
    return 2 * n if family in ("c", "t") else 2 * n - 2


def run_suite(suite: str, degree: int) -> list[Report]:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if degree < 0:
        raise UsageError("degree must be >= 0")
    if suite == "all":
        reports: list[Report] = []
        for name in SUITES[:-1]:
            reports.extend(run_suite(name, degree))
        return reports
    if suite == "theorem1":
        return [families.verify_theorem1(degree)]
    if suite == "eq2":
        return [families.verify_eq2(degree)]
    if suite == "eq3-sec2":
        return [families.verify_eq3_sec2(degree)]
    if suite == "theorem4":
        return [families.verify_theorem4(degree), families.verify_bridge(degree)]
    if suite == "remark5":
        return [families.verify_remark5(degree)]
    if suite == "extraction":
        return [families.verify_inverse_extraction(degree)]
    if suite == "involution":
        return walks.verify_involution_suite(max(1, degree // 2))
    if suite == "dyck":
        return walks.verify_dyck_reduction(degree)
    return [
        quasidet.verify_mutual_inverse(degree),
        quasidet.specialize_to_D(degree),
        quasidet.verify_index_bound(degree),
    ]


@dataclass(frozen=True)
class CountRow:
    n: int
    count: int
    expected: int
    match: bool


def counts_table(family: str, n_max: int, zero_diag: bool = False) -> list[CountRow]:
    if family not in COUNT_FAMILIES:
        raise UsageError(f"counts supports families {COUNT_FAMILIES}, got {family!r}")
    if n_max < 1:
        raise UsageError("n_max must be >= 1")
    if zero_diag and family != "t":
        raise UsageError("--zero-diag applies to the t family only")
    rows = []
    if family == "t":
        counts = quasidet.schroeder_counts(n_max, zero_diag)
        for n, count in enumerate(counts, start=1):
            expected = quasidet.count_closed_walks(2 * n, zero_diag)
            rows.append(CountRow(n, count, expected, count == expected))
    else:
        for n in range(1, n_max + 1):
            if family == "d":
                count = families.d_poly(n).monomial_count()
                expected = families.catalan(n - 1)
            else:
                count = families.u_poly(n).monomial_count()
                expected = families.catalan(n)
            rows.append(CountRow(n, count, expected, count == expected))
    return rows

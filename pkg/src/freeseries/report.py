"""Structured pass/fail reports with mismatch witnesses.

Every identity verifier returns a Report rather than a bare boolean: a
failing check always carries the first offending degree, the canonically
smallest offending word, and both coefficients, which is what you need to
debug a symbolic identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter

from .freealg import NcPolynomial
from .series import TruncatedSeries


@dataclass(frozen=True)
class Witness:
    degree: int
    word: str
    expected: str
    actual: str


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    witness: Witness | None
    elapsed: float

    def line(self, timings: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}"
        if self.witness is not None:
            w = self.witness
            out += f" [degree={w.degree} word={w.word!r} expected={w.expected} actual={w.actual}]"
        if timings:
            out += f" ({self.elapsed:.3f}s)"
        return out


def _as_polynomial(value: TruncatedSeries | NcPolynomial) -> NcPolynomial:
    return value.body if isinstance(value, TruncatedSeries) else value


def first_mismatch(
    got: TruncatedSeries | NcPolynomial, want: TruncatedSeries | NcPolynomial
) -> Witness | None:
    """Locate the lowest-degree, canonically first disagreement, if any."""
    got_poly = _as_polynomial(got)
    want_poly = _as_polynomial(want)
    diff = got_poly - want_poly
    if not diff:
        return None
    degree = min(w.degree for w, _ in diff.items())
    word = min(
        (w for w, _ in diff.items() if w.degree == degree),
        key=lambda w: w.sort_key(),
    )
    return Witness(
        degree,
        word.text(),
        str(want_poly.coefficient(word)),
        str(got_poly.coefficient(word)),
    )


def compare(
    name: str,
    got: TruncatedSeries | NcPolynomial,
    want: TruncatedSeries | NcPolynomial,
    started: float,
) -> Report:
    witness = first_mismatch(got, want)
    return Report(name, witness is None, witness, perf_counter() - started)

"""Walk expansions of the (1,1) quasideterminant of I - A for Jacobi A.

A is tridiagonal: entries a_{ij} vanish when |i - j| > 1, diagonal entries
weigh 2 and off-diagonal entries weigh 1.  With T = I - A, the inverse of
|T|_11 expands as 1 plus the sum over all closed band walks at index 1 of
the ordered entry products, graded by total degree; |T|_11 itself is
1 - a_{11} minus the walks confined to indices above 1.  t_n is the
homogeneous layer of degree 2n of the inverse; with generic entries its
monomial count is the n-th large Schroeder number, and 1, 3, 11, ... with
a_{11} = 0.

The matrix is infinite, but truncation at degree N only ever sees indices
up to N//2 + 1 because reaching index m costs degree m-1 each way; the
index_margin argument exists so tests can confirm that raising the bound
changes nothing.  Specializing a_ii = x - ab, a_{i,i+1} = a, a_{i+1,i} = b
turns the inverse into the series D.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from . import symbols
from .families import D_series
from .freealg import NcPolynomial, Variable
from .report import Report, first_mismatch
from .series import TruncatedSeries

_DIAG_DEGREE = 2
_OFF_DEGREE = 1


def entry_variable(row: int, col: int) -> Variable:
    """Generic matrix-entry symbol with the band grading."""
    return Variable("a", (row, col), _DIAG_DEGREE if row == col else _OFF_DEGREE)


@dataclass(frozen=True, eq=False)
class JacobiSpec:
    """Tridiagonal entries, position by position.

    diag(i) is a_{ii}, upper(i) is a_{i,i+1}, lower(i) is a_{i+1,i}.  Each
    entry is either zero or homogeneous of the band degree (2 on the
    diagonal, 1 off it).
    """

    diag: Callable[[int], NcPolynomial]
    upper: Callable[[int], NcPolynomial]
    lower: Callable[[int], NcPolynomial]

    @classmethod
    def generic(cls, zero_diag_first: bool = False) -> "JacobiSpec":
        """Entries as generic indexed symbols, optionally with a_{11} = 0."""

        def diag(i: int) -> NcPolynomial:
            if zero_diag_first and i == 1:
                return NcPolynomial.zero()
            return NcPolynomial.monomial(entry_variable(i, i))

        return cls(
            diag,
            lambda i: NcPolynomial.monomial(entry_variable(i, i + 1)),
            lambda i: NcPolynomial.monomial(entry_variable(i + 1, i)),
        )

    @classmethod
    def uniform(
        cls,
        diag: NcPolynomial | int,
        upper: NcPolynomial | int,
        lower: NcPolynomial | int,
    ) -> "JacobiSpec":
        """The same entry at every position along each band."""
        polys = []
        for value in (diag, upper, lower):
            coerced = NcPolynomial._coerce(value)
            if coerced is None:
                raise TypeError("entries must be polynomials or integers")
            polys.append(coerced)
        d, u, lo = polys
        return cls(lambda i: d, lambda i: u, lambda i: lo)


def d_series_specialization() -> JacobiSpec:
    """a_ii = x - ab, a_{i,i+1} = a, a_{i+1,i} = b."""
    a = NcPolynomial.monomial(symbols.a)
    b = NcPolynomial.monomial(symbols.b)
    x = NcPolynomial.monomial(symbols.x)
    return JacobiSpec.uniform(x - a * b, a, b)


class _Entries:
    """Validating cache over one spec's entry callables."""

    def __init__(self, spec: JacobiSpec):
        self._spec = spec
        self._cache: dict[tuple[str, int], NcPolynomial] = {}

    def get(self, kind: str, i: int) -> NcPolynomial:
        key = (kind, i)
        poly = self._cache.get(key)
        if poly is None:
            poly = getattr(self._spec, kind)(i)
            want = _DIAG_DEGREE if kind == "diag" else _OFF_DEGREE
            if poly and not (poly.is_homogeneous() and poly.degree == want):
                raise ValueError(
                    f"{kind} entry at index {i} must be zero or homogeneous of degree {want}"
                )
            self._cache[key] = poly
        return poly


def t_inv_series(spec: JacobiSpec, order: int, index_margin: int = 0) -> TruncatedSeries:
    """1 plus the degree-graded sum over closed band walks at index 1."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    entries = _Entries(spec)
    top = max(1, order // 2 + 1 + index_margin)
    # layers[d][j] sums the weights of walks from 1 to j with total degree d
    layers: list[dict[int, NcPolynomial]] = [{1: NcPolynomial.one()}]
    total = NcPolynomial.one()
    for d in range(1, order + 1):
        previous = layers[d - 1]
        two_back = layers[d - 2] if d >= 2 else {}
        layer: dict[int, NcPolynomial] = {}
        for j in range(1, top + 1):
            acc = NcPolynomial.zero()
            from_left = previous.get(j - 1)
            if from_left is not None:
                acc = acc + from_left * entries.get("upper", j - 1)
            from_right = previous.get(j + 1)
            if from_right is not None:
                acc = acc + from_right * entries.get("lower", j)
            stayed = two_back.get(j)
            if stayed is not None:
                acc = acc + stayed * entries.get("diag", j)
            if acc:
                layer[j] = acc
        layers.append(layer)
        home = layer.get(1)
        if home is not None:
            total = total + home
    return TruncatedSeries(total, order)


def t_series(spec: JacobiSpec, order: int, index_margin: int = 0) -> TruncatedSeries:
    """1 - a_{11} minus the walks that stay strictly above index 1 in between."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    entries = _Entries(spec)
    total = NcPolynomial.one() - entries.get("diag", 1)
    if order >= 2:
        top = max(2, order // 2 + 1 + index_margin)
        up_first = entries.get("upper", 1)
        down_last = entries.get("lower", 1)
        layers: list[dict[int, NcPolynomial]] = [{2: NcPolynomial.one()}]
        budget = order - 2  # the wrapping steps 1 -> 2 and 2 -> 1 cost 2
        home = layers[0].get(2)
        if home is not None:
            total = total - up_first * home * down_last
        for d in range(1, budget + 1):
            previous = layers[d - 1]
            two_back = layers[d - 2] if d >= 2 else {}
            layer: dict[int, NcPolynomial] = {}
            for j in range(2, top + 1):
                acc = NcPolynomial.zero()
                from_left = previous.get(j - 1)
                if from_left is not None and j - 1 >= 2:
                    acc = acc + from_left * entries.get("upper", j - 1)
                from_right = previous.get(j + 1)
                if from_right is not None:
                    acc = acc + from_right * entries.get("lower", j)
                stayed = two_back.get(j)
                if stayed is not None:
                    acc = acc + stayed * entries.get("diag", j)
                if acc:
                    layer[j] = acc
            layers.append(layer)
            home = layer.get(2)
            if home is not None:
                total = total - up_first * home * down_last
    return TruncatedSeries(total, order)


def t_poly(n: int, spec: JacobiSpec | None = None) -> NcPolynomial:
    """Homogeneous layer of degree 2n of the inverse expansion."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if spec is None:
        spec = JacobiSpec.generic()
    return t_inv_series(spec, 2 * n).homogeneous_component(2 * n)


def schroeder_counts(n_max: int, zero_diag_first: bool = False) -> list[int]:
    """Monomial counts of t_1 .. t_{n_max}, computed from the polynomials."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    series = t_inv_series(JacobiSpec.generic(zero_diag_first), 2 * n_max)
    return [
        series.homogeneous_component(2 * k).monomial_count() for k in range(1, n_max + 1)
    ]


def count_closed_walks(degree: int, zero_diag_first: bool = False) -> int:
    """Independent census of the band walks behind t_n, by pure counting.

    Walks start and end at index 1; up and down steps cost 1, staying costs
    2, and staying at index 1 is disallowed when zero_diag_first is set.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    memo: dict[tuple[int, int], int] = {}

    def walks(j: int, budget: int) -> int:
        if budget == 0:
            return 1 if j == 1 else 0
        if j - 1 > budget:
            return 0
        key = (j, budget)
        cached = memo.get(key)
        if cached is None:
            cached = walks(j + 1, budget - 1)
            if j >= 2:
                cached += walks(j - 1, budget - 1)
            if budget >= 2 and not (zero_diag_first and j == 1):
                cached += walks(j, budget - 2)
            memo[key] = cached
        return cached

    return walks(1, degree)


# -- verifiers -------------------------------------------------------------------


def verify_mutual_inverse(order: int, spec: JacobiSpec | None = None) -> Report:
    """The two walk expansions multiply to 1 in both orders."""
    started = perf_counter()
    if spec is None:
        spec = JacobiSpec.generic()
    t = t_series(spec, order)
    t_inv = t_inv_series(spec, order)
    one = TruncatedSeries.one(order)
    witness = first_mismatch(t * t_inv, one) or first_mismatch(t_inv * t, one)
    return Report("quasidet-inverse", witness is None, witness, perf_counter() - started)


def specialize_to_D(order: int) -> Report:
    """Under a_ii = x-ab, a_{i,i+1} = a, a_{i+1,i} = b the inverse expansion
    is the series D and |T|_11 = 1 - x + ab - aDb."""
    started = perf_counter()
    spec = d_series_specialization()
    expanded = t_inv_series(spec, order)
    witness = first_mismatch(expanded, D_series(order))
    if witness is None:
        a = NcPolynomial.monomial(symbols.a)
        b = NcPolynomial.monomial(symbols.b)
        x = NcPolynomial.monomial(symbols.x)
        rhs = TruncatedSeries(NcPolynomial.one() - x + a * b, order) - a * expanded * b
        witness = first_mismatch(t_series(spec, order), rhs)
    return Report("quasidet-specialization", witness is None, witness, perf_counter() - started)


def verify_index_bound(order: int, spec: JacobiSpec | None = None) -> Report:
    """Raising the derived index bound changes nothing."""
    started = perf_counter()
    if spec is None:
        spec = JacobiSpec.generic()
    witness = first_mismatch(
        t_inv_series(spec, order, index_margin=2), t_inv_series(spec, order)
    )
    return Report("quasidet-index-bound", witness is None, witness, perf_counter() - started)

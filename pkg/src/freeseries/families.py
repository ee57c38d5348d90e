"""The named polynomial families and their identity verifiers.

d_n is defined by the recurrence d_1 = 1,
d_n = d_{n-1} x + sum_{k=2}^{n-1} d_{n-k} a d_k b, and is homogeneous of
degree 2n-2 with Catalan(n-1) monomials, all with coefficient 1.
c_n = a d_n b.  D = sum d_n solves D = 1 + D(x-ab) + DaDb, and U solves
U = (1 + aUb)(1 + (x-ab+ba)U); its homogeneous layer of degree 2n-2 is u_n.

Substituting x -> ab-ba collapses everything: 1 - sum c_n becomes the
two-sided inverse of the geometric series 1 + ab + a^2b^2 + ..., and U
collapses to that geometric series itself.  The verify_* functions check
these identities at a chosen truncation order and return Reports with a
mismatch witness on failure.
"""

from __future__ import annotations

from functools import lru_cache
from time import perf_counter

from . import symbols
from .freealg import NcPolynomial
from .report import Report, Witness, first_mismatch
from .series import TruncatedSeries, fixpoint_solve, geometric_series

_A = NcPolynomial.monomial(symbols.a)
_B = NcPolynomial.monomial(symbols.b)
_X = NcPolynomial.monomial(symbols.x)
_AB = _A * _B
_BA = _B * _A

#: image of x in the collapsing substitution
COMMUTATOR = _AB - _BA

#: the fixed alphabet with its grading (a and b weigh 1, x weighs 2)
ALPHABET = (symbols.a, symbols.b, symbols.x)

_catalan_cache = [1]


def catalan(n: int) -> int:
    """n-th Catalan number via the convolution recurrence C_{m+1} = sum C_i C_{m-i}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_catalan_cache) <= n:
        m = len(_catalan_cache) - 1
        _catalan_cache.append(
            sum(_catalan_cache[i] * _catalan_cache[m - i] for i in range(m + 1))
        )
    return _catalan_cache[n]


@lru_cache(maxsize=None)
def d_poly(n: int) -> NcPolynomial:
    """d_n from the defining recurrence; homogeneous of degree 2n-2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return NcPolynomial.one()
    total = d_poly(n - 1) * _X
    for k in range(2, n):
        total = total + d_poly(n - k) * _A * d_poly(k) * _B
    return total


def c_poly(n: int) -> NcPolynomial:
    """c_n = a d_n b; homogeneous of degree 2n."""
    return _A * d_poly(n) * _B


def substitute_commutator(poly: NcPolynomial) -> NcPolynomial:
    """Apply x -> ab - ba."""
    return poly.substitute({symbols.x: COMMUTATOR})


@lru_cache(maxsize=None)
def D_series(order: int) -> TruncatedSeries:
    """Sum of all d_n of degree at most the order."""
    total = NcPolynomial.zero()
    n = 1
    while 2 * n - 2 <= order:
        total = total + d_poly(n)
        n += 1
    return TruncatedSeries(total, order)


@lru_cache(maxsize=None)
def U_series(order: int) -> TruncatedSeries:
    """The unique fixpoint of S -> (1 + aSb)(1 + (x-ab+ba)S) at this order."""
    left_factor = _X - _AB + _BA

    def step(s: TruncatedSeries) -> TruncatedSeries:
        return (1 + _A * s * _B) * (1 + left_factor * s)

    return fixpoint_solve(step, order)


def u_poly(n: int) -> NcPolynomial:
    """Homogeneous layer of U of degree 2n-2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    degree = 2 * n - 2
    return U_series(degree).homogeneous_component(degree)


def specialize_u_x1(n: int) -> NcPolynomial:
    """u_n with x set to 1; no longer homogeneous."""
    return u_poly(n).substitute({symbols.x: 1})


# -- verifiers ---------------------------------------------------------------


def verify_theorem1(order: int) -> Report:
    """1 - sum c_n(a,b,ab-ba) times the geometric series is 1, in both orders."""
    started = perf_counter()
    acc = NcPolynomial.zero()
    n = 1
    while 2 * n <= order:
        acc = acc + substitute_commutator(c_poly(n))
        n += 1
    lhs = TruncatedSeries.one(order) - TruncatedSeries(acc, order)
    geometric = geometric_series(order)
    one = TruncatedSeries.one(order)
    witness = first_mismatch(lhs * geometric, one) or first_mismatch(geometric * lhs, one)
    return Report("theorem1", witness is None, witness, perf_counter() - started)


def verify_eq2(order: int) -> Report:
    """D = 1 + D(x-ab) + DaDb."""
    started = perf_counter()
    D = D_series(order)
    rhs = 1 + D * (_X - _AB) + D * _A * D * _B
    witness = first_mismatch(D, rhs)
    return Report("eq2", witness is None, witness, perf_counter() - started)


def verify_eq3_sec2(order: int) -> Report:
    """The symmetric form D = 1 + (x - ab + aDb)D."""
    started = perf_counter()
    D = D_series(order)
    rhs = 1 + (TruncatedSeries(_X - _AB, order) + _A * D * _B) * D
    witness = first_mismatch(D, rhs)
    return Report("eq3-sec2", witness is None, witness, perf_counter() - started)


def verify_theorem4(order: int) -> Report:
    """U = (1 + aUb)(1 + (x-ab+ba)U)."""
    started = perf_counter()
    U = U_series(order)
    rhs = (1 + _A * U * _B) * (1 + (_X - _AB + _BA) * U)
    witness = first_mismatch(U, rhs)
    return Report("theorem4", witness is None, witness, perf_counter() - started)


def verify_bridge(order: int) -> Report:
    """D = U (-baU)*, the identity connecting the two families."""
    started = perf_counter()
    U = U_series(order)
    rhs = U * (-(_BA * U)).star()
    witness = first_mismatch(D_series(order), rhs)
    return Report("bridge-D-U", witness is None, witness, perf_counter() - started)


def verify_remark5(order: int) -> Report:
    """Substituting x -> ab - ba collapses U to the geometric series."""
    started = perf_counter()
    collapsed = TruncatedSeries(substitute_commutator(U_series(order).body), order)
    witness = first_mismatch(collapsed, geometric_series(order))
    return Report("remark5", witness is None, witness, perf_counter() - started)


def verify_inverse_extraction(order: int) -> Report:
    """(1 - aDb)^{-1} = 1 + aUb, and every nonconstant term of the inverse
    starts with a and ends with b (the fact that makes u_n extractable)."""
    started = perf_counter()
    D = D_series(order)
    inverse = (TruncatedSeries.one(order) - _A * D * _B).inverse()
    rhs = 1 + _A * U_series(order) * _B
    witness = first_mismatch(inverse, rhs)
    if witness is None:
        for word, coeff in inverse.body.sorted_terms():
            if word.degree == 0:
                continue
            if word.letters[0] != symbols.a or word.letters[-1] != symbols.b:
                witness = Witness(word.degree, word.text(), "0", str(coeff))
                break
    return Report("extraction", witness is None, witness, perf_counter() - started)

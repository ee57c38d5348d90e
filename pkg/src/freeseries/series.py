"""Truncated formal power series over the free algebra.

A series is a polynomial together with a truncation order N; every
operation discards terms of degree above N, so arithmetic happens in the
quotient by degree.  Mixing two series of different orders is an error
rather than a silent coercion.
"""

from __future__ import annotations

from typing import Callable

from . import symbols
from .freealg import NcPolynomial, Variable, Word


class OrderMismatchError(ValueError):
    """Two series of different truncation orders were combined."""


class ConstantTermError(ValueError):
    """The constant term does not satisfy the operation's precondition."""


class FixpointDivergenceError(RuntimeError):
    """The iterated map failed to stabilize; it is not degree-raising."""


class TruncatedSeries:
    __slots__ = ("body", "order")

    def __init__(self, body: NcPolynomial | int, order: int):
        order = int(order)
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if isinstance(body, int):
            body = NcPolynomial.constant(body)
        elif not isinstance(body, NcPolynomial):
            raise TypeError(f"series body must be a polynomial, got {type(body).__name__}")
        if body.degree > order:
            body = NcPolynomial((w, c) for w, c in body.items() if w.degree <= order)
        self.body = body
        self.order = order

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(NcPolynomial.one(), order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(NcPolynomial.zero(), order)

    def _lift(self, other: object) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"series orders differ: {self.order} != {other.order}"
                )
            return other
        if isinstance(other, (int, NcPolynomial)):
            return TruncatedSeries(other, self.order)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(self.body + lifted.body, self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.body, self.order)

    def __sub__(self, other: object) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(self.body - lifted.body, self.order)

    def __rsub__(self, other: object) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(lifted.body - self.body, self.order)

    def __mul__(self, other: object) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(self.body.mul(lifted.body, self.order), self.order)

    def __rmul__(self, other: object) -> "TruncatedSeries":
        # other acts from the left; order matters
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(lifted.body.mul(self.body, self.order), self.order)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.body == other.body
        )

    def __bool__(self) -> bool:
        return bool(self.body)

    def __hash__(self) -> int:
        return hash((self.order, self.body))

    # -- queries ------------------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order of a series")
        return TruncatedSeries(self.body, order)

    def homogeneous_component(self, degree: int) -> NcPolynomial:
        if degree > self.order:
            raise ValueError(f"degree {degree} exceeds the truncation order {self.order}")
        return self.body.homogeneous_component(degree)

    def constant_term(self) -> int:
        return self.body.constant_term()

    # -- kernels ------------------------------------------------------------

    def star(self) -> "TruncatedSeries":
        """Geometric closure (1 - Z)^{-1} = 1 + Z + Z^2 + ... .

        Requires a zero constant term so that powers gain degree and the sum
        terminates at the truncation order.
        """
        if self.body.constant_term() != 0:
            raise ConstantTermError("star requires a zero constant term")
        result = TruncatedSeries.one(self.order)
        power = TruncatedSeries.one(self.order)
        for _ in range(self.order):
            power = power * self
            if not power:
                break
            result = result + power
        return result

    def inverse(self) -> "TruncatedSeries":
        """Two-sided inverse of a series whose constant term is +1 or -1."""
        constant = self.body.constant_term()
        if constant == 1:
            return (TruncatedSeries.one(self.order) - self).star()
        if constant == -1:
            return -((TruncatedSeries.one(self.order) + self).star())
        raise ConstantTermError("inverse requires constant term +1 or -1")

    def __str__(self) -> str:
        return f"order: {self.order}\n{self.body.canonical_string()}"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.body.canonical_string()!r}, order={self.order})"


def geometric_series(order: int, a: Variable | None = None, b: Variable | None = None) -> TruncatedSeries:
    """1 + ab + a^2 b^2 + ... truncated to the given order."""
    a = symbols.a if a is None else a
    b = symbols.b if b is None else b
    step = a.degree + b.degree
    terms = []
    n = 0
    while n * step <= order:
        terms.append((Word((a,) * n + (b,) * n), 1))
        n += 1
    return TruncatedSeries(NcPolynomial(terms), order)


def fixpoint_solve(
    step: Callable[[TruncatedSeries], TruncatedSeries], order: int
) -> TruncatedSeries:
    """Solve S = F(S) for a degree-raising map F by iterating from S = 1.

    Degree-raising means the degree-d part of F(S) reads only parts of S of
    degree below d, so iterates stabilize within order + 2 steps; failing to
    stabilize is reported as a contract violation by the caller's map.
    """
    current = TruncatedSeries.one(order)
    for _ in range(order + 2):
        nxt = step(current)
        if not isinstance(nxt, TruncatedSeries) or nxt.order != order:
            raise FixpointDivergenceError("the map must return a series of the same order")
        if nxt == current:
            return current
        current = nxt
    raise FixpointDivergenceError(
        f"no fixpoint after {order + 2} iterations; the map is not degree-raising"
    )

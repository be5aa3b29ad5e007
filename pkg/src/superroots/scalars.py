"""Exact scalars of the form a + b*lambda with rational a, b.

lambda is the deformation parameter of the three-parameter family of
rank-three supersystems; it is kept symbolic and assumed to avoid the
excluded values 0 and -1.  Every bilinear-form value that occurs in this
package lives in this ring, so all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbiguousSign, DivisionByZero, NonLinearQuotient

Q = Fraction

#: values of the parameter that are excluded throughout
EXCLUDED_LAMBDA = (Q(0), Q(-1))


def _q(x) -> Q:
    if isinstance(x, Q):
        return x
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        return Q(x)
    raise TypeError(f"not a rational: {x!r}")


@dataclass(frozen=True)
class Scalar:
    """const + lam * lambda, with Fraction coefficients."""

    const: Q = Q(0)
    lam: Q = Q(0)

    # -- construction -------------------------------------------------

    @staticmethod
    def of(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(_q(x), Q(0))

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.const + o.const, self.lam + o.lam)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.const, -self.lam)

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.of(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        o = Scalar.of(other)
        if self.lam and o.lam:
            raise NonLinearQuotient("product has a lambda^2 term")
        return Scalar(
            self.const * o.const,
            self.const * o.lam + self.lam * o.const,
        )

    __rmul__ = __mul__

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        """Exact zero test, valid for every admissible lambda.

        Raises AmbiguousSign when the answer would depend on lambda,
        i.e. when the expression vanishes at some admissible rational.
        """
        if self.lam == 0:
            return self.const == 0
        root = -self.const / self.lam
        if root in EXCLUDED_LAMBDA:
            return False
        raise AmbiguousSign(f"{self} vanishes at admissible lambda = {root}")

    def is_rational(self) -> bool:
        return self.lam == 0

    def as_integer(self) -> int:
        """Return self as a plain int, or raise ValueError."""
        if self.lam != 0 or self.const.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return int(self.const)

    def at(self, value) -> Q:
        """Evaluate at a concrete rational lambda."""
        v = _q(value)
        if v in EXCLUDED_LAMBDA:
            raise ValueError(f"lambda = {v} is excluded")
        return self.const + self.lam * v

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if self.lam == 0:
            return str(self.const)
        lam_part = "λ" if self.lam == 1 else ("-λ" if self.lam == -1 else f"{self.lam}·λ")
        if self.const == 0:
            return lam_part
        sign = "+" if self.lam > 0 else ""
        return f"{self.const}{sign}{lam_part}"


#: the symbolic parameter itself
LAMBDA = Scalar(Q(0), Q(1))
ZERO = Scalar()
ONE = Scalar(Q(1))


def scalar_div(x: Scalar, y: Scalar) -> Scalar:
    """Exact quotient x / y within the degree-one ring.

    Defined when y is a nonzero rational, or when x is a rational multiple
    of y.  Anything else would leave the ring and raises NonLinearQuotient.
    """
    x = Scalar.of(x)
    y = Scalar.of(y)
    if y.const == 0 and y.lam == 0:
        raise DivisionByZero("division by exact zero")
    if y.lam == 0:
        return Scalar(x.const / y.const, x.lam / y.const)
    # y carries lambda: quotient stays in the ring only if x = q*y, q rational
    q = x.lam / y.lam
    if x.const == q * y.const:
        return Scalar(q)
    raise NonLinearQuotient(f"({x}) / ({y}) is not of the form a + b·λ")

"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` holds the first ``order`` coefficients of a formal
power series in one variable z, i.e. the series reduced modulo ``z**order``.
Coefficients are :class:`fractions.Fraction` values, so every operation is
exact; floats are rejected outright.  Binary operations require operands of
equal order and raise :class:`OrderMismatchError` otherwise -- alignment is
only ever done through an explicit :meth:`TruncatedSeries.truncate`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class OrderMismatchError(ValueError):
    """Two series of different truncation orders were combined."""


class NonUnitDivisorError(ValueError):
    """Division by a series whose constant term is zero.

    Explicit monomial factors (z, 2z, ...) must be cancelled with
    :meth:`TruncatedSeries.shift` before dividing.
    """


class NotDivisibleError(ValueError):
    """A downward shift hit a nonzero coefficient below the shift amount."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact arithmetic only: got {type(value).__name__}")


class TruncatedSeries:
    """A power series known modulo z**order, with exact Fraction coefficients.

    Instances are immutable; all operations return new series and are pure,
    so values can be shared freely across threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        items = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = len(items)
        if order < 1:
            raise DomainError("order must be a positive integer")
        del items[order:]  # reducing explicit coefficients mod z**order is exact
        items.extend([_ZERO] * (order - len(items)))
        self._coeffs = tuple(items)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < len(self._coeffs):
            raise IndexError(
                f"coefficient z^{n} is outside the known range (order {self.order})"
            )
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs):
            if not c:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{n}" if c != 1 else f"z^{n}")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(z^{self.order})>"

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    # ------------------------------------------------------------------ ring ops

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            return TruncatedSeries(
                [x + y for x, y in zip(self._coeffs, other._coeffs)], self.order
            )
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        items = list(self._coeffs)
        items[0] += c
        return TruncatedSeries(items, self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-x for x in self._coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            return TruncatedSeries(
                [x - y for x, y in zip(self._coeffs, other._coeffs)], self.order
            )
        return self + (-_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            n = self.order
            a, b = self._coeffs, other._coeffs
            out = [_ZERO] * n
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return TruncatedSeries(out, n)
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries([c * x for x in self._coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            b = other._coeffs
            if not b[0]:
                raise NonUnitDivisorError(
                    "divisor has zero constant term; cancel explicit z factors "
                    "with shift() first"
                )
            n = self.order
            a = self._coeffs
            b0 = b[0]
            q: list[Fraction] = []
            for k in range(n):
                acc = a[k]
                for i in range(k):
                    qi = q[i]
                    if qi and b[k - i]:
                        acc -= qi * b[k - i]
                q.append(acc / b0)
            return TruncatedSeries(q, n)
        c = _as_fraction(other)
        return self * (_ONE / c)

    def __rtruediv__(self, other):
        return constant(_as_fraction(other), self.order) / self

    def __pow__(self, exponent: int, modulo=None):
        if modulo is not None:
            raise TypeError("pow() with modulus is not defined for series")
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("series powers require a non-negative integer exponent")
        result = one(self.order)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ------------------------------------------------------------- other ops

    def sqrt(self) -> "TruncatedSeries":
        """Principal square root: the unique root with constant term 1.

        Coefficients follow from equating s*s with self term by term.
        """
        a = self._coeffs
        if a[0] != 1:
            raise DomainError("series square root requires constant term 1")
        s = [_ONE]
        for k in range(1, self.order):
            acc = a[k]
            for i in range(1, k):
                if s[i] and s[k - i]:
                    acc -= s[i] * s[k - i]
            s.append(acc / 2)
        return TruncatedSeries(s, self.order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z**k exactly.

        A positive shift keeps the order (top coefficients truncate, which is
        exactly multiplication by the monomial in the truncated ring).  A
        negative shift divides by z**|k|: the low coefficients must vanish,
        and the order shrinks by |k| because the top coefficients of the
        quotient are no longer determined.
        """
        if k >= 0:
            return TruncatedSeries(
                (_ZERO,) * k + self._coeffs[: self.order - k], self.order
            )
        m = -k
        if m >= self.order:
            raise DomainError(f"shift by {k} exceeds order {self.order}")
        if any(self._coeffs[:m]):
            raise NotDivisibleError(
                f"series is not divisible by z^{m}: low coefficients are nonzero"
            )
        return TruncatedSeries(self._coeffs[m:], self.order - m)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Deliberately reduce to a smaller order (extension is impossible)."""
        if not 1 <= order <= self.order:
            raise DomainError(
                f"cannot truncate order-{self.order} series to order {order}"
            )
        return TruncatedSeries(self._coeffs[:order], order)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_integral(self) -> bool:
        """True when every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self._coeffs)

    def integer_coefficients(self) -> list[int]:
        if not self.is_integral():
            raise ArithmeticError("series has non-integer coefficients")
        return [c.numerator for c in self._coeffs]


# ------------------------------------------------------------- constructors

def polynomial(coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
    """The polynomial with the given coefficients, reduced mod z**order."""
    return TruncatedSeries(coeffs, order)


def constant(value: Scalar, order: int) -> TruncatedSeries:
    return TruncatedSeries([value], order)


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries([1], order)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries([], order)


# ------------------------------------------- named operations (thin wrappers)

def linear_combine(
    a: TruncatedSeries,
    b: TruncatedSeries,
    alpha: Scalar = 1,
    beta: Scalar = 1,
) -> TruncatedSeries:
    """alpha*a + beta*b, coefficient by coefficient, at the common order."""
    a._require_same_order(b)
    al, be = _as_fraction(alpha), _as_fraction(beta)
    return TruncatedSeries(
        [al * x + be * y for x, y in zip(a.coefficients, b.coefficients)], a.order
    )


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a / b


def sqrt(a: TruncatedSeries) -> TruncatedSeries:
    return a.sqrt()


def pow_int(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return a ** k


def shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return a.shift(k)


def coefficient_at(a: TruncatedSeries, n: int) -> Fraction:
    return a[n]

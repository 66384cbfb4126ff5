"""Truncated formal power series over the rationals.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients of
``x**0 .. x**N`` and is only meaningful modulo ``x**(N+1)``.  Every
coefficient is a :class:`fractions.Fraction`; nothing in this module ever
touches floating point.

Binary operations insist on equal orders.  Use :meth:`TruncatedSeries.truncate`
to bring two series to a common order explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_ORDER = 64


class SeriesError(ValueError):
    """Raised on an ill-posed series operation."""


class OrderMismatchError(SeriesError):
    pass


def _as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


class TruncatedSeries:
    """Power series known modulo ``x**(order+1)``. Immutable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = tuple(_as_rational(c) for c in coeffs)
        if not coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # constructors

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, c: Scalar, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = c
        return cls(coeffs)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.monomial(1, 1, order)

    # accessors

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return coefficient_of(self, k)

    def __iter__(self):
        return iter(self._coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by ``x**k``; the first ``k`` coefficients must vanish."""
        if any(self._coeffs[:k]):
            raise SeriesError(f"series is not divisible by x^{k}")
        return TruncatedSeries(self._coeffs[k:])

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the result has order one less."""
        if self.order == 0:
            raise SeriesError("derivative of an order-0 series is unknown")
        return TruncatedSeries(k * c for k, c in enumerate(self._coeffs) if k)

    # arithmetic

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}; truncate explicitly"
            )

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_add(self, other)
        if isinstance(other, (int, Fraction)):
            return series_add(self, TruncatedSeries.constant(other, self.order))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return series_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        if isinstance(other, (int, Fraction)):
            return series_scale(self, 1 / _as_rational(other))
        return NotImplemented

    def __pow__(self, m: int):
        return series_pow(self, m)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    return TruncatedSeries(p + q for p, q in zip(a.coeffs, b.coeffs))


def series_scale(a: TruncatedSeries, c: Scalar) -> TruncatedSeries:
    c = _as_rational(c)
    return TruncatedSeries(c * p for p in a.coeffs)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    N = a.order
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (N + 1)
    for i, p in enumerate(ac):
        if not p:
            continue
        for j in range(N + 1 - i):
            q = bc[j]
            if q:
                out[i + j] += p * q
    return TruncatedSeries(out)


def series_inverse(b: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    b0 = b.coeffs[0]
    if not b0:
        raise SeriesError("series with zero constant term is not invertible")
    inv0 = 1 / b0
    out = [inv0]
    for k in range(1, b.order + 1):
        acc = sum((b.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncatedSeries(out)


def series_div(a: TruncatedSeries, b: TruncatedSeries, cancel: bool = False) -> TruncatedSeries:
    """Exact quotient ``a / b``.

    Without ``cancel`` the divisor must have a nonzero constant term.  With
    ``cancel=True`` a common factor ``x**k`` (``k`` = valuation of ``b``) is
    removed from both sides first, so ``x / (1 - exp(-x))`` is computable; the
    result then has order ``order - k`` since the top ``k`` coefficients are
    not determined by the inputs.
    """
    a._check(b)
    k = b.valuation()
    if k is None:
        raise SeriesError("division by a series that is zero to the stored order")
    if k > 0:
        if not cancel:
            raise SeriesError(
                f"divisor vanishes to order {k} at x=0; pass cancel=True to cancel x^{k}"
            )
        a = a.shift_down(k)
        b = b.shift_down(k)
    return series_mul(a, series_inverse(b))


def series_pow(a: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 0:
        return series_pow(series_inverse(a), -m)
    result = TruncatedSeries.constant(1, a.order)
    base = a
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for ``a`` with zero constant term.

    Uses ``f' = a' f``, i.e. ``k f_k = sum_{j=1..k} j a_j f_{k-j}``.
    """
    if a.coeffs[0]:
        raise SeriesError("exp needs a zero constant term to stay rational")
    ac = a.coeffs
    f = [Fraction(1)]
    for k in range(1, a.order + 1):
        acc = sum((j * ac[j] * f[k - j] for j in range(1, k + 1) if ac[j]), Fraction(0))
        f.append(acc / k)
    return TruncatedSeries(f)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """``log(a)`` for ``a`` with constant term 1.

    Uses ``a b' = a'``, i.e. ``k b_k = k a_k - sum_{j=1..k-1} j b_j a_{k-j}``.
    """
    if a.coeffs[0] != 1:
        raise SeriesError("log needs constant term 1")
    ac = a.coeffs
    b = [Fraction(0)]
    for k in range(1, a.order + 1):
        acc = k * ac[k] - sum((j * b[j] * ac[k - j] for j in range(1, k)), Fraction(0))
        b.append(acc / k)
    return TruncatedSeries(b)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(x))`` for ``g`` with zero constant term (Horner in the ring)."""
    f._check(g)
    if g.coeffs[0]:
        raise SeriesError("inner series must have zero constant term")
    out = TruncatedSeries.zero(g.order)
    for c in reversed(f.coeffs):
        out = series_mul(out, g) + c
    return out


def series_reversion(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` with ``f(g(y)) = y``.

    Lagrange inversion: ``[y^k] g = (1/k) [z^(k-1)] (z/f(z))^k``.
    """
    if f.order < 1 or f.coeffs[0] or not f.coeffs[1]:
        raise SeriesError("reversion needs f(0) = 0 and f'(0) != 0")
    N = f.order
    # z/f(z) is known to order N-1 only
    ratio = series_div(TruncatedSeries.x(N), f, cancel=True)
    out = [Fraction(0)]
    power = TruncatedSeries.constant(1, N - 1)
    for k in range(1, N + 1):
        power = series_mul(power, ratio)
        out.append(power.coeffs[k - 1] / k)
    return TruncatedSeries(out)


def coefficient_of(a: TruncatedSeries, k: int) -> Fraction:
    if not 0 <= k <= a.order:
        raise IndexError(f"coefficient x^{k} outside a series of order {a.order}")
    return a.coeffs[k]


# characteristic series in one variable

def exp_series(order: int = DEFAULT_ORDER, scale: Scalar = 1) -> TruncatedSeries:
    """``exp(scale * x)``."""
    return series_exp(TruncatedSeries.monomial(1, scale, order))


def sinh_series(order: int = DEFAULT_ORDER, scale: Scalar = 1) -> TruncatedSeries:
    """``sinh(scale * x) = (exp(scale x) - exp(-scale x)) / 2``."""
    return (exp_series(order, scale) - exp_series(order, -_as_rational(scale))) / 2


def cosh_series(order: int = DEFAULT_ORDER, scale: Scalar = 1) -> TruncatedSeries:
    return (exp_series(order, scale) + exp_series(order, -_as_rational(scale))) / 2


def todd_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``x / (1 - exp(-x))`` to the given order."""
    N = order + 1
    denom = 1 - exp_series(N, -1)
    return series_div(TruncatedSeries.x(N), denom, cancel=True)


def ahat_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``(x/2) / sinh(x/2)`` to the given order."""
    N = order + 1
    half_x = TruncatedSeries.monomial(1, Fraction(1, 2), N)
    return series_div(half_x, sinh_series(N, Fraction(1, 2)), cancel=True)


def x_coth_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``x / tanh(x) = x cosh(x) / sinh(x)``."""
    N = order + 1
    num = TruncatedSeries.x(N) * cosh_series(N)
    return series_div(num, sinh_series(N), cancel=True)


def todd_ahat_identity_check(order: int) -> bool:
    """Compare ``x/(1-e^-x)`` with ``e^(x/2) (x/2)/sinh(x/2)`` exactly up to ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    lhs = todd_series(order)
    rhs = exp_series(order, Fraction(1, 2)) * ahat_series(order)
    return lhs == rhs


def binomial_series(exponent: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``(1 - x)**exponent`` for any integer exponent, by exact multiplication."""
    return series_pow(1 - TruncatedSeries.x(order), exponent)


def generalized_binomial(top: int, k: int) -> Fraction:
    """``top (top-1) ... (top-k+1) / k!`` for any integer ``top``."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= top - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return Fraction(num, den)


__all__ = [
    "DEFAULT_ORDER",
    "OrderMismatchError",
    "Rational",
    "SeriesError",
    "TruncatedSeries",
    "ahat_series",
    "binomial_series",
    "coefficient_of",
    "cosh_series",
    "exp_series",
    "generalized_binomial",
    "series_add",
    "series_compose",
    "series_div",
    "series_exp",
    "series_inverse",
    "series_log",
    "series_mul",
    "series_pow",
    "series_reversion",
    "series_scale",
    "sinh_series",
    "todd_ahat_identity_check",
    "todd_series",
    "x_coth_series",
]

"""Even cohomology of a manifold with the ring structure of CP^n.

Classes live in ``Q[h]/(h^(n+1))`` where ``h`` is a generator normalised by
``integrate(h**n) == 1``.  Only even degrees are represented; ``coeffs[k]``
is the coefficient of ``h**k`` (real degree ``2k``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .series import Scalar, TruncatedSeries, _as_rational


class DimensionMismatchError(ValueError):
    pass


class CohClass:
    """An element of ``Q[h]/(h^(n+1))``. Immutable."""

    __slots__ = ("_n", "_coeffs")

    def __init__(self, n: int, coeffs: Iterable[Scalar] = ()):
        if n < 0:
            raise ValueError("dimension must be non-negative")
        coeffs = [_as_rational(c) for c in coeffs]
        if len(coeffs) > n + 1:
            if any(coeffs[n + 1:]):
                raise ValueError(f"terms above h^{n} are not zero in dimension {n}")
            coeffs = coeffs[: n + 1]
        coeffs += [Fraction(0)] * (n + 1 - len(coeffs))
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    @classmethod
    def one(cls, n: int) -> "CohClass":
        return cls(n, [1])

    @classmethod
    def zero(cls, n: int) -> "CohClass":
        return cls(n)

    @classmethod
    def h(cls, n: int, power: int = 1, c: Scalar = 1) -> "CohClass":
        """``c * h**power``; vanishes if ``power > n``."""
        if power > n:
            return cls(n)
        return cls(n, [0] * power + [c])

    @property
    def n(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def _check(self, other: "CohClass") -> None:
        if self._n != other._n:
            raise DimensionMismatchError(f"dimension mismatch: {self._n} vs {other._n}")

    def _lift(self, other) -> "CohClass":
        if isinstance(other, CohClass):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CohClass(self._n, [other])
        raise TypeError

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return CohClass(self._n, (p + q for p, q in zip(self._coeffs, other._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self._n, (-c for c in self._coeffs))

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return coh_mul(self, other)
        if isinstance(other, (int, Fraction)):
            c = _as_rational(other)
            return CohClass(self._n, (c * p for p in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _as_rational(other))
        return NotImplemented

    def __pow__(self, m: int) -> "CohClass":
        if m < 0:
            raise ValueError("negative powers are not defined in a truncated ring")
        out = CohClass.one(self._n)
        for _ in range(m):
            out = coh_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self._n == other._n and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == CohClass(self._n, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self._n, self._coeffs))

    def __repr__(self):
        return f"CohClass(n={self._n}, coeffs={[str(c) for c in self._coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "h" if k == 1 else f"h^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def coh_mul(a: CohClass, b: CohClass) -> CohClass:
    a._check(b)
    n = a.n
    out = [Fraction(0)] * (n + 1)
    for i, p in enumerate(a.coeffs):
        if not p:
            continue
        for j in range(n + 1 - i):
            q = b.coeffs[j]
            if q:
                out[i + j] += p * q
    return CohClass(n, out)


def integrate(a: CohClass) -> Fraction:
    """Pairing with the fundamental class: the ``h**n`` coefficient."""
    return a.coeffs[a.n]


def coh_exp(a: CohClass) -> CohClass:
    """``exp(a)`` for nilpotent ``a``; the sum stops at ``a**n``."""
    if a.coeffs[0]:
        raise ValueError("exp of a class with nonzero constant term is not rational")
    term = CohClass.one(a.n)
    out = term
    for k in range(1, a.n + 1):
        term = coh_mul(term, a) / k
        if term.is_zero():
            break
        out = out + term
    return out


def apply_series(f: TruncatedSeries, a: CohClass) -> CohClass:
    """Substitute a nilpotent class into a power series: ``sum_k f_k a**k``."""
    if a.coeffs[0]:
        raise ValueError("can only substitute a class with zero constant term")
    if f.order < a.n:
        raise ValueError(f"series order {f.order} too small for dimension {a.n}")
    # Horner on the first n+1 coefficients; higher powers of a vanish
    out = CohClass.zero(a.n)
    for c in reversed(f.coeffs[: a.n + 1]):
        out = coh_mul(out, a) + c
    return out


def poincare_pairing(n: int, a: int, b: int) -> Fraction:
    return integrate(CohClass.h(n, a) * CohClass.h(n, b))


def from_polynomial(n: int, coeffs: Sequence[Scalar]) -> CohClass:
    """Build a class from a possibly longer coefficient list, dropping degrees above ``n``."""
    return CohClass(n, list(coeffs)[: n + 1])

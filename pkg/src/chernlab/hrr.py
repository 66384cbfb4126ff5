"""Holomorphic Euler characteristics on a manifold with the cohomology of CP^n.

With ``c1(M) = lam * h`` and a line bundle ``L^s`` (``c1 = s h``), four
independent routes compute ``chi``:

* :func:`chi_genus_route` -- ``integrate(exp(s h) * exp(c1/2) * A-hat(p))``
  using only the Pontrjagin classes of CP^n.
* :func:`chi_series_route` -- the ``x^n`` coefficient of
  ``exp(s x) (x / (1 - e^-x))^(n+1)``.
* :func:`residue_route` -- the same coefficient after the substitution
  ``y = 1 - e^-z`` carried out as exact series composition.
* :func:`chi_closed_form` -- the falling product ``(n+s)...(s+1)/n!``.

:func:`classify_c1` solves ``(s+1)...(s+n) = n!`` over the integers and
certifies that its search window is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .cohomology import CohClass, coh_exp, integrate
from .genera import pontryagin_cpn, todd_class
from .series import (
    TruncatedSeries,
    binomial_series,
    coefficient_of,
    exp_series,
    generalized_binomial,
    series_compose,
    series_div,
    series_exp,
    series_mul,
    series_pow,
    series_reversion,
    todd_series,
)


class ParityError(ValueError):
    """``c1`` is incompatible with ``w2(CP^n)``: ``lam`` must be ``n+1`` mod 2."""


@dataclass(frozen=True)
class HrrProblem:
    n: int
    lam: int
    s: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if (self.lam - self.n - 1) % 2:
            raise ParityError(f"c1 = {self.lam} h violates lam = n+1 mod 2 for n = {self.n}")

    @property
    def shift(self) -> int:
        """Twist ``t`` with ``chi(M, L^s) = chi(CP^n, O(t))``."""
        return self.s + (self.lam - self.n - 1) // 2


def chi_genus_route(p: HrrProblem) -> Fraction:
    n = p.n
    td = todd_class(CohClass.h(n, 1, p.lam), pontryagin_cpn(n), order=n)
    return integrate(coh_exp(CohClass.h(n, 1, p.s)) * td)


def chi_series_route(n: int, s: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be at least 1")
    integrand = exp_series(n, s) * series_pow(todd_series(n), n + 1)
    return coefficient_of(integrand, n)


def chi_closed_form(n: int, s: int) -> Fraction:
    """``binom(n+s, n)`` as the falling product, valid for negative ``s``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return generalized_binomial(n + s, n)


def residue_integrand_in_y(n: int, s: int) -> TruncatedSeries:
    """Pull ``e^(sz) dz / (1 - e^-z)^(n+1)`` back along ``z = z(y)``, times ``y^(n+1)``.

    ``z(y)`` is obtained by reverting ``y = 1 - e^-z``; the residue at 0 of
    the original form is the ``y^n`` coefficient of the returned series.
    """
    N = n + 1
    y_of_z = 1 - exp_series(N, -1)
    z_of_y = series_reversion(y_of_z)
    e_sz = series_exp(s * z_of_y)
    dz_dy = z_of_y.derivative()  # order N - 1
    # y / (1 - e^{-z(y)}) is exactly 1 when z(y) inverts y(z); computed, not assumed
    inner = 1 - series_compose(exp_series(N, -1), z_of_y)
    y_ratio = series_div(TruncatedSeries.x(N), inner, cancel=True)
    return series_mul(series_mul(e_sz.truncate(n), dz_dy.truncate(n)), series_pow(y_ratio.truncate(n), n + 1))


def residue_route(n: int, s: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be at least 1")
    return coefficient_of(residue_integrand_in_y(n, s), n)


def binomial_coefficient_route(n: int, s: int) -> Fraction:
    """``y^n`` coefficient of ``(1-y)^(-s-1)`` by exact series powers."""
    return coefficient_of(binomial_series(-s - 1, n), n)


def falling_product(n: int, s: int) -> int:
    out = 1
    for i in range(1, n + 1):
        out *= s + i
    return out


@dataclass(frozen=True)
class C1Classification:
    n: int
    s_values: tuple
    lambdas: tuple
    certificate: dict = field(compare=False)

    @property
    def certified(self) -> bool:
        return all(self.certificate.values())


def _window_certificate(n: int) -> dict:
    """Explicit checks that no solution of ``(s+1)...(s+n) = n!`` lies outside ``[-n-2, 1]``."""
    target = factorial(n)
    cert = {}
    # s >= 1: factors s+i are positive and each exceeds i, increasing in s
    cert["upper: factors at s=1 exceed 1..n"] = all(1 + i > i > 0 for i in range(1, n + 1))
    cert["upper: product at s=1 exceeds n!"] = falling_product(n, 1) > target
    # s <= -n-2: |s+i| >= n+2-i, a permutation of 2..n+1, each above its partner in 1..n
    mags = sorted(abs(-n - 2 + i) for i in range(1, n + 1))
    cert["lower: |factors| at s=-n-2 dominate 1..n"] = all(m > i for m, i in zip(mags, range(1, n + 1)))
    cert["lower: |product| at s=-n-2 exceeds n!"] = abs(falling_product(n, -n - 2)) > target
    cert["lower: |factors| grow as s decreases"] = all(
        abs(-n - 3 + i) > abs(-n - 2 + i) for i in range(1, n + 1)
    )
    # -n <= s <= -1: the factor with i = -s is zero
    cert["middle: a factor vanishes for -n <= s <= -1"] = all(
        any(s + i == 0 for i in range(1, n + 1)) for s in range(-n, 0)
    )
    return cert


def classify_c1(n: int) -> C1Classification:
    """All integers ``s`` with ``(s+1)...(s+n) = n!`` and the matching ``lam = n+1+2s``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    target = factorial(n)
    sols = tuple(s for s in range(-n - 2, 2) if falling_product(n, s) == target)
    return C1Classification(
        n=n,
        s_values=sols,
        lambdas=tuple(n + 1 + 2 * s for s in sols),
        certificate=_window_certificate(n),
    )

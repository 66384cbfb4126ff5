"""Multiplicative sequences: Todd, A-hat and L genera.

A genus is fixed by its characteristic series ``Q`` with ``Q(0) = 1`` and
assigns ``prod_j Q(gamma_j)`` to a total class with formal roots
``gamma_j``.  Roots are never computed here.  :func:`genus_eval` goes
through power sums (Newton's identities) and ``exp(sum_k l_k s_k)`` with
``l_k`` the coefficients of ``log Q``; :func:`genus_on_roots` multiplies
``Q(gamma_j)`` directly for classes given by explicit roots and serves as
an independent cross-check.

Chern roots have cohomological degree 1 (``h``), Pontrjagin roots degree 2
(``h**2``); A-hat and L are written as series in the Pontrjagin root ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .cohomology import CohClass, DimensionMismatchError, apply_series, coh_exp
from .series import (
    DEFAULT_ORDER,
    Scalar,
    TruncatedSeries,
    ahat_series,
    series_log,
    todd_series,
    x_coth_series,
)

CHERN = "chern"
PONTRJAGIN = "pontrjagin"

_ROOT_DEGREE = {CHERN: 1, PONTRJAGIN: 2}
_GENUS_CONVENTION = {"todd": CHERN, "ahat": PONTRJAGIN, "L": PONTRJAGIN}


@dataclass(frozen=True)
class CharSeries:
    """Characteristic power series of a genus in its root variable."""

    kind: str
    q: TruncatedSeries

    def __post_init__(self):
        if self.kind not in ("todd", "ahat", "L", "custom"):
            raise ValueError(f"unknown genus kind {self.kind!r}")
        if self.q.coeffs[0] != 1:
            raise ValueError("characteristic series must have constant term 1")

    @property
    def convention(self) -> str | None:
        """Which total class the roots come from; ``None`` for custom series."""
        return _GENUS_CONVENTION.get(self.kind)

    def coefficient(self, k: int) -> Fraction:
        return self.q[k]


def _even_part_in_u(xseries: TruncatedSeries, order: int) -> TruncatedSeries:
    # an even series in x becomes a series in u = x^2
    if any(xseries.coeffs[1::2]):
        raise ValueError("series is not even in x")
    return TruncatedSeries(xseries.coeffs[0::2][: order + 1])


@lru_cache(maxsize=None)
def todd(order: int = DEFAULT_ORDER) -> CharSeries:
    return CharSeries("todd", todd_series(order))


@lru_cache(maxsize=None)
def ahat(order: int = DEFAULT_ORDER) -> CharSeries:
    """``(sqrt(u)/2)/sinh(sqrt(u)/2)`` in ``u``."""
    return CharSeries("ahat", _even_part_in_u(ahat_series(2 * order), order))


@lru_cache(maxsize=None)
def l_genus(order: int = DEFAULT_ORDER) -> CharSeries:
    """``sqrt(u)/tanh(sqrt(u))`` in ``u``."""
    return CharSeries("L", _even_part_in_u(x_coth_series(2 * order), order))


GENERA = {"todd": todd, "ahat": ahat, "L": l_genus}


@dataclass(frozen=True)
class TotalClass:
    """Total Chern or Pontrjagin class ``1 + c_1 + c_2 + ...``.

    ``components[i]`` is the i-th class, homogeneous of degree ``i`` (Chern)
    or ``2i`` (Pontrjagin) in ``h``.  Missing components are zero.
    """

    kind: str
    n: int
    components: tuple

    def __post_init__(self):
        if self.kind not in _ROOT_DEGREE:
            raise ValueError(f"unknown total class kind {self.kind!r}")
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps or comps[0] != CohClass.one(self.n):
            raise ValueError("component 0 of a total class must be 1")
        d = self.root_degree
        for i, c in enumerate(comps):
            if c.n != self.n:
                raise DimensionMismatchError(f"component {i} lives in dimension {c.n}")
            for k, coeff in enumerate(c.coeffs):
                if coeff and k != d * i:
                    raise ValueError(f"component {i} has a term in degree h^{k}, expected h^{d * i}")

    @property
    def root_degree(self) -> int:
        return _ROOT_DEGREE[self.kind]

    def component(self, i: int) -> CohClass:
        if 0 <= i < len(self.components):
            return self.components[i]
        return CohClass.zero(self.n)

    def total(self) -> CohClass:
        out = CohClass.zero(self.n)
        for c in self.components:
            out = out + c
        return out

    def __mul__(self, other: "TotalClass") -> "TotalClass":
        """Whitney product: the total class of a direct sum."""
        if not isinstance(other, TotalClass):
            return NotImplemented
        if (self.kind, self.n) != (other.kind, other.n):
            raise DimensionMismatchError("total classes of different kind or dimension")
        top = self.n // self.root_degree
        comps = []
        for k in range(top + 1):
            acc = CohClass.zero(self.n)
            for i in range(k + 1):
                acc = acc + self.component(i) * other.component(k - i)
            comps.append(acc)
        return TotalClass(self.kind, self.n, comps)


def split_total_class(kind: str, n: int, roots: Sequence[Scalar]) -> TotalClass:
    """``prod_j (1 + a_j h^d)`` for rational ``a_j`` (``d`` the root degree)."""
    d = _ROOT_DEGREE[kind]
    top = n // d
    # elementary symmetric polynomials of the roots
    e = [Fraction(1)] + [Fraction(0)] * len(roots)
    for a in roots:
        for j in range(len(roots), 0, -1):
            e[j] += a * e[j - 1]
    comps = [CohClass.h(n, d * i, e[i]) if i < len(e) else CohClass.zero(n) for i in range(top + 1)]
    return TotalClass(kind, n, comps)


def pontryagin_cpn(n: int) -> TotalClass:
    """``p_i = binom(n+1, i) h^(2i)`` for ``0 <= i <= n // 2``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return TotalClass(PONTRJAGIN, n, [CohClass.h(n, 2 * i, comb(n + 1, i)) for i in range(n // 2 + 1)])


def chern_cpn(n: int) -> TotalClass:
    """``c_i = binom(n+1, i) h^i``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return TotalClass(CHERN, n, [CohClass.h(n, i, comb(n + 1, i)) for i in range(n + 1)])


def p1_from_chern(c1: CohClass, c2: CohClass) -> CohClass:
    """First Pontrjagin class of the underlying real bundle: ``c1^2 - 2 c2``."""
    return c1 * c1 - 2 * c2


def c2_from_equality(n: int) -> CohClass:
    """Second Chern class forced by ``c1 = -(n+1)h`` and ``p1 = (n+1)h^2``.

    Solves ``p1 = c1^2 - 2 c2`` for ``c2`` using the CP^n Pontrjagin class,
    which gives ``n(n+1)/2 h^2``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    c1 = CohClass.h(n, 1, -(n + 1))
    p1 = pontryagin_cpn(n).component(1)
    return (c1 * c1 - p1) / 2


def chern_equality_gap(n: int, c1: CohClass | None = None, c2: CohClass | None = None) -> CohClass:
    """``(2(n+1)/n) c2 - c1^2`` as a class; multiply by ``[omega]^(n-2)`` to integrate."""
    if c1 is None:
        c1 = CohClass.h(n, 1, n + 1)
    if c2 is None:
        c2 = c2_from_equality(n)
    return Fraction(2 * (n + 1), n) * c2 - c1 * c1


def power_sums(p: TotalClass, count: int) -> list[CohClass]:
    """Power sums ``s_1..s_count`` of the formal roots, by Newton's identities.

    ``s_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(i-1) e_i s_{k-i}``
    """
    s = [CohClass.zero(p.n)]  # s[0] unused
    for k in range(1, count + 1):
        acc = ((-1) ** (k - 1) * k) * p.component(k)
        for i in range(1, k):
            e_i = p.component(i)
            if e_i.is_zero():
                continue
            acc = acc + ((-1) ** (i - 1)) * (e_i * s[k - i])
        s.append(acc)
    return s[1:]


def genus_eval(q: CharSeries, p: TotalClass) -> CohClass:
    """``prod_j Q(gamma_j)`` over the formal roots of ``p``."""
    if q.convention is not None and q.convention != p.kind:
        raise ValueError(f"{q.kind} genus expects a {q.convention} class, got {p.kind}")
    top = p.n // p.root_degree
    if q.q.order < top:
        raise ValueError(f"series order {q.q.order} too small for dimension {p.n}")
    logq = series_log(q.q)
    acc = CohClass.zero(p.n)
    for k, s_k in enumerate(power_sums(p, top), start=1):
        if logq[k]:
            acc = acc + logq[k] * s_k
    return coh_exp(acc)


def genus_on_roots(q: CharSeries, kind: str, n: int, roots: Sequence[Scalar]) -> CohClass:
    """Product of ``Q(a_j h^d)`` over explicit roots; no symmetric functions involved."""
    d = _ROOT_DEGREE[kind]
    out = CohClass.one(n)
    for a in roots:
        out = out * apply_series(q.q, CohClass.h(n, d, a))
    return out


def todd_class(c1: CohClass, p: TotalClass, order: int = DEFAULT_ORDER) -> CohClass:
    """``Td = exp(c1/2) * A-hat(p)``, usable when only Pontrjagin data is known."""
    if p.kind != PONTRJAGIN:
        raise ValueError("todd_class takes a Pontrjagin total class")
    if c1.n != p.n:
        raise DimensionMismatchError(f"dimension mismatch: {c1.n} vs {p.n}")
    return coh_exp(c1 / 2) * genus_eval(ahat(order), p)


def todd_from_chern(c: TotalClass, order: int = DEFAULT_ORDER) -> CohClass:
    return genus_eval(todd(order), c)

"""Surface arithmetic (signature, Noether, Riemann-Roch) and one-point blowups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .cohomology import CohClass, integrate
from .series import Scalar, _as_rational


def signature_from_p1(p1_integral: Scalar) -> Fraction:
    """Signature of a 4-manifold: ``tau = (1/3) int p1``."""
    return _as_rational(p1_integral) / 3


def solve_K2(chi_O: Scalar, chi_top: int) -> Fraction:
    """Noether's formula ``chi_O = (K^2 + chi_top)/12`` solved for ``K^2``."""
    return 12 * _as_rational(chi_O) - chi_top


def c1sq_from_signature(tau: int, chi_top: int) -> int:
    """``int c1^2`` from ``3 tau = int (c1^2 - 2 c2)`` and ``int c2 = chi_top``."""
    return 3 * tau + 2 * chi_top


def surface_rr(L2: int, KdotL: int, chi_O: Scalar) -> Fraction:
    """Riemann-Roch for a line bundle on a surface: ``chi_O + (L^2 - K.L)/2``."""
    return _as_rational(chi_O) + Fraction(L2 - KdotL, 2)


@dataclass(frozen=True)
class SurfaceInvariants:
    chi_top: Optional[int] = None
    tau: Optional[int] = None
    K2: Optional[int] = None
    chi_O: Optional[Fraction] = None

    def noether_consistent(self) -> Optional[bool]:
        if None in (self.chi_O, self.K2, self.chi_top):
            return None
        return _as_rational(self.chi_O) == Fraction(self.K2 + self.chi_top, 12)

    def signature_consistent(self) -> Optional[bool]:
        if None in (self.tau, self.K2, self.chi_top):
            return None
        return Fraction(self.tau) == Fraction(self.K2 - 2 * self.chi_top, 3)

    def consistent(self) -> bool:
        """Both relations hold; a relation with missing inputs counts as satisfied."""
        return self.noether_consistent() is not False and self.signature_consistent() is not False


def surviving_signatures(chi_top: int = 3, chi_O: Scalar = 1, candidates=(-1, 1)) -> list[int]:
    """Signatures whose ``c1^2`` agrees with the value forced by Noether's formula."""
    K2 = solve_K2(chi_O, chi_top)
    return [t for t in candidates if c1sq_from_signature(t, chi_top) == K2]


class BlowupRing:
    """Top-degree bookkeeping on the blowup of an n-fold at a point.

    Monomials ``a^i e^j`` with ``a`` a class pulled back from the base and
    ``e = [E]``.  Mixed products vanish because ``E`` maps to a point; the
    only nonzero top pairings are ``int a^n`` (the base value) and
    ``int e^n = int_{CP^(n-1)} (-h)^(n-1)``, since ``[E]|_E`` is the
    tautological class ``-h`` on ``E = CP^(n-1)``.
    """

    def __init__(self, n: int, base_top: Scalar = 0):
        if n < 2:
            raise ValueError("blowups need n >= 2")
        self.n = n
        self.base_top = _as_rational(base_top)
        self.e_top = integrate(CohClass.h(n - 1, 1, -1) ** (n - 1))

    def integrate_power(self, a_coeff: Scalar, e_coeff: Scalar) -> Fraction:
        """``int (a_coeff * a + e_coeff * e)^n`` by binomial expansion."""
        n = self.n
        a_coeff, e_coeff = _as_rational(a_coeff), _as_rational(e_coeff)
        total = Fraction(0)
        for i in range(n + 1):
            j = n - i
            if i and j:
                continue  # mixed monomial a^i e^j
            top = self.base_top if j == 0 else self.e_top
            total += comb(n, i) * a_coeff**i * e_coeff**j * top
        return total


def blowup_c1_top(n: int, exceptional_coeff: Optional[int] = None) -> Fraction:
    """``int c1(M~)^n`` for the blowup of a point on an n-fold with ``c1 = 0``, ``b2 = 0``.

    ``c1(M~) = pi^* c1(M) - (n-1)[E]``; ``exceptional_coeff`` overrides ``n-1``.
    """
    if n < 2:
        raise ValueError("blowups need n >= 2")
    k = n - 1 if exceptional_coeff is None else exceptional_coeff
    ring = BlowupRing(n, base_top=0)
    return ring.integrate_power(0, -k)

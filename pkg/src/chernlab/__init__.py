"""Exact characteristic-class and Riemann-Roch arithmetic for CP^n-like manifolds,
with a numerical laboratory for Kahler curvature identities."""

from .cohomology import CohClass, apply_series, coh_exp, coh_mul, integrate
from .genera import (
    CharSeries,
    TotalClass,
    ahat,
    chern_cpn,
    genus_eval,
    l_genus,
    pontryagin_cpn,
    todd,
    todd_class,
)
from .hrr import HrrProblem, chi_closed_form, chi_genus_route, chi_series_route, classify_c1, residue_route
from .series import Rational, TruncatedSeries

__version__ = "0.1.0"

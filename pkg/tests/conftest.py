from fractions import Fraction

import pytest
from hypothesis import strategies as st

from chernlab.series import TruncatedSeries

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_of_order(order, zero_constant=False, unit_constant=False):
    coeffs = st.lists(small_fractions, min_size=order + 1, max_size=order + 1)

    def build(cs):
        cs = list(cs)
        if zero_constant:
            cs[0] = Fraction(0)
        if unit_constant:
            cs[0] = Fraction(1)
        return TruncatedSeries(cs)

    return coeffs.map(build)


def bernoulli_numbers(m):
    """B_0..B_m with B_1 = -1/2, from sum_{k<=j} binom(j+1, k) B_k = 0."""
    from math import comb

    B = [Fraction(1)]
    for j in range(1, m + 1):
        B.append(-sum(comb(j + 1, k) * B[k] for k in range(j)) / (j + 1))
    return B


@pytest.fixture(scope="session")
def bernoulli():
    return bernoulli_numbers(80)

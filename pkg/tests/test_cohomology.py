from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from chernlab.cohomology import (
    CohClass,
    DimensionMismatchError,
    apply_series,
    coh_exp,
    coh_mul,
    integrate,
    poincare_pairing,
)
from chernlab.series import TruncatedSeries, ahat_series, exp_series, todd_series

from conftest import small_fractions

h = CohClass.h


def classes(n, nilpotent=False):
    def build(cs):
        if nilpotent:
            cs = [0] + cs[1:]
        return CohClass(n, cs)

    return st.lists(small_fractions, min_size=n + 1, max_size=n + 1).map(build)


def test_mul_examples():
    for n in range(1, 6):
        assert h(n) * h(n, n) == CohClass.zero(n)
    assert (1 + h(2)) ** 2 == CohClass(2, [1, 2, 1])
    assert coh_mul(h(2, 1, 3), h(2, 1, 3)) == h(2, 2, 9)
    with pytest.raises(DimensionMismatchError):
        h(2) * h(3)


def test_integrate_examples():
    for n in range(1, 8):
        assert integrate(h(n, n)) == 1
        assert integrate(CohClass.one(n)) == 0
    assert integrate(h(3, 1, 4) ** 3) == 64


def test_exp_examples():
    assert coh_exp(CohClass.zero(3)) == CohClass.one(3)
    assert coh_exp(h(2)) == CohClass(2, [1, 1, F(1, 2)])
    assert coh_exp(h(2, 1, F(3, 2))) * coh_exp(h(2, 1, F(-3, 2))) == CohClass.one(2)
    with pytest.raises(ValueError):
        coh_exp(CohClass.one(2))


def test_apply_series_examples():
    assert apply_series(todd_series(1), h(1)) == CohClass(1, [1, F(1, 2)])
    assert apply_series(exp_series(4), CohClass.zero(4)) == CohClass.one(4)
    assert apply_series(ahat_series(2), h(2)) == CohClass(2, [1, 0, F(-1, 24)])
    with pytest.raises(ValueError):
        apply_series(todd_series(1), h(2))
    with pytest.raises(ValueError):
        apply_series(todd_series(4), CohClass.one(2))


def test_classes_above_top_degree_rejected():
    with pytest.raises(ValueError):
        CohClass(2, [0, 0, 0, 1])
    assert h(2, 5) == CohClass.zero(2)


@pytest.mark.parametrize("n", range(0, 9))
def test_poincare_pairing(n):
    for a in range(n + 1):
        for b in range(n + 1):
            assert poincare_pairing(n, a, b) == (1 if a + b == n else 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 8).flatmap(lambda n: st.tuples(classes(n), classes(n), classes(n))))
def test_ring_axioms(abc):
    a, b, c = abc
    one = CohClass.one(a.n)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * one == a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: classes(n, nilpotent=True)))
def test_apply_exp_series_is_coh_exp(a):
    assert apply_series(exp_series(a.n), a) == coh_exp(a)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(classes(n, True), classes(n, True))))
def test_exp_is_a_homomorphism(ab):
    a, b = ab
    assert coh_exp(a + b) == coh_exp(a) * coh_exp(b)

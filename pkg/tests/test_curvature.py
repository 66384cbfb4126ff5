import numpy as np
import pytest

from chernlab import curvature as cv
from chernlab.genera import chern_equality_gap
from chernlab.cohomology import integrate, CohClass

LAMBDAS = [-1.0, 0.0, 1.0, 2.5]


def scaled_tol(R):
    return 1e-9 * (1 + cv.norm_rm(R))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_random_tensor_has_kahler_symmetries(n):
    for seed in range(5):
        R = cv.random_kahler_curvature(n, seed)
        assert R.is_kahler(1e-12)
        ric = cv.ricci(R)
        assert np.allclose(ric, ric.conj().T, atol=1e-12)


def test_random_tensor_is_deterministic():
    a = cv.random_kahler_curvature(3, 11)
    b = cv.random_kahler_curvature(3, 11)
    assert np.array_equal(a.R, b.R)
    assert not np.array_equal(a.R, cv.random_kahler_curvature(3, 12).R)


def test_symmetrize_is_idempotent():
    R = cv.random_kahler_curvature(4, 0)
    assert np.abs(cv.symmetrize(R.R) - R.R).max() <= 1e-15


def test_raw_gaussian_is_not_symmetric():
    raw = np.random.default_rng(0).standard_normal((3, 3, 3, 3)) + 0j
    assert cv.symmetry_defect(raw) > 0.1


@pytest.mark.parametrize("n", [2, 3, 5])
def test_model_tensor_contractions(n):
    c = 0.7
    M = cv.constant_hsc_model(n, c)
    assert np.allclose(cv.ricci(M), c * (n + 1) * np.eye(n), atol=1e-14)
    assert cv.norm_rm(M) == pytest.approx(c**2 * (2 * n**2 + 2 * n), rel=1e-14)
    assert cv.scalar(M) == pytest.approx(c * n * (n + 1))


@pytest.mark.parametrize("n", [2, 3, 4, 6])
@pytest.mark.parametrize("lam", LAMBDAS)
def test_make_einstein(n, lam):
    R = cv.make_einstein(cv.random_kahler_curvature(n, 5), lam)
    assert cv.einstein_defect(R, lam) <= 1e-10
    assert R.is_kahler(1e-12)
    assert cv.scalar(R) == pytest.approx(lam * n, abs=1e-10)
    assert cv.norm_ric(R) == pytest.approx(lam**2 * n, abs=1e-10)


def test_make_einstein_fixes_einstein_inputs():
    R = cv.make_einstein(cv.random_kahler_curvature(3, 1), -1.0)
    assert np.abs(cv.make_einstein(R, -1.0).R - R.R).max() <= 1e-12
    M = cv.constant_hsc_model(3, 0.5)
    assert np.abs(cv.make_einstein(M, 2.0).R - M.R).max() <= 1e-15


def test_sym_product_ricci_contraction():
    rng = np.random.default_rng(1)
    A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    B = A + A.conj().T
    S = cv.KahlerCurvature(cv.sym_product(B))
    assert S.is_kahler(1e-12)
    assert np.allclose(cv.ricci(S), 6 * B + np.trace(B) * np.eye(4))


def test_rm0_examples():
    n, c = 3, 1.3
    M = cv.constant_hsc_model(n, c)
    assert np.abs(cv.rm0(M, c * (n + 1)).R).max() <= 1e-15
    R = cv.random_kahler_curvature(n, 2)
    assert np.array_equal(cv.rm0(R, 0.0).R, R.R)
    E = cv.make_einstein(cv.random_kahler_curvature(4, 3), -1.0)
    lhs = cv.norm_rm(cv.rm0(E, -1.0))
    assert lhs == pytest.approx(cv.norm_rm(E) - 2 * 4 / 5, rel=1e-9)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("lam", LAMBDAS)
def test_norm_identity_many_seeds(n, lam):
    for seed in range(200):
        E = cv.make_einstein(cv.random_kahler_curvature(n, seed), lam)
        assert cv.norm_identity_residual(E, lam) <= 1e-9


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_contraction_identity_on_arbitrary_tensors(n):
    for seed in range(200):
        R = cv.random_kahler_curvature(n, 1000 + seed)
        assert cv.contraction_identity_residual(R) <= scaled_tol(R)


def test_contraction_identity_edge_cases():
    assert cv.contraction_identity_residual(cv.KahlerCurvature(np.zeros((3, 3, 3, 3)))) == 0
    n, c = 3, 0.9
    M = cv.constant_hsc_model(n, c)
    assert cv.contraction_identity_residual(M) <= 1e-12
    closed = c**2 * (n + 1) ** 2 * n - c**2 * (2 * n**2 + 2 * n)
    assert cv.contraction_lhs(M).real == pytest.approx(closed, abs=1e-12)


def test_contraction_identity_needs_the_symmetries():
    raw = np.random.default_rng(4).standard_normal((3, 3, 3, 3)) + 0j
    assert cv.contraction_identity_residual(cv.KahlerCurvature(raw)) > 1e-3


def test_chern_gap():
    for n in range(2, 7):
        M = cv.constant_hsc_model(n, -0.5)
        assert abs(cv.chern_gap(M, -0.5 * (n + 1))) <= 1e-12
    gaps = [cv.chern_gap(cv.make_einstein(cv.random_kahler_curvature(4, s), -1.0), -1.0) for s in range(200)]
    assert min(gaps) > 0
    with pytest.raises(cv.NotEinsteinError):
        cv.chern_gap(cv.random_kahler_curvature(4, 0), -1.0)


def test_chern_gap_equality_matches_exact_side():
    n = 4
    exact = chern_equality_gap(n)
    assert integrate(exact * CohClass.h(n, n - 2)) == 0
    M = cv.constant_hsc_model(n, -1.0 / (n + 1))
    assert cv.chern_gap(M, -1.0) == 0.0


def test_holomorphic_sectional_curvature():
    rng = np.random.default_rng(8)
    M = cv.constant_hsc_model(3, 0.4)
    Z = cv.KahlerCurvature(np.zeros((3, 3, 3, 3)))
    for _ in range(20):
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert cv.holomorphic_sectional_curvature(M, v) == pytest.approx(0.8)
        assert cv.holomorphic_sectional_curvature(Z, v) == 0
    with pytest.raises(ValueError):
        cv.holomorphic_sectional_curvature(M, np.zeros(3))


def test_hsc_constant_iff_rm0_vanishes():
    for seed in range(10):
        E = cv.make_einstein(cv.random_kahler_curvature(3, seed), -1.0)
        assert np.sqrt(cv.norm_rm(cv.rm0(E, -1.0))) > 1e-8
        assert cv.hsc_spread(E, 100, seed) > 1e-8
    M = cv.constant_hsc_model(3, -0.25)
    assert cv.norm_rm(cv.rm0(M, -1.0)) <= 1e-16
    assert cv.hsc_spread(M, 100) <= 1e-12


def test_tensor_is_immutable():
    R = cv.random_kahler_curvature(2, 0)
    with pytest.raises(ValueError):
        R.R[0, 0, 0, 0] = 1

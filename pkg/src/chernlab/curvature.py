"""Algebraic Kahler curvature tensors at a point.

A tensor ``R[i, j, k, l]`` stands for ``R_{i jbar k lbar}`` in a unitary
frame, so the metric is the identity and raising an index is free.  The
Kahler symmetries are

* ``R[i,j,k,l] == R[k,j,i,l] == R[i,l,k,j]``
* ``conj(R[i,j,k,l]) == R[j,i,l,k]``

Everything here is double precision; identities are checked against
tolerances that scale with ``1 + |Rm|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EINSTEIN_TOL = 1e-8
PROJECTION_TOL = 1e-10


class NotEinsteinError(ValueError):
    pass


def _check_square4(R: np.ndarray) -> int:
    if R.ndim != 4 or len(set(R.shape)) != 1:
        raise ValueError(f"expected an n x n x n x n array, got shape {R.shape}")
    return R.shape[0]


def symmetrize(R: np.ndarray) -> np.ndarray:
    """Orthogonal projection onto tensors with the Kahler symmetries."""
    _check_square4(R)
    R = 0.5 * (R + R.transpose(2, 1, 0, 3))
    R = 0.5 * (R + R.transpose(0, 3, 2, 1))
    return 0.5 * (R + R.transpose(1, 0, 3, 2).conj())


def symmetry_defect(R: np.ndarray) -> float:
    """Largest violation of any of the three Kahler symmetries."""
    return max(
        np.abs(R - R.transpose(2, 1, 0, 3)).max(),
        np.abs(R - R.transpose(0, 3, 2, 1)).max(),
        np.abs(R.conj() - R.transpose(1, 0, 3, 2)).max(),
    )


@dataclass(frozen=True, eq=False)
class KahlerCurvature:
    R: np.ndarray

    def __post_init__(self):
        R = np.array(self.R, dtype=complex)
        _check_square4(R)
        R.setflags(write=False)
        object.__setattr__(self, "R", R)

    @property
    def n(self) -> int:
        return self.R.shape[0]

    def is_kahler(self, tol: float = 1e-12) -> bool:
        return symmetry_defect(self.R) <= tol

    def __add__(self, other: "KahlerCurvature") -> "KahlerCurvature":
        return KahlerCurvature(self.R + other.R)

    def __sub__(self, other: "KahlerCurvature") -> "KahlerCurvature":
        return KahlerCurvature(self.R - other.R)

    def __mul__(self, c: float) -> "KahlerCurvature":
        return KahlerCurvature(c * self.R)

    __rmul__ = __mul__


def _frame_rng(n: int, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, n])


def random_kahler_curvature(n: int, seed: int) -> KahlerCurvature:
    """Complex Gaussian tensor projected onto the Kahler symmetries."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = _frame_rng(n, seed)
    shape = (n, n, n, n)
    raw = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return KahlerCurvature(symmetrize(raw))


def sym_product(B: np.ndarray) -> np.ndarray:
    """``S(B)_{ijkl} = B_ij d_kl + d_ij B_kl + B_il d_kj + d_il B_kj``."""
    n = B.shape[0]
    d = np.eye(n)
    return (
        np.einsum("ij,kl->ijkl", B, d)
        + np.einsum("ij,kl->ijkl", d, B)
        + np.einsum("il,kj->ijkl", B, d)
        + np.einsum("il,kj->ijkl", d, B)
    )


def constant_hsc_model(n: int, c: float = 1.0) -> KahlerCurvature:
    """``c (d_ij d_kl + d_il d_kj)``: constant holomorphic sectional curvature ``2c``."""
    return KahlerCurvature(0.5 * c * sym_product(np.eye(n)))


def ricci(Rm: KahlerCurvature) -> np.ndarray:
    return np.einsum("ijkk->ij", Rm.R)


def scalar(Rm: KahlerCurvature) -> float:
    return float(np.trace(ricci(Rm)).real)


def norm_rm(Rm: KahlerCurvature) -> float:
    """``|Rm|^2``."""
    return float(np.sum(np.abs(Rm.R) ** 2))


def norm_ric(Rm: KahlerCurvature) -> float:
    """``|Ric|^2``."""
    return float(np.sum(np.abs(ricci(Rm)) ** 2))


def einstein_defect(Rm: KahlerCurvature, lam: float) -> float:
    return float(np.abs(ricci(Rm) - lam * np.eye(Rm.n)).max())


def make_einstein(Rm: KahlerCurvature, lam: float) -> KahlerCurvature:
    """Add ``S(X)`` terms so that the Ricci contraction becomes ``lam * Id``.

    Uses ``ricci(S(B)) = (n+2) B + tr(B) Id``: the traceless part ``D0`` of
    the deficit ``D = lam Id - Ric`` is fixed by ``S(D0)/(n+2)`` and the
    trace by ``tr(D)/(2n(n+1)) S(Id)``.
    """
    n = Rm.n
    eye = np.eye(n)
    D = lam * eye - ricci(Rm)
    trD = np.trace(D)
    D0 = D - (trD / n) * eye
    correction = sym_product(D0) / (n + 2) + (trD / (2 * n * (n + 1))) * sym_product(eye)
    out = KahlerCurvature(Rm.R + correction)
    residual = einstein_defect(out, lam)
    if residual > PROJECTION_TOL * (1 + abs(lam) + np.abs(D).max()):
        raise ArithmeticError(f"Einstein projection left a Ricci residual of {residual:.3e}")
    return out


def rm0(Rm: KahlerCurvature, lam: float) -> KahlerCurvature:
    """Subtract the constant-curvature part ``lam/(n+1) (g g + g g)``."""
    n = Rm.n
    return KahlerCurvature(Rm.R - (lam / (n + 1)) * 0.5 * sym_product(np.eye(n)))


def norm_identity_residual(Rm: KahlerCurvature, lam: float) -> float:
    """Relative residual of ``|Rm0|^2 = |Rm|^2 - 2 lam^2 n/(n+1)``."""
    n = Rm.n
    lhs = norm_rm(rm0(Rm, lam))
    rhs = norm_rm(Rm) - 2 * lam**2 * n / (n + 1)
    return abs(lhs - rhs) / (1 + norm_rm(Rm))


def raised(Rm: KahlerCurvature) -> np.ndarray:
    """``T[j, i, k, l] = R^j_{i k lbar}``: curvature endomorphism with form indices ``k, lbar``."""
    return Rm.R.transpose(3, 2, 0, 1)


def contraction_lhs(Rm: KahlerCurvature) -> complex:
    """``sum_{k,i,p,r} (R^k_{i p pbar} R^i_{k r rbar} - R^k_{i p rbar} R^i_{k r pbar})``."""
    T = raised(Rm)
    first = np.einsum("kipp,ikrr->", T, T)
    second = np.einsum("kipr,ikrp->", T, T)
    return complex(first - second)


def contraction_identity_residual(Rm: KahlerCurvature) -> float:
    """``|LHS - (|Ric|^2 - |Rm|^2)|``; holds for any Kahler-symmetric tensor."""
    return abs(contraction_lhs(Rm) - (norm_ric(Rm) - norm_rm(Rm)))


def chern_gap(Rm: KahlerCurvature, lam: float) -> float:
    """Pointwise density ``|Rm0|^2 / (n(n-1) 4 pi^2)`` of the Chern-number gap.

    Integrated against the volume form it equals
    ``(2 c2 - (1 - 1/(n+1)) c1^2) . [omega]^(n-2)``.
    """
    n = Rm.n
    if n < 2:
        raise ValueError("n must be at least 2")
    defect = einstein_defect(Rm, lam)
    if defect > EINSTEIN_TOL:
        raise NotEinsteinError(f"Ricci differs from {lam} Id by {defect:.3e}")
    return norm_rm(rm0(Rm, lam)) / (n * (n - 1) * 4 * np.pi**2)


def holomorphic_sectional_curvature(Rm: KahlerCurvature, v) -> float:
    """``R(v, vbar, v, vbar) / |v|^4``."""
    v = np.asarray(v, dtype=complex)
    norm2 = float(np.vdot(v, v).real)
    if norm2 == 0.0:
        raise ValueError("holomorphic sectional curvature needs a nonzero vector")
    vc = v.conj()
    value = np.einsum("ijkl,i,j,k,l->", Rm.R, v, vc, v, vc)
    return float(value.real) / norm2**2


def hsc_spread(Rm: KahlerCurvature, samples: int = 100, seed: int = 0) -> float:
    """Max minus min of the holomorphic sectional curvature over random directions."""
    rng = _frame_rng(Rm.n, seed)
    vals = []
    for _ in range(samples):
        v = rng.standard_normal(Rm.n) + 1j * rng.standard_normal(Rm.n)
        vals.append(holomorphic_sectional_curvature(Rm, v))
    return max(vals) - min(vals)

"""Numerical opposite Iwasawa factorization g = k exp(t H0) n^- and Phi.

In the light-cone basis (e_-, middle coordinates, e_+) with
e_pm = (e_n +- e_{n+1})/sqrt(2), the boost Y is diag(-1, 0, ..., 0, 1) and
n^- lowers Y-eigenvalues, so A N^- is upper triangular with positive
diagonal.  A QR factorization with positive diagonal therefore splits off K.
This is the only floating-point part of the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from ..errors import FactorizationDiverged
from .algebra import MatrixLieAlgebra, cartan_blocks

RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class IwasawaFactors:
    k: np.ndarray
    t: float
    n_minus: np.ndarray
    residual: float


def _light_cone_basis(N: int, n: int) -> np.ndarray:
    P = np.zeros((N, N))
    s = 1 / np.sqrt(2)
    P[n, 0], P[N - 1, 0] = s, -s  # e_-
    for j in range(n):
        P[j, j + 1] = 1.0
    P[n, N - 1], P[N - 1, N - 1] = s, s  # e_+
    return P


def _to_complex(alg: MatrixLieAlgebra, g: np.ndarray) -> np.ndarray:
    if not alg.realified:
        return np.asarray(g, dtype=float)
    N = alg.size // 2
    return g[:N, :N] + 1j * g[N:, :N]


def _from_complex(alg: MatrixLieAlgebra, z: np.ndarray) -> np.ndarray:
    if not alg.realified:
        return np.real(z)
    return np.block([[z.real, -z.imag], [z.imag, z.real]])


def exp_H0(alg: MatrixLieAlgebra, t: float) -> np.ndarray:
    return expm(t * alg.H0_matrix)


def iwasawa_opposite(alg: MatrixLieAlgebra, g, tol: float = RESIDUAL_TOL) -> IwasawaFactors:
    g = np.asarray(g, dtype=float)
    if not np.all(np.isfinite(g)):
        raise FactorizationDiverged("non-finite group element")
    z = _to_complex(alg, g)
    N = z.shape[0]
    # QR reproduces any matrix, so membership in G is checked separately: g* J g = J
    J = np.diag([1.0] * (N - 1) + [-1.0])
    form_err = float(np.max(np.abs(np.conj(z.T) @ J @ z - J)))
    if form_err > tol * max(1.0, float(np.max(np.abs(z)))) ** 2:
        raise FactorizationDiverged(f"not an element of {alg.group} (form defect {form_err:.3e})")
    P = _light_cone_basis(N, alg.group.n)
    Q, R = np.linalg.qr(P.T @ z @ P)
    phases = np.diag(R) / np.abs(np.diag(R))
    Q = Q * phases
    R = np.conj(phases)[:, None] * R
    k = _from_complex(alg, P @ Q @ P.T)
    s = float(np.log(np.real(R[-1, -1])))
    t = s * float(np.sqrt(float(alg.h0_norm_sq)))
    an = _from_complex(alg, P @ R @ P.T)
    n_minus = exp_H0(alg, -t) @ an
    residual = float(np.max(np.abs(g - k @ exp_H0(alg, t) @ n_minus)))
    if not np.isfinite(residual) or residual > tol * max(1.0, float(np.max(np.abs(g)))):
        raise FactorizationDiverged(f"residual {residual:.3e} exceeds tolerance")
    return IwasawaFactors(k=k, t=t, n_minus=n_minus, residual=residual)


def phi(alg: MatrixLieAlgebra, g) -> float:
    """exp(-nu0(H^-(g))); nu0(H0) = 1 so this is exp(-t)."""
    return float(np.exp(-iwasawa_opposite(alg, g).t))


def _float_basis(alg: MatrixLieAlgebra, coords_list) -> list[np.ndarray]:
    return [np.asarray(alg.matrix_of(v), dtype=float) for v in coords_list]


def random_k(alg: MatrixLieAlgebra, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    k_idx, _ = cartan_blocks(alg)
    X = sum(rng.normal(scale=scale) * alg.basis[i].astype(float) for i in k_idx)
    return expm(X)


def random_n_minus(alg: MatrixLieAlgebra, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    gens = _float_basis(alg, alg.grading.bases["-alpha"] + alg.grading.bases["-2alpha"])
    X = sum(rng.normal(scale=scale) * G for G in gens)
    return expm(X)


def random_group_element(alg, rng: np.random.Generator, t_scale: float = 1.0):
    """(g, k0, t0, n0) with g = k0 exp(t0 H0) n0 built from random factors."""
    k0 = random_k(alg, rng)
    t0 = float(rng.uniform(-t_scale, t_scale))
    n0 = random_n_minus(alg, rng)
    return k0 @ exp_H0(alg, t0) @ n0, k0, t0, n0

"""Explicit matrix realizations of so(n+1,1) and su(n+1,1), with exact checks.

Nothing here uses the closed-form root tables: Killing forms are ad-traces of
the structure constants, and restricted root spaces are exact kernels of
``ad(Y) - c`` for the boost ``Y`` spanning ``a``.

Conventions
-----------
so(n+1,1)
    Real (n+2)x(n+2) matrices ``X`` with ``X^T J + J X = 0``,
    ``J = diag(I_{n+1}, -1)``.  Basis: rotations ``E_ij - E_ji`` (i < j <= n)
    and boosts ``E_{i,n+1} + E_{n+1,i}``.  The boost in coordinate ``n`` spans
    ``a``; M rotates the first ``n`` coordinates.
su(n+1,1)
    Complex matrices realified through ``A + iB -> [[A, -B], [B, A]]``.  The
    same boost spans ``a``.

In both cases the Cartan involution is ``X -> -X^T``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from ..errors import GradingFailure, NotScalar, SizeLimit, UnsupportedFamily
from ..reps import CompactGroupData, IrrepSpec, dominant_representative, m_group
from ..rootdata import Family, RankOneGroup
from .linalg import CoordinateSolver, inverse, is_positive_definite, nullspace, rref

MAX_N = 8

BLOCKS = ("m", "a", "alpha", "-alpha", "2alpha", "-2alpha")


def _unit(N: int, i: int, j: int) -> np.ndarray:
    E = np.zeros((N, N), dtype=np.int64)
    E[i, j] = 1
    return E


def _realify(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    return np.block([[re, -im], [im, re]])


def _so_basis(n: int) -> tuple[list[np.ndarray], list[str], int]:
    N = n + 2
    t = N - 1
    mats, names = [], []
    for i, j in itertools.combinations(range(n + 1), 2):
        mats.append(_unit(N, i, j) - _unit(N, j, i))
        names.append(f"R{i}{j}")
    for i in range(n + 1):
        mats.append(_unit(N, i, t) + _unit(N, t, i))
        names.append(f"B{i}")
    return mats, names, names.index(f"B{n}")


def _su_basis(n: int) -> tuple[list[np.ndarray], list[str], int]:
    N = n + 2
    t = N - 1
    Z = np.zeros((N, N), dtype=np.int64)
    mats, names = [], []
    for i, j in itertools.combinations(range(n + 1), 2):
        mats.append(_realify(_unit(N, i, j) - _unit(N, j, i), Z))
        names.append(f"R{i}{j}")
        mats.append(_realify(Z, _unit(N, i, j) + _unit(N, j, i)))
        names.append(f"iS{i}{j}")
    for j in range(N - 1):
        mats.append(_realify(Z, _unit(N, j, j) - _unit(N, j + 1, j + 1)))
        names.append(f"iD{j}")
    for i in range(n + 1):
        mats.append(_realify(_unit(N, i, t) + _unit(N, t, i), Z))
        names.append(f"B{i}")
        mats.append(_realify(Z, _unit(N, i, t) - _unit(N, t, i)))
        names.append(f"iB{i}")
    return mats, names, names.index(f"B{n}")


@dataclass(frozen=True)
class Grading:
    """Restricted root space decomposition under ad(a).

    ``bases`` holds integer coordinate vectors (rows) for each block;
    ``alpha_value`` is alpha0(Y) for the (unnormalized) boost Y.
    """

    bases: dict
    alpha_value: Fraction

    @property
    def dims(self) -> dict:
        return {k: len(v) for k, v in self.bases.items()}


@dataclass(frozen=True, eq=False)
class MatrixLieAlgebra:
    group: RankOneGroup
    basis: np.ndarray  # (dim, size, size) int64
    names: tuple
    sc_num: np.ndarray  # (dim, dim, dim) int64: [X_i, X_j] = sum_k sc_num[i,j,k]/sc_den X_k
    sc_den: int
    theta: np.ndarray  # (dim, dim) int64: theta(X_i) = sum_k theta[i,k] X_k
    killing: np.ndarray  # (dim, dim) object Fractions
    grading: Grading
    y_index: int
    h0_norm_sq: Fraction  # B(Y, Y); H0 = Y / sqrt(h0_norm_sq)
    realified: bool

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.basis.shape[1]

    @property
    def structure_constants(self) -> np.ndarray:
        out = np.empty(self.sc_num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.sc_num):
            out[idx] = Fraction(int(v), self.sc_den)
        return out

    @property
    def y_matrix(self) -> np.ndarray:
        return self.basis[self.y_index]

    @property
    def H0_matrix(self) -> np.ndarray:
        """Float matrix of the unit vector H0 (the only irrational object here)."""
        return self.y_matrix / np.sqrt(float(self.h0_norm_sq))

    def matrix_of(self, coords) -> np.ndarray:
        """Exact matrix (object Fractions) of a coordinate vector."""
        out = np.zeros((self.size, self.size), dtype=object)
        out[:] = Fraction(0)
        for c, X in zip(coords, self.basis):
            if c:
                out = out + Fraction(c) * X.astype(object)
        return out

    def bracket(self, u, v) -> list[Fraction]:
        """[u, v] in coordinates, computed from the structure constants."""
        u = [Fraction(x) for x in u]
        v = [Fraction(x) for x in v]
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                row = self.sc_num[i, j]
                for k in np.flatnonzero(row):
                    out[k] += ui * vj * Fraction(int(row[k]), self.sc_den)
        return out

    def killing_of(self, u, v) -> Fraction:
        u = np.array([Fraction(x) for x in u], dtype=object)
        v = np.array([Fraction(x) for x in v], dtype=object)
        return u.dot(self.killing).dot(v)

    def inner_product_matrix(self) -> np.ndarray:
        """<X_i, X_j> = -B(X_i, theta X_j)."""
        return -self.killing.dot(self.theta.T.astype(object))

    def with_structure_constants(self, sc_num: np.ndarray) -> "MatrixLieAlgebra":
        """Copy with replaced structure constants (negative-control fixtures)."""
        return replace(self, sc_num=np.asarray(sc_num, dtype=np.int64))


def _structure_constants(mats: list[np.ndarray]) -> tuple[np.ndarray, int]:
    B = np.stack(mats)
    dim, N, _ = B.shape
    solver = CoordinateSolver(B.reshape(dim, N * N))
    prod = np.matmul(B[:, None], B[None, :])
    brackets = prod - np.transpose(prod, (1, 0, 2, 3))
    num, den = solver.solve_int(brackets.reshape(dim * dim, N * N))
    return num.reshape(dim, dim, dim), den


def _theta(mats: list[np.ndarray]) -> np.ndarray:
    B = np.stack(mats)
    dim, N, _ = B.shape
    solver = CoordinateSolver(B.reshape(dim, N * N))
    images = -np.transpose(B, (0, 2, 1)).reshape(dim, N * N)
    num, den = solver.solve_int(images)
    if den != 1 and np.any(num % den):
        raise GradingFailure("Cartan involution is not integral in this basis")
    return num // den


def _killing(sc_num: np.ndarray, den: int) -> np.ndarray:
    kn = np.einsum("ikm,jmk->ij", sc_num, sc_num)
    out = np.empty(kn.shape, dtype=object)
    for idx, v in np.ndenumerate(kn):
        out[idx] = Fraction(int(v), den * den)
    return out


def ad_matrix_num(sc_num: np.ndarray, i: int) -> np.ndarray:
    """Numerator of ad(X_i) acting on column coordinate vectors."""
    return sc_num[i].T


def _restricted_grading(sc_num, den, theta, y_index) -> Grading:
    dim = sc_num.shape[0]
    A = ad_matrix_num(sc_num, y_index)
    bound = int(np.abs(A).sum(axis=1).max())
    eig = {}
    for q in range(-bound, bound + 1):
        ker = nullspace((A - q * np.eye(dim, dtype=np.int64)).astype(object))
        if ker:
            eig[Fraction(q, den)] = ker
    total = sum(len(v) for v in eig.values())
    if total != dim:
        raise GradingFailure(f"ad(Y) eigenspaces span {total} of {dim} dimensions")
    positive = sorted(c for c in eig if c > 0)
    if not positive:
        raise GradingFailure("ad(Y) has no positive eigenvalue")
    c1 = positive[0]
    if any(c not in (c1, 2 * c1) for c in positive) or any(-c not in eig for c in positive):
        raise GradingFailure(f"ad(Y) eigenvalues {sorted(eig)} are not of rank-one type")
    centralizer = eig.get(Fraction(0), [])
    Theta = theta.T.astype(object)
    fixed = np.vstack([A.astype(object), Theta - np.eye(dim, dtype=object)])
    m_basis = nullspace(fixed)
    if len(centralizer) != len(m_basis) + 1:
        raise GradingFailure("centralizer of a is not m + a")
    a_vec = [Fraction(int(i == y_index)) for i in range(dim)]
    bases = {
        "m": m_basis,
        "a": [a_vec],
        "alpha": eig.get(c1, []),
        "-alpha": eig.get(-c1, []),
        "2alpha": eig.get(2 * c1, []),
        "-2alpha": eig.get(-2 * c1, []),
    }
    return Grading(bases=bases, alpha_value=c1)


@lru_cache(maxsize=None)
def build_algebra(group: RankOneGroup) -> MatrixLieAlgebra:
    if group.n > MAX_N:
        raise SizeLimit(f"explicit algebras are built for n <= {MAX_N}")
    if group.family is Family.REAL_HYPERBOLIC:
        mats, names, y = _so_basis(group.n)
        realified = False
    elif group.family is Family.COMPLEX_HYPERBOLIC:
        mats, names, y = _su_basis(group.n)
        realified = True
    else:  # pragma: no cover - Family is closed
        raise UnsupportedFamily(str(group.family))
    sc_num, den = _structure_constants(mats)
    theta = _theta(mats)
    killing = _killing(sc_num, den)
    grading = _restricted_grading(sc_num, den, theta, y)
    return MatrixLieAlgebra(
        group=group,
        basis=np.stack(mats),
        names=tuple(names),
        sc_num=sc_num,
        sc_den=den,
        theta=theta,
        killing=killing,
        grading=grading,
        y_index=y,
        h0_norm_sq=killing[y, y],
        realified=realified,
    )


@dataclass(frozen=True)
class GradingDims:
    m: int
    a: int
    alpha: int
    minus_alpha: int
    two_alpha: int
    minus_two_alpha: int
    norm_alpha0_sq: Fraction

    @property
    def total(self) -> int:
        return self.m + self.a + self.alpha + self.minus_alpha + self.two_alpha + self.minus_two_alpha


def restricted_grading(alg: MatrixLieAlgebra) -> GradingDims:
    d = alg.grading.dims
    dims = GradingDims(
        m=d["m"],
        a=d["a"],
        alpha=d["alpha"],
        minus_alpha=d["-alpha"],
        two_alpha=d["2alpha"],
        minus_two_alpha=d["-2alpha"],
        norm_alpha0_sq=alg.grading.alpha_value ** 2 / alg.h0_norm_sq,
    )
    if dims.total != alg.dim:
        raise GradingFailure(f"blocks sum to {dims.total}, algebra has dimension {alg.dim}")
    return dims


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exact verification, with a witness when it fails."""

    ok: bool
    witness: Optional[str] = None

    def __bool__(self):
        return self.ok


def check_jacobi(alg: MatrixLieAlgebra) -> CheckResult:
    c = alg.sc_num.astype(np.int64)
    # sum_m c_ij^m c_mk^l + cyclic, all numerators share the factor den^2
    t = np.tensordot(c, c, axes=([2], [0]))  # (i, j, k, l)
    total = t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))
    bad = np.argwhere(total != 0)
    if len(bad):
        i, j, k, l = bad[0]
        return CheckResult(False, f"Jacobi fails on ({alg.names[i]}, {alg.names[j]}, {alg.names[k]}), component {alg.names[l]}")
    anti = c + np.transpose(c, (1, 0, 2))
    bad = np.argwhere(anti != 0)
    if len(bad):
        i, j, _ = bad[0]
        return CheckResult(False, f"[{alg.names[i]}, {alg.names[j]}] is not antisymmetric")
    return CheckResult(True)


def check_killing_ad_trace(alg: MatrixLieAlgebra) -> CheckResult:
    """Recompute B(X_i, X_j) = tr(ad X_i ad X_j) from explicit ad matrices."""
    ads = [ad_matrix_num(alg.sc_num, i).astype(object) for i in range(alg.dim)]
    den2 = alg.sc_den ** 2
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            val = Fraction(int(np.trace(ads[i].dot(ads[j]))), den2)
            if val != alg.killing[i, j] or val != alg.killing[j, i]:
                return CheckResult(False, f"B({alg.names[i]}, {alg.names[j]}) mismatch")
    return CheckResult(True)


def cartan_blocks(alg: MatrixLieAlgebra) -> tuple[list[int], list[int]]:
    diag = np.diag(alg.theta)
    off = alg.theta - np.diag(diag)
    if np.any(off):
        raise GradingFailure("theta is not diagonal in the standard basis")
    return [i for i in range(alg.dim) if diag[i] == 1], [i for i in range(alg.dim) if diag[i] == -1]


def check_cartan(alg: MatrixLieAlgebra) -> CheckResult:
    """B(k, p) = 0, B < 0 on k, B > 0 on p, and -B(., theta .) > 0."""
    k_idx, p_idx = cartan_blocks(alg)
    Bk = alg.killing[np.ix_(k_idx, p_idx)]
    if any(x != 0 for x in Bk.flat):
        return CheckResult(False, "B(k, p) != 0")
    if not is_positive_definite(-alg.killing[np.ix_(k_idx, k_idx)]):
        return CheckResult(False, "B is not negative definite on k")
    if not is_positive_definite(alg.killing[np.ix_(p_idx, p_idx)]):
        return CheckResult(False, "B is not positive definite on p")
    if not is_positive_definite(alg.inner_product_matrix()):
        return CheckResult(False, "-B(X, theta Y) is not positive definite")
    return CheckResult(True)


def _vec_str(alg, v) -> str:
    terms = [f"{x}*{alg.names[i]}" for i, x in enumerate(v) if x]
    return " + ".join(terms) or "0"


def verify_horocycle_brackets(alg: MatrixLieAlgebra) -> CheckResult:
    """[H0, X] = alpha(H0) X on each root space, [g_-a, g_-2a] = 0, [g_-2a, g_-2a] = 0.

    Also [g_-a, g_-a] in g_-2a.  Evaluated through the structure constants.
    """
    g = alg.grading
    y = [Fraction(int(i == alg.y_index)) for i in range(alg.dim)]
    c1 = g.alpha_value
    for block, factor in (("alpha", 1), ("-alpha", -1), ("2alpha", 2), ("-2alpha", -2)):
        for X in g.bases[block]:
            lhs = alg.bracket(y, X)
            rhs = [factor * c1 * x for x in X]
            if lhs != rhs:
                return CheckResult(False, f"[Y, {_vec_str(alg, X)}] != {factor}*alpha(Y)*X")
    for X in g.bases["-alpha"]:
        for Z in g.bases["-2alpha"]:
            if any(alg.bracket(X, Z)):
                return CheckResult(False, f"[{_vec_str(alg, X)}, {_vec_str(alg, Z)}] != 0")
    for X, Z in itertools.combinations(g.bases["-2alpha"], 2):
        if any(alg.bracket(X, Z)):
            return CheckResult(False, f"[{_vec_str(alg, X)}, {_vec_str(alg, Z)}] != 0")
    minus2 = g.bases["-2alpha"]
    for X, Z in itertools.combinations(g.bases["-alpha"], 2):
        br = alg.bracket(X, Z)
        if not any(br):
            continue
        if not minus2 or len(rref(minus2 + [br])[1]) != len(minus2):
            return CheckResult(False, f"[{_vec_str(alg, X)}, {_vec_str(alg, Z)}] not in g_-2alpha")
    return CheckResult(True)


class RepKind(enum.Enum):
    DEFINING = "defining"
    SYM2_TRACELESS = "sym2"
    TRIVIAL = "trivial"


class Subgroup(enum.Enum):
    K = "K"
    M = "M"


def subgroup_basis(alg: MatrixLieAlgebra, subgroup: Subgroup) -> list[list[Fraction]]:
    if subgroup is Subgroup.K:
        k_idx, _ = cartan_blocks(alg)
        return [[Fraction(int(i == j)) for i in range(alg.dim)] for j in k_idx]
    return [list(v) for v in alg.grading.bases["m"]]


def _defining_block(alg: MatrixLieAlgebra, X: np.ndarray, size: int) -> np.ndarray:
    """Restriction to the span of the first ``size`` coordinates (must be invariant)."""
    if any(x != 0 for x in X[size:, :].flat) or any(x != 0 for x in X[:, size:].flat):
        raise NotScalar("subgroup element does not preserve the defining subspace")
    return X[:size, :size]


def _sym2_basis(size: int) -> list[np.ndarray]:
    out = []
    for i, j in itertools.combinations(range(size), 2):
        S = np.zeros((size, size), dtype=np.int64)
        S[i, j] = S[j, i] = 1
        out.append(S)
    for i in range(size - 1):
        S = np.zeros((size, size), dtype=np.int64)
        S[i, i], S[i + 1, i + 1] = 1, -1
        out.append(S)
    return out


def _sym2_action(X: np.ndarray, size: int) -> np.ndarray:
    basis = _sym2_basis(size)
    if not basis:
        return np.zeros((0, 0), dtype=object)
    solver = CoordinateSolver(np.stack(basis).reshape(len(basis), size * size))
    cols = []
    for S in basis:
        img = X.dot(S.astype(object)) - S.astype(object).dot(X)
        cols.append(solver.solve(img.reshape(-1)))
    return np.array(cols, dtype=object).T


def representation_matrices(alg, rep: RepKind, subgroup: Subgroup, elements) -> list[np.ndarray]:
    size = alg.group.n + 1 if subgroup is Subgroup.K else alg.group.n
    mats = []
    for v in elements:
        X = _defining_block(alg, alg.matrix_of(v), size)
        if rep is RepKind.DEFINING:
            mats.append(X)
        elif rep is RepKind.SYM2_TRACELESS:
            mats.append(_sym2_action(X, size))
        else:
            mats.append(np.zeros((1, 1), dtype=object) * Fraction(0))
    return mats


def casimir_scalar(alg: MatrixLieAlgebra, rep: RepKind, subgroup: Subgroup) -> Fraction:
    """Scalar by which sum_i rho(K_i)^2 acts, K_i orthonormal for -B.

    Orthonormalization is done as orthogonal Gram-Schmidt, dividing each
    term by the squared norm, so no square roots appear.
    """
    if alg.group.family is not Family.REAL_HYPERBOLIC:
        raise UnsupportedFamily("Casimir scalars are computed for SO(n+1,1) only")
    rep = RepKind(rep)
    subgroup = Subgroup(subgroup)
    elems = subgroup_basis(alg, subgroup)
    ortho: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for v in elems:
        w = list(v)
        for u, nu in zip(ortho, norms):
            coef = -alg.killing_of(w, u) / nu
            w = [a - coef * b for a, b in zip(w, u)]
        nw = -alg.killing_of(w, w)
        if nw <= 0:
            raise NotScalar("-B is not positive on the subgroup")
        ortho.append(w)
        norms.append(nw)
    mats = representation_matrices(alg, rep, subgroup, ortho)
    if rep is RepKind.TRIVIAL or not mats:
        return Fraction(0)
    dimV = mats[0].shape[0]
    if dimV == 0:
        return Fraction(0)
    total = np.zeros((dimV, dimV), dtype=object)
    total[:] = Fraction(0)
    for R, nw in zip(mats, norms):
        total = total + R.dot(R) / nw
    scalar = Fraction(total[0, 0])
    for i in range(dimV):
        for j in range(dimV):
            if total[i, j] != (scalar if i == j else 0):
                raise NotScalar(f"Casimir is not a multiple of the identity (entry {i},{j})")
    return scalar


def weyl_representative(alg: MatrixLieAlgebra) -> np.ndarray:
    """m'_{w0}: rotation by pi in the plane of the last M coordinate and the a-coordinate."""
    n = alg.group.n
    W = np.eye(alg.size, dtype=np.int64)
    W[n - 1, n - 1] = -1
    W[n, n] = -1
    return W


def weyl_torus_signs(alg: MatrixLieAlgebra) -> tuple[int, ...]:
    """Action of Ad(m'_{w0}) on the maximal torus of M, as signs on weight coordinates."""
    if alg.group.family is not Family.REAL_HYPERBOLIC:
        raise UnsupportedFamily("Weyl cross-check is implemented for SO(n+1,1) only")
    n = alg.group.n
    W = weyl_representative(alg)
    Y = alg.y_matrix
    if not np.array_equal(W @ Y @ W, -Y):
        raise GradingFailure("m'_{w0} does not act as -1 on a")
    m_mats = [alg.matrix_of(v) for v in alg.grading.bases["m"]]
    solver = CoordinateSolver(np.stack([m.astype(np.int64) for m in m_mats]).reshape(len(m_mats), -1)) if m_mats else None
    for X in m_mats:
        conj = W.astype(object).dot(X).dot(W.astype(object))
        solver.solve(conj.reshape(-1))  # raises if Ad(W) leaves m
    signs = []
    for j in range(n // 2):
        T = _unit(alg.size, 2 * j, 2 * j + 1) - _unit(alg.size, 2 * j + 1, 2 * j)
        conj = W @ T @ W
        if np.array_equal(conj, T):
            signs.append(1)
        elif np.array_equal(conj, -T):
            signs.append(-1)
        else:
            raise GradingFailure("Ad(m'_{w0}) does not preserve the torus of M")
    return tuple(signs)


def oracle_weyl_action(alg: MatrixLieAlgebra, tau: IrrepSpec) -> IrrepSpec:
    """w0[tau] obtained by conjugating with the explicit m'_{w0} matrix."""
    grp: CompactGroupData = m_group(alg.group)
    if tau.group != grp:
        raise ValueError(f"{tau} is not an M-representation of {alg.group}")
    signs = weyl_torus_signs(alg)
    moved = [s * w for s, w in zip(signs, tau.highest_weight)]
    return IrrepSpec(grp, dominant_representative(grp, moved))

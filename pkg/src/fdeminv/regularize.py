"""Regularization linear algebra.

Discrete derivative operators, truncated-SVD steps, a generalized SVD of the
(Jacobian, regularization-matrix) pair, the truncated-GSVD step used by the
solver, and the minimum-gradient-support stabilizer with its IRLS weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular


class RegularizationError(ValueError):
    """Incompatible or degenerate regularization setup."""


@dataclass(frozen=True)
class RegMatrix:
    """Banded derivative operator of order 0, 1 or 2 (p x n)."""

    order: int
    matrix: np.ndarray

    @property
    def p(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]


def derivative_operator(order: int, n: int) -> RegMatrix:
    """Identity (order 0) or first/second forward-difference stencil."""
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    if n < order + 1:
        raise ValueError(f"need n >= {order + 1} for order {order}")
    if order == 0:
        mat = np.eye(n)
    elif order == 1:
        mat = np.zeros((n - 1, n))
        idx = np.arange(n - 1)
        mat[idx, idx] = -1.0
        mat[idx, idx + 1] = 1.0
    else:
        mat = np.zeros((n - 2, n))
        idx = np.arange(n - 2)
        mat[idx, idx] = 1.0
        mat[idx, idx + 1] = -2.0
        mat[idx, idx + 2] = 1.0
    mat.flags.writeable = False
    return RegMatrix(order, mat)


def numerical_rank(singular_values: np.ndarray, shape: tuple[int, int]) -> int:
    """Conventional threshold: sigma_i > eps * max(shape) * sigma_max."""
    s = np.asarray(singular_values)
    if s.size == 0 or s[0] == 0.0:
        return 0
    tol = np.finfo(float).eps * max(shape) * s[0]
    return int(np.count_nonzero(s > tol))


def tsvd_solve(A: np.ndarray, rhs: np.ndarray, ell: int) -> np.ndarray:
    """Minimum-norm solution of min ||A q - rhs|| on the leading rank-ell
    singular subspace."""
    A = np.asarray(A, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    rank = numerical_rank(s, A.shape)
    if not 1 <= ell <= rank:
        raise ValueError(f"ell={ell} outside 1..rank={rank}")
    coeff = (U[:, :ell].T @ rhs) / s[:ell]
    return Vt[:ell].T @ coeff


@dataclass(frozen=True)
class GsvdFactors:
    """Pair factorization A = U C Zinv, L = V S Zinv with c nondecreasing.

    U has a zero column wherever c_i = 0 (directions annihilated by A);
    all other columns are orthonormal.  ``c`` is padded to length n with
    ones on the trailing L-nullspace block, ``s`` with zeros.
    """

    U: np.ndarray
    V: np.ndarray
    Z: np.ndarray
    Zinv: np.ndarray
    c: np.ndarray
    s: np.ndarray
    rank: int
    p: int

    @property
    def ell_max(self) -> int:
        return self.rank + self.p - self.Z.shape[0]


def gsvd(A: np.ndarray, L: np.ndarray) -> GsvdFactors:
    """GSVD of (A, L) by QR of the stacked pair plus an SVD split.

    Requires p <= n and trivial intersection of the null spaces (checked
    numerically through the rank of the stacked matrix).
    """
    A = np.asarray(A, dtype=float)
    L = np.asarray(L, dtype=float)
    M, n = A.shape
    p, nL = L.shape
    if nL != n:
        raise ValueError("A and L must have the same number of columns")
    if p > n:
        raise RegularizationError(f"regularization matrix has more rows ({p}) than columns ({n})")
    K = np.vstack([A, L])
    sv_K = np.linalg.svd(K, compute_uv=False)
    if numerical_rank(sv_K, K.shape) < n:
        raise RegularizationError("null spaces of the matrix pair intersect; "
                                  "regularization cannot separate them")
    Q, R = np.linalg.qr(K)
    Q2 = Q[M:]
    V, svals, Wt = np.linalg.svd(Q2, full_matrices=True)
    W = Wt.T
    s = np.concatenate([np.clip(svals, 0.0, 1.0), np.zeros(n - p)])
    B = Q[:M] @ W
    c = np.linalg.norm(B, axis=0)
    U = np.zeros_like(B)
    pos = c > 0
    U[:, pos] = B[:, pos] / c[pos]
    Z = solve_triangular(R, W)
    Zinv = W.T @ R
    sv_A = np.linalg.svd(A, compute_uv=False)
    rank = numerical_rank(sv_A, A.shape)
    return GsvdFactors(U=U, V=V, Z=Z, Zinv=Zinv, c=c, s=s, rank=rank, p=p)


def tgsvd_solve(factors: GsvdFactors, rhs: np.ndarray, ell: int) -> np.ndarray:
    """Truncated-GSVD step: the ell retained generalized directions plus the
    unpenalized block, signed so the result approximately minimizes
    ||rhs + A q||.

    ell runs from 1 to rank + p - n; larger ell retains more of the data
    space and regularizes less.
    """
    rhs = np.asarray(rhs, dtype=float)
    p, n = factors.p, factors.Z.shape[0]
    ell_max = factors.ell_max
    if not 1 <= ell <= ell_max:
        raise ValueError(f"ell={ell} outside 1..{ell_max}")
    c_ret = factors.c[p - ell : p]
    if np.any(c_ret <= np.finfo(float).eps):
        raise RegularizationError("degenerate generalized value in the retained block")
    coeff = (factors.U[:, p - ell : p].T @ rhs) / c_ret
    q = -(factors.Z[:, p - ell : p] @ coeff)
    if p < n:
        q -= factors.Z[:, p:] @ (factors.U[:, p:].T @ rhs)
    return q


def mgs_stabilizer(q: np.ndarray, L: RegMatrix, tau_mgs: float) -> tuple[float, np.ndarray]:
    """Minimum-gradient-support value and the matching IRLS row weights.

    S(q) = sum_r t_r^2/(t_r^2 + tau^2) with t_r = (L q)_r / q_r; the ratio's
    denominator is floored at 1e-12 * ||q||_inf so zero entries stay finite.
    Weights 1/(t_r^2 + tau^2) reweight the stabilizer rows in the solver.
    """
    if not tau_mgs > 0:
        raise ValueError("tau_mgs must be > 0")
    q = np.asarray(q, dtype=float)
    mat = L.matrix
    if q.size != mat.shape[1]:
        raise ValueError("profile length does not match the regularization matrix")
    Lq = mat @ q
    floor = 1e-12 * np.max(np.abs(q))
    denom = np.maximum(np.abs(q[: mat.shape[0]]), floor)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio2 = np.where(Lq == 0.0, 0.0, (Lq / denom) ** 2)
    value = float(np.sum(ratio2 / (ratio2 + tau_mgs**2)))
    weights = 1.0 / (ratio2 + tau_mgs**2)
    return value, weights

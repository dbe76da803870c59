"""Jacobians of the field-ratio model with respect to conductivity or
permeability.

The exact path propagates first-order perturbations through the admittance
recursion.  Because layer k enters the recursion only at step k, the
derivative of the surface admittance factors as

    dY_surface/dx_j = (prod_{k<j} dY_k/dY_{k+1}) * (dY_j/dx_j),

so one primal sweep collecting the per-step propagation factors yields all
columns at roughly (n+1) times the cost of a forward evaluation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .forward import TANH_GUARD
from .hankel import get_filter
from .models import MU0, DeviceConfig, SoilModel, index_tuples

WRT_CHOICES = ("sigma", "mu")
METHOD_CHOICES = ("exact", "finite-difference", "broyden")


@dataclass(frozen=True)
class JacobianRequest:
    """How the solver should obtain Jacobians."""

    wrt: str = "sigma"
    method: str = "exact"
    fd_step: float = 1e-6
    broyden_interval: int = 5

    def __post_init__(self):
        if self.wrt not in WRT_CHOICES:
            raise ValueError(f"wrt must be one of {WRT_CHOICES}")
        if self.method not in METHOD_CHOICES:
            raise ValueError(f"method must be one of {METHOD_CHOICES}")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be > 0")
        if self.broyden_interval < 1:
            raise ValueError("broyden_interval must be >= 1")


def _dual_surface_admittance(soil: SoilModel, omega_col: np.ndarray, lam: np.ndarray,
                             wrt: str):
    """Surface admittance and its per-layer derivatives on an (omega, lambda)
    grid.  Returns (Y0, dY0) with dY0 of shape (n, m_w, N)."""
    lam2 = lam * lam
    n = soil.n_layers
    grid_shape = np.broadcast_shapes(omega_col.shape, lam.shape)
    # Per-step propagation factor and explicit-parameter derivative.
    prop = np.empty((n - 1,) + grid_shape, dtype=complex) if n > 1 else None
    own = np.empty((n,) + grid_shape, dtype=complex)
    Y = None
    for k in range(n - 1, -1, -1):
        sig, mu = soil.sigma[k], soil.mu[k]
        u = np.sqrt(lam2 + 1j * sig * mu * omega_col)
        N = u / (1j * mu * omega_col)
        if wrt == "sigma":
            du = 1j * mu * omega_col / (2.0 * u)
            dN = du / (1j * mu * omega_col)
        else:
            du = 1j * sig * omega_col / (2.0 * u)
            dN = du / (1j * mu * omega_col) - u / (1j * mu * mu * omega_col)
        if k == n - 1:
            Y = N + np.zeros(grid_shape, dtype=complex)
            own[k] = dN
        else:
            arg = soil.d[k] * u
            saturated = arg.real > TANH_GUARD
            t = np.where(saturated, 1.0 + 0.0j, np.tanh(np.where(saturated, 0.0, arg)))
            dt = np.where(saturated, 0.0 + 0.0j, soil.d[k] * (1.0 - t * t) * du)
            A = Y + N * t
            B = N + Y * t
            B2 = B * B
            prop[k] = N * (B - A * t) / B2
            dY_dN = A / B + N * (t * B - A) / B2
            dY_dt = N * (N * B - A * Y) / B2
            own[k] = dY_dN * dN + dY_dt * dt
            Y = N * A / B
    dY0 = np.empty((n,) + grid_shape, dtype=complex)
    chain = np.ones(grid_shape, dtype=complex)
    for j in range(n):
        dY0[j] = chain * own[j]
        if j < n - 1:
            chain = chain * prop[j]
    return Y, dY0


def jacobian_exact(soil: SoilModel, device: DeviceConfig, wrt: str = "sigma") -> np.ndarray:
    """d M / d x as a complex (m, n) matrix, x = sigma or mu per layer.

    Exact to rounding: the perturbation components pass through u_k, N_k,
    the admittance recursion, the reflection factor, and the linear filter
    quadrature.
    """
    if wrt not in WRT_CHOICES:
        raise ValueError(f"wrt must be one of {WRT_CHOICES}")
    n = soil.n_layers
    m_w = device.omega.size
    omega_col = device.omega.reshape(-1, 1)
    filt0, filt1 = get_filter(0), get_filter(1)
    offsets = filt0.offsets
    cols: dict[tuple[int, int, int, int], np.ndarray] = {}
    for t in range(device.rho.size):
        rho = float(device.rho[t])
        lam = np.exp(offsets) / rho
        Y0, dY0 = _dual_surface_admittance(soil, omega_col, lam, wrt)
        N0 = lam / (1j * MU0 * omega_col)
        dR = (-2.0 * N0 / (N0 + Y0) ** 2) * dY0  # (n, m_w, N)
        # dM_V/dx = -rho^2 sum W0 lam^2 damp dR;  dM_H/dx = -rho sum W1 lam damp dR
        w0 = filt0.weights * lam * lam
        w1 = filt1.weights * lam
        for i in range(device.h.size):
            damp = np.exp(-2.0 * float(device.h[i]) * lam)
            for j in range(m_w):
                kern = dR[:, j, :] * damp  # (n, N)
                for nu in device.orientations:
                    if nu == 0:
                        cols[(nu, t, i, j)] = -(rho**2) * (kern @ w0)
                    else:
                        cols[(nu, t, i, j)] = -rho * (kern @ w1)
    J = np.empty((device.n_readings, n), dtype=complex)
    for row, key in enumerate(index_tuples(device)):
        J[row] = cols[key]
    return J


def jacobian_fd(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray,
                fd_step: float = 1e-6, floor: float = 1e-10) -> np.ndarray:
    """Forward-difference Jacobian of f at x.

    Column k uses step fd_step * max(|x_k|, floor).  First-order accurate;
    central differences are reserved for test oracles.
    """
    x = np.asarray(x, dtype=float)
    f0 = np.asarray(f(x))
    J = np.empty((f0.size, x.size), dtype=f0.dtype if np.iscomplexobj(f0) else float)
    for k in range(x.size):
        hk = fd_step * max(abs(x[k]), floor)
        xk = x.copy()
        xk[k] += hk
        try:
            fk = np.asarray(f(xk))
        except Exception as err:
            raise RuntimeError(f"model evaluation failed while perturbing column {k}") from err
        J[:, k] = (fk - f0) / hk
    return J


def broyden_update(J: np.ndarray, s: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Rank-one secant update J + (y - J s) s^T / (s^T s) for a real step s.

    A zero step cannot carry secant information; the matrix is returned
    unchanged with a warning.
    """
    s = np.asarray(s, dtype=float)
    y = np.asarray(y)
    ss = float(np.dot(s, s))
    if ss == 0.0:
        warnings.warn("broyden_update skipped: zero step", RuntimeWarning, stacklevel=2)
        return J
    return J + np.outer(y - J @ s, s) / ss

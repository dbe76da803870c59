"""Nonlinear layered-earth forward model.

Surface admittance by backward recursion over layers, reflection factor at
the air interface, secondary/primary field ratios for vertical and
horizontal coplanar coils, and derived real signal components.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hankel import KernelError, get_filter, transform_weighted_sum
from .models import MU0, DataVector, DeviceConfig, SoilModel, index_tuples

TANH_GUARD = 20.0
"""Real part of d*u beyond which tanh is replaced by 1 (error < 1e-17)."""


class SingularConfigError(ArithmeticError):
    """Vanishing denominator in the reflection factor (unphysical input)."""


def _tanh_guarded(z: np.ndarray) -> np.ndarray:
    saturated = z.real > TANH_GUARD
    t = np.tanh(np.where(saturated, 0.0, z))
    return np.where(saturated, 1.0 + 0.0j, t)


@dataclass(frozen=True)
class LayerPropagation:
    """Per-layer propagation constants, characteristic and surface admittances."""

    u: np.ndarray
    N: np.ndarray
    Y: np.ndarray


def layer_propagation(soil: SoilModel, omega: float, lam) -> LayerPropagation:
    """Evaluate u_k, N_k and the admittance recursion for every layer.

    ``lam`` may be a scalar or an array; outputs have a leading layer axis.
    The recursion is initialized with Y = N in the deepest layer and climbs
    to the surface.
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    lam2 = lam * lam
    n = soil.n_layers
    u = np.empty((n,) + lam.shape, dtype=complex)
    N = np.empty_like(u)
    Y = np.empty_like(u)
    for k in range(n - 1, -1, -1):
        u[k] = np.sqrt(lam2 + 1j * soil.sigma[k] * soil.mu[k] * omega)
        N[k] = u[k] / (1j * soil.mu[k] * omega)
        if k == n - 1:
            Y[k] = N[k]
        else:
            t = _tanh_guarded(soil.d[k] * u[k])
            Y[k] = N[k] * (Y[k + 1] + N[k] * t) / (N[k] + Y[k + 1] * t)
    return LayerPropagation(u, N, Y)


def _admittance_grid(soil: SoilModel, omega_col: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """Surface admittance Y_1 on an (omega, lambda) grid, shape (m_w, N)."""
    lam2 = lam * lam
    n = soil.n_layers
    Y = None
    for k in range(n - 1, -1, -1):
        u = np.sqrt(lam2 + 1j * soil.sigma[k] * soil.mu[k] * omega_col)
        N = u / (1j * soil.mu[k] * omega_col)
        if Y is None:
            Y = N
        else:
            t = _tanh_guarded(soil.d[k] * u)
            Y = N * (Y + N * t) / (N + Y * t)
    return Y


def surface_admittance(soil: SoilModel, omega: float, lam) -> np.ndarray:
    """Y_1(lambda): admittance at the top of the shallowest layer."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    lam_arr = np.atleast_1d(np.asarray(lam, dtype=float))
    if np.any(lam_arr <= 0):
        raise ValueError("lambda must be > 0")
    out = _admittance_grid(soil, np.array([[omega]]), lam_arr)[0]
    return out if np.ndim(lam) else out[()]


def _is_zero_contrast(soil: SoilModel) -> bool:
    return bool(np.all(soil.sigma == 0.0) and np.all(soil.mu == MU0))


def _reflection_grid(soil: SoilModel, omega_col: np.ndarray, lam: np.ndarray) -> np.ndarray:
    if _is_zero_contrast(soil):
        # Free-space soil: Y_1 equals N_0 identically, so the exact limit is
        # zero; skip the recursion to avoid returning rounded near-zeros.
        return np.zeros(np.broadcast_shapes(omega_col.shape, lam.shape), dtype=complex)
    N0 = lam / (1j * MU0 * omega_col)
    Y1 = _admittance_grid(soil, omega_col, lam)
    den = N0 + Y1
    if np.any(den == 0):
        raise SingularConfigError("N0 + Y1 vanished; reflection factor undefined")
    return (N0 - Y1) / den


def reflection_factor(soil: SoilModel, omega: float, lam) -> np.ndarray:
    """R(lambda) = (N0 - Y1)/(N0 + Y1) at the ground surface."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    lam_arr = np.atleast_1d(np.asarray(lam, dtype=float))
    if np.any(lam_arr <= 0):
        raise ValueError("lambda must be > 0")
    out = _reflection_grid(soil, np.array([[omega]]), lam_arr)[0]
    return out if np.ndim(lam) else out[()]


def hratio(soil: SoilModel, device: DeviceConfig) -> DataVector:
    """Secondary-to-primary field ratio M for every device reading.

    For each distance rho, height h and angular frequency omega:

        M_V = -rho^3 * H0[lambda e^{-2 h lambda} R](rho)
        M_H = -rho^2 * H1[e^{-2 h lambda} R](rho)

    packed in the canonical (orientation, distance, height, frequency) order.
    """
    m_w = device.omega.size
    omega_col = device.omega.reshape(-1, 1)
    offsets = get_filter(0).offsets
    values: dict[tuple[int, int, int, int], complex] = {}
    for t in range(device.rho.size):
        rho = float(device.rho[t])
        lam = np.exp(offsets) / rho
        R = _reflection_grid(soil, omega_col, lam)  # (m_w, N)
        for i in range(device.h.size):
            damp = np.exp(-2.0 * float(device.h[i]) * lam)
            for j in range(m_w):
                base = damp * R[j]
                for nu in device.orientations:
                    try:
                        if nu == 0:
                            hk = transform_weighted_sum(lam * base, rho, 0)
                            values[(nu, t, i, j)] = -(rho**3) * hk
                        else:
                            hk = transform_weighted_sum(base, rho, 1)
                            values[(nu, t, i, j)] = -(rho**2) * hk
                    except KernelError as err:
                        raise KernelError(
                            f"forward model kernel failed at reading (t={t}, i={i}, j={j}): {err}",
                            err.offending_lambda,
                        ) from err
    order = tuple(index_tuples(device))
    return DataVector(np.array([values[key] for key in order]), order)


def signal_component(M: DataVector, component: str, device: DeviceConfig) -> DataVector:
    """Derive a real signal from the complex field ratios.

    inphase -> Re(M);  quadrature -> Im(M);  apparent-conductivity ->
    4/(omega mu0 rho^2) * Im(M) per reading, in S/m.  The positive sign on
    Im(M) is validated by the low-induction-number limit (apparent
    conductivity of a weakly conductive half-space approaches its true
    conductivity) under the e^{+i omega t} time convention used here.
    """
    vals = M.values
    if component == "inphase":
        out = vals.real.copy()
    elif component == "quadrature":
        out = vals.imag.copy()
    elif component == "apparent-conductivity":
        out = np.empty(len(M), dtype=float)
        for k, (nu, t, i, j) in enumerate(M.index_map):
            scale = 4.0 / (device.omega[j] * MU0 * device.rho[t] ** 2)
            out[k] = scale * vals[k].imag
    else:
        raise ValueError("component must be inphase, quadrature, or apparent-conductivity")
    return DataVector(out, M.index_map)

"""Domain types shared by the forward model and the inversion machinery.

Layered soils, device geometry, the canonical ordering of measurement
vectors, and the real stacking of complex residual systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

MU0 = 4e-7 * np.pi
"""Magnetic permeability of free space, H/m."""

ORIENTATION_NAMES = {0: "vertical", 1: "horizontal"}

VALID_ORIENTATIONS = ("vertical", "horizontal", "both")
VALID_COMPONENTS = ("complex", "inphase", "quadrature", "apparent-conductivity")


class GridError(ValueError):
    """A measurement collection does not cover the device tuple grid exactly."""


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SoilModel:
    """Layered half-space: n layers, the deepest one unbounded.

    Parameters
    ----------
    sigma : array_like, shape (n,)
        Electrical conductivity per layer, S/m.  Nonnegative.
    mu : array_like, shape (n,)
        Magnetic permeability per layer, H/m (absolute).  Positive.
    d : array_like, shape (n-1,)
        Layer thicknesses, m.  The deepest layer has no thickness entry.
    """

    sigma: np.ndarray
    mu: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "sigma", _readonly(np.atleast_1d(self.sigma)))
        object.__setattr__(self, "mu", _readonly(np.atleast_1d(self.mu)))
        object.__setattr__(self, "d", _readonly(np.atleast_1d(self.d) if np.size(self.d) else np.empty(0)))
        n = self.sigma.size
        if n < 1:
            raise ValueError("soil needs at least one layer")
        if self.mu.size != n:
            raise ValueError(f"mu has {self.mu.size} entries, expected {n}")
        if self.d.size != n - 1:
            raise ValueError(f"d has {self.d.size} entries, expected {n - 1}")
        if np.any(self.sigma < 0) or not np.all(np.isfinite(self.sigma)):
            raise ValueError("sigma must be finite and >= 0")
        if np.any(self.mu <= 0) or not np.all(np.isfinite(self.mu)):
            raise ValueError("mu must be finite and > 0")
        if self.d.size and (np.any(self.d <= 0) or not np.all(np.isfinite(self.d))):
            raise ValueError("thicknesses must be finite and > 0")

    @property
    def n_layers(self) -> int:
        return self.sigma.size

    def with_sigma(self, sigma) -> "SoilModel":
        return SoilModel(sigma, self.mu, self.d)

    def with_mu(self, mu) -> "SoilModel":
        return SoilModel(self.sigma, mu, self.d)


@dataclass(frozen=True)
class DeviceConfig:
    """Instrument geometry and excitation.

    rho: inter-coil distances (m), h: heights above ground (m), omega:
    angular frequencies (rad/s).  ``orientation`` selects which coil
    alignments are read, ``component`` which signal the readings represent,
    ``beta`` balances in-phase against quadrature when stacking.
    """

    rho: np.ndarray
    h: np.ndarray
    omega: np.ndarray
    orientation: str = "both"
    component: str = "complex"
    beta: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "rho", _readonly(np.atleast_1d(self.rho)))
        object.__setattr__(self, "h", _readonly(np.atleast_1d(self.h)))
        object.__setattr__(self, "omega", _readonly(np.atleast_1d(self.omega)))
        if self.orientation not in VALID_ORIENTATIONS:
            raise ValueError(f"orientation must be one of {VALID_ORIENTATIONS}")
        if self.component not in VALID_COMPONENTS:
            raise ValueError(f"component must be one of {VALID_COMPONENTS}")
        if np.any(self.rho <= 0) or not np.all(np.isfinite(self.rho)):
            raise ValueError("inter-coil distances must be finite and > 0")
        if np.any(self.h < 0) or not np.all(np.isfinite(self.h)):
            raise ValueError("heights must be finite and >= 0")
        if np.any(self.omega <= 0) or not np.all(np.isfinite(self.omega)):
            raise ValueError("angular frequencies must be finite and > 0")
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise ValueError("beta must be > 0")

    @property
    def orientations(self) -> tuple[int, ...]:
        """Coil orientation codes in reading order: 0 vertical, 1 horizontal."""
        if self.orientation == "vertical":
            return (0,)
        if self.orientation == "horizontal":
            return (1,)
        return (0, 1)

    @property
    def n_readings(self) -> int:
        return len(self.orientations) * self.rho.size * self.h.size * self.omega.size


def index_tuples(device: DeviceConfig) -> Iterator[tuple[int, int, int, int]]:
    """Canonical reading order: orientation slowest, then distance, height,
    frequency fastest."""
    for nu in device.orientations:
        for t in range(device.rho.size):
            for i in range(device.h.size):
                for j in range(device.omega.size):
                    yield (nu, t, i, j)


def data_index(device: DeviceConfig, nu: int, t: int, i: int, j: int) -> int:
    """Position of reading (nu, t, i, j) in the canonical ordering."""
    try:
        slot = device.orientations.index(nu)
    except ValueError:
        raise GridError(f"orientation code {nu} not measured by this device") from None
    m_h, m_w = device.h.size, device.omega.size
    if not (0 <= t < device.rho.size and 0 <= i < m_h and 0 <= j < m_w):
        raise GridError(f"tuple ({nu},{t},{i},{j}) outside the device grid")
    return ((slot * device.rho.size + t) * m_h + i) * m_w + j


@dataclass(frozen=True)
class DataVector:
    """Readings in canonical order together with their (nu, t, i, j) map."""

    values: np.ndarray
    index_map: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        v = np.array(self.values, copy=True)
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "index_map", tuple(tuple(t) for t in self.index_map))
        if self.values.size != len(self.index_map):
            raise ValueError("values and index_map length mismatch")

    def __len__(self) -> int:
        return self.values.size

    def unpack(self) -> dict[tuple[int, int, int, int], complex]:
        return {key: self.values[k] for k, key in enumerate(self.index_map)}

    def replace_values(self, values: np.ndarray) -> "DataVector":
        return DataVector(values, self.index_map)


@dataclass(frozen=True)
class StackedSystem:
    """Real form of a complex residual system: first half beta-weighted real
    parts, second half imaginary parts."""

    r_tilde: np.ndarray
    J_tilde: np.ndarray | None = None

    def __post_init__(self):
        r = np.asarray(self.r_tilde, dtype=float)
        object.__setattr__(self, "r_tilde", r)
        if self.J_tilde is not None:
            J = np.asarray(self.J_tilde, dtype=float)
            if J.shape[0] != r.size:
                raise ValueError("stacked residual and Jacobian row counts differ")
            object.__setattr__(self, "J_tilde", J)


def pack_data_vector(raw: Mapping[tuple[int, int, int, int], complex],
                     device: DeviceConfig) -> DataVector:
    """Arrange readings keyed by (nu, t, i, j) into the canonical vector.

    Raises GridError if the mapping misses a grid tuple, repeats one, or
    contains tuples outside the device grid.
    """
    order = list(index_tuples(device))
    if len(raw) != len(order):
        missing = set(order) - set(raw)
        extra = set(raw) - set(order)
        if missing:
            raise GridError(f"missing readings for tuples {sorted(missing)[:4]}"
                            + ("..." if len(missing) > 4 else ""))
        raise GridError(f"unexpected reading tuples {sorted(extra)[:4]}"
                        + ("..." if len(extra) > 4 else ""))
    values = np.empty(len(order), dtype=complex)
    for k, key in enumerate(order):
        if key not in raw:
            raise GridError(f"missing reading for tuple {key}")
        values[k] = raw[key]
    return DataVector(values, tuple(order))


def stack_vector(r: np.ndarray, beta: float = 1.0) -> np.ndarray:
    """[beta*Re(r); Im(r)] for a complex vector r."""
    r = np.asarray(r)
    return np.concatenate([beta * r.real, r.imag])


def stack_real(r: np.ndarray, J: np.ndarray | None, beta: float = 1.0) -> StackedSystem:
    """Stack a complex residual vector and (optionally) its Jacobian into the
    real 2m system used by the solver."""
    if beta <= 0:
        raise ValueError("beta must be > 0")
    r = np.asarray(r)
    J_tilde = None
    if J is not None:
        J = np.asarray(J)
        if J.shape[0] != r.size:
            raise ValueError("residual and Jacobian row counts differ")
        J_tilde = np.vstack([beta * J.real, J.imag])
    return StackedSystem(stack_vector(r, beta), J_tilde)

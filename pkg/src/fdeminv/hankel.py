"""Order-0/1 Hankel transforms by an exponentially spaced digital filter.

The transform evaluated here is

    H_nu[f](rho) = int_0^inf f(lambda) J_nu(rho*lambda) lambda dlambda,

approximated as (1/rho) * sum_i W_i * lambda_i * f(lambda_i) with nodes
lambda_i = exp(offset_i)/rho.  Both orders share one node grid, so kernels
evaluated once can feed both transforms.  Tables live in _filter_tables
(generated by tools/make_filters.py, which also documents the construction
and the certified accuracy).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _filter_tables as _tables


class KernelError(ArithmeticError):
    """A transform kernel returned a non-finite value at a filter node."""

    def __init__(self, message: str, offending_lambda: float | None = None):
        super().__init__(message)
        self.offending_lambda = offending_lambda


@dataclass(frozen=True)
class HankelFilter:
    """Digital filter for one Bessel order: node exponents and weights."""

    order: int
    log_spacing: float
    offsets: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.order not in (0, 1):
            raise ValueError("order must be 0 or 1")
        if self.offsets.shape != self.weights.shape:
            raise ValueError("offsets/weights length mismatch")

    def __len__(self) -> int:
        return self.offsets.size


_FILTERS = {
    0: HankelFilter(0, _tables.LOG_SPACING, _tables.OFFSETS, _tables.WEIGHTS_J0),
    1: HankelFilter(1, _tables.LOG_SPACING, _tables.OFFSETS, _tables.WEIGHTS_J1),
}


def get_filter(order: int) -> HankelFilter:
    if order not in _FILTERS:
        raise ValueError("order must be 0 or 1")
    return _FILTERS[order]


def filter_nodes(rho: float, order: int = 0) -> np.ndarray:
    """Strictly increasing node positions lambda_i = exp(offset_i)/rho."""
    if not (np.isfinite(rho) and rho > 0):
        raise ValueError("rho must be finite and > 0")
    return np.exp(get_filter(order).offsets) / rho


def transform_weighted_sum(kernel_values: np.ndarray, rho: float, order: int) -> complex:
    """Apply the filter to pre-evaluated kernel values f(lambda_i).

    The lambda factor of the transform measure and the 1/rho scaling are
    applied here, so callers pass bare f values at filter_nodes(rho, order).
    """
    filt = get_filter(order)
    kernel_values = np.asarray(kernel_values)
    if kernel_values.shape[-1] != len(filt):
        raise ValueError(f"expected {len(filt)} kernel values, got {kernel_values.shape[-1]}")
    bad = ~np.isfinite(kernel_values)
    if bad.any():
        k = int(np.argwhere(bad)[0][-1])
        lam = float(np.exp(filt.offsets[k]) / rho)
        raise KernelError(f"kernel not finite at lambda={lam:.6g}", lam)
    nodes = np.exp(filt.offsets) / rho
    return kernel_values @ (filt.weights * nodes) / rho


def hankel_transform(f: Callable[[np.ndarray], np.ndarray], rho: float, order: int) -> complex:
    """H_nu[f](rho) for a callable kernel f of lambda (may be complex)."""
    nodes = filter_nodes(rho, order)
    return transform_weighted_sum(np.asarray(f(nodes)), rho, order)

"""Regularized damped Gauss-Newton inversion.

Line search with positivity, the per-truncation-index iteration, the sweep
over truncation indices with parameter selection (fixed index, discrepancy,
L-curve corner, quasi-optimality), seeded noise synthesis, and the 1D/2D
entry points that wire the layered-earth model into the solver.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .forward import hratio
from .jacobian import JacobianRequest, broyden_update, jacobian_exact, jacobian_fd
from .models import MU0, DataVector, DeviceConfig, SoilModel, stack_real, stack_vector
from .regularize import RegMatrix, derivative_operator, gsvd, mgs_stabilizer, tgsvd_solve

PARAM_METHODS = ("fixed", "discrepancy", "corner", "quasi-optimality")


class InversionCancelled(RuntimeError):
    """Raised when a cancellation hook fires between outer iterations."""


class RegMatrixRankError(ValueError):
    """The stacked system admits no truncation index."""


@dataclass(frozen=True)
class MgsOptions:
    """Minimum-gradient-support stabilizer knobs (enables MGS stepping)."""

    tau_mgs: float = 0.1
    lambda_mgs: float = 1.0

    def __post_init__(self):
        if not (self.tau_mgs > 0 and self.lambda_mgs > 0):
            raise ValueError("tau_mgs and lambda_mgs must be > 0")


@dataclass(frozen=True)
class InversionOptions:
    """Every tunable of the inversion driver.  Defaults follow the package
    conventions: damped, positivity-constrained, order-2 smoothing, corner
    selection."""

    unknown: str = "sigma"
    fixed_profile: float | np.ndarray | None = None
    x_init: float | np.ndarray | None = None
    tau_stop: float = 1e-3
    k_max: int = 50
    alpha_min: float = 2.0**-30
    damped: bool = True
    positivity: bool = True
    reg_order: int = 2
    param_method: str = "corner"
    fixed_ell: int | None = None
    noise_delta: float = 0.0
    noise_std: float | None = None
    tau_discr: float = 1.0
    mgs: MgsOptions | None = None
    jacobian: JacobianRequest = field(default_factory=JacobianRequest)
    yrows: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.unknown not in ("sigma", "mu"):
            raise ValueError("unknown must be 'sigma' or 'mu'")
        if not 0 < self.tau_stop < 1:
            raise ValueError("tau_stop must lie in (0, 1)")
        if not 0 < self.alpha_min < 1:
            raise ValueError("alpha_min must lie in (0, 1)")
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        if self.tau_discr < 1:
            raise ValueError("tau_discr must be >= 1")
        if self.param_method not in PARAM_METHODS:
            raise ValueError(f"param_method must be one of {PARAM_METHODS}")
        if self.param_method == "fixed" and self.fixed_ell is None:
            raise ValueError("param_method 'fixed' needs fixed_ell")
        if self.reg_order not in (0, 1, 2):
            raise ValueError("reg_order must be 0, 1 or 2")
        if self.noise_delta < 0:
            raise ValueError("noise_delta must be >= 0")


@dataclass(frozen=True)
class LeastSquaresProblem:
    """Complex-residual least-squares problem fed to the solver.

    ``forward`` maps a positive parameter vector to model predictions in the
    data ordering; ``jacobian`` returns dM/dx.  The residual is data - M(x),
    stacked to the real 2m system with the balance factor beta.
    """

    data: np.ndarray
    forward: Callable[[np.ndarray], np.ndarray]
    jacobian: Callable[[np.ndarray], np.ndarray]
    reg: RegMatrix
    beta: float = 1.0

    def residual(self, x: np.ndarray) -> np.ndarray:
        return self.data - np.asarray(self.forward(x))

    def stacked_residual(self, x: np.ndarray) -> np.ndarray:
        return stack_vector(self.residual(x), self.beta)


@dataclass(frozen=True)
class GaussNewtonRun:
    """One converged (or terminated) damped Gauss-Newton run."""

    x: np.ndarray
    ell: int | None
    iterations: int
    termination: str
    residual_norm: float
    seminorm: float
    history: np.ndarray  # accepted steps: rows (alpha, residual norm)


@dataclass(frozen=True)
class InversionResult:
    """Profiles and diagnostics for every truncation index, plus the index
    selected by the configured parameter-choice method."""

    ells: tuple[int | None, ...]
    profiles: np.ndarray
    residual_norms: np.ndarray
    seminorms: np.ndarray
    iterations: tuple[int, ...]
    terminations: tuple[str, ...]
    histories: tuple[np.ndarray, ...]
    selected_index: int
    param_method: str
    discrepancy_satisfied: bool | None = None

    @property
    def selected_ell(self) -> int | None:
        return self.ells[self.selected_index]

    @property
    def selected_profile(self) -> np.ndarray:
        return self.profiles[:, self.selected_index]


def line_search(x: np.ndarray, q: np.ndarray,
                residual_fn: Callable[[np.ndarray], np.ndarray],
                damped: bool = True, positivity: bool = True,
                alpha_min: float = 2.0**-30,
                current_norm_sq: float | None = None) -> float | None:
    """Dyadic step-length search: alpha = 2^-j, smallest j such that the
    positivity constraint holds and (damped mode) the residual satisfies
    ||r(x + alpha q)||^2 <= (1 - alpha/4) ||r(x)||^2.

    Undamped mode returns the largest dyadic alpha that keeps the iterate
    positive.  Returns None when no admissible alpha >= alpha_min exists
    (stagnation signal for the outer loop).
    """
    if damped and current_norm_sq is None:
        r0 = residual_fn(x)
        current_norm_sq = float(r0 @ r0)
    alpha = 1.0
    while alpha >= alpha_min:
        cand = x + alpha * q
        if (not positivity) or np.all(cand > 0):
            if not damped:
                return alpha
            r = residual_fn(cand)
            if float(r @ r) <= (1.0 - alpha / 4.0) * current_norm_sq:
                return alpha
        alpha *= 0.5
    return None


def _model_jacobian(problem: LeastSquaresProblem, x, req: JacobianRequest,
                    state: dict) -> np.ndarray:
    """Fresh or Broyden-maintained model Jacobian dM/dx at x."""
    if req.method == "finite-difference":
        return jacobian_fd(problem.forward, x, req.fd_step)
    if req.method == "exact" or state.get("J") is None or \
            state.get("age", 0) >= req.broyden_interval:
        J = problem.jacobian(x)
        state["J"] = J
        state["age"] = 0
        return J
    return state["J"]


def gauss_newton(problem: LeastSquaresProblem, ell: int | None,
                 opts: InversionOptions, x0: np.ndarray,
                 should_stop: Callable[[], bool] | None = None,
                 iter_cb: Callable[[int], None] | None = None) -> GaussNewtonRun:
    """Damped Gauss-Newton iteration at one truncation index.

    Steps come from the truncated GSVD of the stacked (Jacobian, L) pair, or
    from the IRLS-weighted augmented system when MGS options are set (then
    ``ell`` is ignored and reported as None).  Iterates until the relative
    profile change drops below tau_stop, the iteration budget is exhausted,
    or the line search stagnates.  If the stacked system's rank bookkeeping
    at some iterate admits fewer than ``ell`` indices, the step uses the
    largest admissible index there.
    """
    x = np.array(x0, dtype=float)
    if opts.positivity and not np.all(x > 0):
        raise ValueError("x_init must be positive when the positivity constraint is on")
    L = problem.reg
    use_mgs = opts.mgs is not None
    r = problem.residual(x)
    rt = stack_vector(r, problem.beta)
    history: list[tuple[float, float]] = []
    termination = "max_iterations"
    broyden_state: dict = {}
    iterations = 0
    for k in range(1, opts.k_max + 1):
        if should_stop is not None and should_stop():
            raise InversionCancelled("stop requested")
        J_model = _model_jacobian(problem, x, opts.jacobian, broyden_state)
        system = stack_real(r, -J_model, problem.beta)
        if use_mgs:
            _, w = mgs_stabilizer(x, L, opts.mgs.tau_mgs)
            aug = np.vstack([system.J_tilde,
                             opts.mgs.lambda_mgs * np.sqrt(w)[:, None] * L.matrix])
            rhs = np.concatenate([-system.r_tilde, np.zeros(L.p)])
            q, *_ = np.linalg.lstsq(aug, rhs, rcond=None)
        else:
            factors = gsvd(system.J_tilde, L.matrix)
            q = tgsvd_solve(factors, system.r_tilde, min(ell, factors.ell_max))
        alpha = line_search(x, q, problem.stacked_residual, opts.damped,
                            opts.positivity, opts.alpha_min,
                            current_norm_sq=float(rt @ rt))
        iterations = k
        if alpha is None:
            termination = "stagnation"
            break
        x_new = x + alpha * q
        r_new = problem.residual(x_new)
        rt_new = stack_vector(r_new, problem.beta)
        history.append((alpha, float(np.linalg.norm(rt_new))))
        if opts.jacobian.method == "broyden":
            broyden_state["J"] = broyden_update(broyden_state["J"], x_new - x, r - r_new)
            broyden_state["age"] = broyden_state.get("age", 0) + 1
        step_norm = float(np.linalg.norm(x_new - x))
        x, r, rt = x_new, r_new, rt_new
        if iter_cb is not None:
            iter_cb(k)
        if step_norm < opts.tau_stop * float(np.linalg.norm(x)):
            termination = "converged"
            break
    return GaussNewtonRun(
        x=x,
        ell=None if use_mgs else ell,
        iterations=iterations,
        termination=termination,
        residual_norm=float(np.linalg.norm(rt)),
        seminorm=float(np.linalg.norm(L.matrix @ x)),
        history=np.array(history).reshape(-1, 2),
    )


def corner_index(residual_norms: Sequence[float], seminorms: Sequence[float]) -> int:
    """Discrete L-curve corner by the triangle (wedge-angle) method.

    Points (log residual, log seminorm) are normalized to the unit box;
    the corner is the interior point with the sharpest wedge to the curve
    endpoints among points bulging toward the origin side of the chord.
    """
    res = np.maximum(np.asarray(residual_norms, dtype=float), 1e-300)
    sem = np.maximum(np.asarray(seminorms, dtype=float), 1e-300)
    K = res.size
    if K < 3:
        return K - 1
    x = np.log(res)
    y = np.log(sem)
    x = (x - x.min()) / max(np.ptp(x), 1e-12)
    y = (y - y.min()) / max(np.ptp(y), 1e-12)
    a_x, a_y = x[0], y[0]
    b_x, b_y = x[-1], y[-1]
    best, best_angle = None, np.inf
    best_any, best_any_angle = None, np.inf
    for j in range(1, K - 1):
        v1 = np.array([a_x - x[j], a_y - y[j]])
        v2 = np.array([b_x - x[j], b_y - y[j]])
        n1, n2 = np.linalg.norm(v1), np.linalg.norm(v2)
        if n1 == 0 or n2 == 0:
            continue
        angle = np.arccos(np.clip(v1 @ v2 / (n1 * n2), -1.0, 1.0))
        cross = (b_x - a_x) * (y[j] - a_y) - (b_y - a_y) * (x[j] - a_x)
        if angle < best_any_angle:
            best_any, best_any_angle = j, angle
        if cross > 0 and angle < best_angle:
            best, best_angle = j, angle
    if best is not None:
        return best
    return best_any if best_any is not None else K - 1


def sweep_and_select(problem: LeastSquaresProblem, opts: InversionOptions,
                     x0: np.ndarray,
                     should_stop: Callable[[], bool] | None = None,
                     progress_cb: Callable[[int, int, int], None] | None = None,
                     ) -> InversionResult:
    """Run the Gauss-Newton iteration for every admissible truncation index
    (cold-started from x0 each time) and select one per the configured
    parameter-choice method.

    progress_cb, when given, receives (runs_done, runs_total, iteration) on
    every solver iteration and run completion.
    """
    x0 = np.asarray(x0, dtype=float)
    if opts.mgs is not None:
        ell_list: list[int | None] = [None]
    else:
        J0 = problem.jacobian(x0)
        fac0 = gsvd(stack_real(problem.residual(x0), -J0, problem.beta).J_tilde,
                    problem.reg.matrix)
        if fac0.ell_max < 1:
            raise RegMatrixRankError("no admissible truncation index: "
                                     f"rank {fac0.rank} + p {fac0.p} <= n")
        ell_list = list(range(1, fac0.ell_max + 1))
    runs: list[GaussNewtonRun] = []
    total = len(ell_list)
    for idx, ell in enumerate(ell_list):
        cb = (lambda k, _i=idx: progress_cb(_i, total, k)) if progress_cb else None
        runs.append(gauss_newton(problem, ell, opts, x0, should_stop, cb))
        if progress_cb:
            progress_cb(idx + 1, total, 0)
    res_norms = np.array([r.residual_norm for r in runs])
    seminorms = np.array([r.seminorm for r in runs])
    discrepancy_satisfied = None
    if opts.param_method == "fixed" and opts.mgs is None:
        matches = [i for i, e in enumerate(ell_list) if e == opts.fixed_ell]
        if not matches:
            raise ValueError(f"fixed_ell={opts.fixed_ell} outside the admissible range "
                             f"1..{ell_list[-1]}")
        selected = matches[0]
    elif opts.param_method == "discrepancy" and opts.noise_std is not None \
            and opts.mgs is None:
        m2 = 2 * np.size(problem.data)
        delta_hat = opts.noise_std * np.sqrt(m2)
        ok = np.nonzero(res_norms <= opts.tau_discr * delta_hat)[0]
        if ok.size:
            selected = int(ok[0])
            discrepancy_satisfied = True
        else:
            selected = len(runs) - 1
            discrepancy_satisfied = False
    elif opts.param_method == "quasi-optimality" and len(runs) > 1:
        diffs = np.linalg.norm(np.diff(np.column_stack([r.x for r in runs]), axis=1),
                               axis=0)
        selected = int(np.argmin(diffs))
    else:
        # corner; also the fallback when discrepancy lacks a noise estimate
        # or the sweep is a single MGS run.
        selected = corner_index(res_norms, seminorms) if len(runs) > 1 else 0
    return InversionResult(
        ells=tuple(r.ell for r in runs),
        profiles=np.column_stack([r.x for r in runs]),
        residual_norms=res_norms,
        seminorms=seminorms,
        iterations=tuple(r.iterations for r in runs),
        terminations=tuple(r.termination for r in runs),
        histories=tuple(r.history for r in runs),
        selected_index=selected,
        param_method=opts.param_method,
        discrepancy_satisfied=discrepancy_satisfied,
    )


def add_noise(b: DataVector, delta: float, seed: int) -> DataVector:
    """Perturb readings with seed-deterministic Gaussian noise of exactly
    the requested relative norm on the stacked real representation."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if delta == 0:
        return b
    rt = stack_vector(b.values, beta=1.0)
    w = np.random.default_rng(seed).standard_normal(rt.size)
    e = delta * np.linalg.norm(rt) * w / np.linalg.norm(w)
    noisy = rt + e
    m = len(b)
    return b.replace_values(noisy[:m] + 1j * noisy[m:])


def layer_midpoints(thicknesses: np.ndarray) -> np.ndarray:
    """Depth of each layer center; the unbounded deepest layer is assigned
    the thickness of its neighbor (or 1 m for a half-space)."""
    d = np.asarray(thicknesses, dtype=float)
    last = d[-1] if d.size else 1.0
    edges = np.concatenate([[0.0], np.cumsum(d)])
    return np.concatenate([edges[:-1] + np.diff(edges) / 2.0,
                           [edges[-1] + last / 2.0]])


def bump_profile(z: np.ndarray) -> np.ndarray:
    """Smooth synthetic conductivity: 0.05 S/m background with one Gaussian
    bump of amplitude 0.15 centered at 1.2 m depth."""
    z = np.asarray(z, dtype=float)
    return 0.05 + 0.15 * np.exp(-((z - 1.2) ** 2) / 0.18)


def _as_profile(value, n: int, default: float) -> np.ndarray:
    if value is None:
        return np.full(n, default)
    arr = np.atleast_1d(np.asarray(value, dtype=float))
    if arr.size == 1:
        return np.full(n, arr[0])
    if arr.size != n:
        raise ValueError(f"profile has {arr.size} entries, expected {n}")
    return arr.copy()


def invert_profile(data: DataVector | np.ndarray, device: DeviceConfig,
                   thicknesses: np.ndarray, opts: InversionOptions,
                   should_stop: Callable[[], bool] | None = None,
                   progress_cb: Callable[[int, int, int], None] | None = None,
                   ) -> InversionResult:
    """Reconstruct one conductivity or permeability profile from a sounding.

    The non-inverted quantity is held at opts.fixed_profile (defaults:
    free-space permeability when inverting sigma, zero conductivity when
    inverting mu).  opts.yrows restricts the fit to a subset of the complex
    readings.
    """
    values = data.values if isinstance(data, DataVector) else np.asarray(data)
    if values.size != device.n_readings:
        raise ValueError(f"data has {values.size} readings, device expects "
                         f"{device.n_readings}")
    if not np.all(np.isfinite(values)):
        raise ValueError("data contains non-finite readings")
    d = np.asarray(thicknesses, dtype=float)
    n = d.size + 1
    rows = np.asarray(opts.yrows, dtype=int) if opts.yrows is not None else None
    if rows is not None and (rows.min() < 0 or rows.max() >= values.size):
        raise ValueError("yrows outside the data range")
    wrt = opts.unknown
    if wrt == "sigma":
        fixed = _as_profile(opts.fixed_profile, n, MU0)
        make_soil = lambda x: SoilModel(x, fixed, d)
        x0 = _as_profile(opts.x_init, n, 0.1)
    else:
        fixed = _as_profile(opts.fixed_profile, n, 0.0)
        make_soil = lambda x: SoilModel(fixed, x, d)
        x0 = _as_profile(opts.x_init, n, MU0)

    def fwd(x):
        out = hratio(make_soil(x), device).values
        return out if rows is None else out[rows]

    def jac(x):
        out = jacobian_exact(make_soil(x), device, wrt)
        return out if rows is None else out[rows]

    problem = LeastSquaresProblem(
        data=values if rows is None else values[rows],
        forward=fwd,
        jacobian=jac,
        reg=derivative_operator(opts.reg_order, n),
        beta=device.beta,
    )
    req = dataclasses.replace(opts.jacobian, wrt=wrt)
    opts = dataclasses.replace(opts, jacobian=req)
    return sweep_and_select(problem, opts, x0, should_stop, progress_cb)


@dataclass(frozen=True)
class SectionResult:
    """Column-wise inversion of a 2D section; failures are isolated."""

    results: tuple[InversionResult | None, ...]
    errors: tuple[str | None, ...]
    profiles: np.ndarray  # (n, n_columns), NaN columns where inversion failed

    @property
    def selected_ells(self) -> tuple[int | None, ...]:
        return tuple(r.selected_ell if r is not None else None for r in self.results)


def invert_section(data: np.ndarray, device: DeviceConfig,
                   thicknesses: np.ndarray, opts: InversionOptions,
                   should_stop: Callable[[], bool] | None = None,
                   progress_cb: Callable[[int, int, int], None] | None = None,
                   ) -> SectionResult:
    """Independent per-column inversions of an (m, n_columns) data matrix.

    A failing column is recorded with its error message and a NaN profile;
    the remaining columns are still inverted.  Cancellation aborts the whole
    section.
    """
    data = np.asarray(data)
    if data.ndim != 2:
        raise ValueError("section data must be a 2D (readings, columns) array")
    n = np.asarray(thicknesses).size + 1
    n_cols = data.shape[1]
    results: list[InversionResult | None] = []
    errors: list[str | None] = []
    profiles = np.full((n, n_cols), np.nan)
    for c in range(n_cols):
        try:
            res = invert_profile(data[:, c], device, thicknesses, opts,
                                 should_stop)
        except InversionCancelled:
            raise
        except Exception as err:  # noqa: BLE001 - column isolation by contract
            results.append(None)
            errors.append(f"{type(err).__name__}: {err}")
        else:
            results.append(res)
            errors.append(None)
            profiles[:, c] = res.selected_profile
        if progress_cb is not None:
            progress_cb(c + 1, n_cols, 0)
    return SectionResult(tuple(results), tuple(errors), profiles)

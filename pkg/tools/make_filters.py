"""Generate the exponentially spaced Hankel-transform filter tables.

Construction
------------
Writing rho = e^x and lambda = e^-y turns the Hankel integral

    I(rho) = int_0^inf g(lambda) J_nu(rho * lambda) dlambda

into a log-domain convolution rho*I = (G * K)(x) with G(y) = g(e^-y) and
kernel K(u) = e^u J_nu(e^u).  The Fourier transform of K is the Mellin
transform of J_nu on the line Re s = 1,

    K^(xi) = M_nu(1 - i xi),
    M_nu(s) = 2^(s-1) Gamma((nu+s)/2) / Gamma(1 + (nu-s)/2),

a pure-phase function.  Multiplying by a smooth erfc window w(xi) supported
inside the sampling band |xi| < pi/spacing band-limits the kernel; its inverse
transform sampled on the log grid gives weights with fast decay.  For inputs
whose log-domain spectrum has died out before the window rolls off, the
quadrature

    int_0^inf g(lambda) J_nu(rho*lambda) dlambda ~= (1/rho) * sum_i W_i g(b_i/rho)

is accurate to the certified tolerance below.  Accuracy is certified against
closed-form exponential pairs (see validate()) over a wide parameter range;
the shipped package re-checks the same band in its test suite.

Run:  python tools/make_filters.py [--out src/fdeminv/_filter_tables.py]
"""

from __future__ import annotations

import argparse

import numpy as np
from scipy.special import erfc, loggamma, roots_legendre

# Filter design parameters (see module docstring).
SPACING = 0.08          # log-domain node spacing
OFFSET_MIN = -28.0      # smallest node exponent
OFFSET_MAX = 8.0        # largest node exponent
XI_CUT = 24.0           # erfc window center
XI_WIDTH = 3.0          # erfc window width


def mellin_line(nu: int, xi: np.ndarray) -> np.ndarray:
    """M_nu(1 - i*xi): unit-modulus transfer function of the log-kernel."""
    s_half = (nu + 1 - 1j * xi) / 2.0
    return np.exp(-1j * xi * np.log(2.0) + loggamma(s_half) - loggamma(np.conj(s_half)))


def window(xi: np.ndarray) -> np.ndarray:
    return 0.5 * erfc((np.abs(xi) - XI_CUT) / XI_WIDTH)


def band_kernel(nu: int, u: np.ndarray) -> np.ndarray:
    """Windowed inverse transform K_w(u), evaluated by panelled Gauss-Legendre."""
    xi_max = np.pi / SPACING
    n_panels = 160
    gl_x, gl_w = roots_legendre(24)
    edges = np.linspace(0.0, xi_max, n_panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    xi = (mid[:, None] + half[:, None] * gl_x[None, :]).ravel()
    wq = (half[:, None] * gl_w[None, :]).ravel()
    spectrum = mellin_line(nu, xi) * window(xi)
    # K_w(u) = (1/pi) * Re int_0^ximax spectrum(xi) e^{i xi u} dxi
    phase = np.exp(1j * np.outer(u, xi))
    return (phase @ (spectrum * wq)).real / np.pi


def build_filter(nu: int) -> tuple[np.ndarray, np.ndarray]:
    n = int(round((OFFSET_MAX - OFFSET_MIN) / SPACING)) + 1
    offsets = OFFSET_MIN + SPACING * np.arange(n)
    weights = SPACING * band_kernel(nu, offsets)
    return offsets, weights


def apply_filter(offsets, weights, g, rho):
    nodes = np.exp(offsets) / rho
    return weights @ g(nodes) / rho


def validate(offsets, weights, nu: int) -> float:
    """Max relative error over closed-form exponential/Gaussian pairs."""
    worst = 0.0
    a_grid = np.geomspace(1e-3, 1e3, 241)
    rho_grid = np.array([0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
    for rho in rho_grid:
        for a in a_grid:
            if nu == 0:
                # int e^{-a l} J0(rho l) dl  and  int l e^{-a l} J0(rho l) dl
                exact1 = 1.0 / np.hypot(a, rho)
                exact2 = a / np.hypot(a, rho) ** 3
            else:
                exact1 = (1.0 - a / np.hypot(a, rho)) / rho
                exact2 = rho / np.hypot(a, rho) ** 3
            got1 = apply_filter(offsets, weights, lambda l: np.exp(-a * l), rho)
            got2 = apply_filter(offsets, weights, lambda l: l * np.exp(-a * l), rho)
            worst = max(worst, abs(got1 - exact1) / abs(exact1), abs(got2 - exact2) / abs(exact2))
    # Gaussian pairs exercise a different spectral shape.
    for rho in (0.5, 1.0, 2.0):
        for a in (0.25, 1.0, 4.0):
            if nu == 0:
                exact = np.exp(-(rho**2) / (4 * a)) / (2 * a)
                got = apply_filter(offsets, weights, lambda l: l * np.exp(-a * l * l), rho)
            else:
                exact = (1.0 - np.exp(-(rho**2) / (4 * a))) / rho
                got = apply_filter(offsets, weights, lambda l: np.exp(-a * l * l), rho)
            worst = max(worst, abs(got - exact) / abs(exact))
    return worst


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="src/fdeminv/_filter_tables.py")
    args = parser.parse_args()

    tables = {}
    errs = {}
    for nu in (0, 1):
        offsets, weights = build_filter(nu)
        errs[nu] = validate(offsets, weights, nu)
        tables[nu] = (offsets, weights)
        print(f"order {nu}: {len(weights)} points, max rel err {errs[nu]:.3e}")

    offsets = tables[0][0]
    assert np.array_equal(offsets, tables[1][0])

    lines = [
        '"""Digital-filter tables for order-0/1 Hankel transforms on an',
        "exponentially spaced node grid (generated by tools/make_filters.py;",
        "spectral construction from the Bessel kernel's Mellin-line transfer",
        "function with an erfc band window -- see that script for details).",
        "",
        f"Node exponents: {len(offsets)} points, spacing {SPACING}, range",
        f"[{OFFSET_MIN}, {OFFSET_MAX}].  Certified max relative error on the",
        f"closed-form validation pairs: {max(errs.values()):.2e}.",
        '"""',
        "",
        "import numpy as np",
        "",
        f"LOG_SPACING = {SPACING!r}",
        "",
    ]

    def emit(name, arr):
        lines.append(f"{name} = np.array([")
        for i in range(0, len(arr), 4):
            chunk = ", ".join(repr(float(v)) for v in arr[i : i + 4])
            lines.append(f"    {chunk},")
        lines.append("])")
        lines.append("")

    emit("OFFSETS", offsets)
    emit("WEIGHTS_J0", tables[0][1])
    emit("WEIGHTS_J1", tables[1][1])

    with open(args.out, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

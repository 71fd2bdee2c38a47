"""Hadamard products of harmonic maps and the sheared-product dilatation.

The harmonic Hadamard product multiplies analytic-part coefficients with
analytic-part coefficients and co-analytic with co-analytic:

    (f * F) = h * H + conj(g * G),   (h * H)_n = a_n A_n.

For the product of the horizontally sheared half-plane map with a map whose
parts sum to z/(1-z) and whose dilatation is w(z) = e^{i t} z^n, the product
dilatation has the closed form

    wtil(z) = z (w^2 + [w - w' z / 2] + w'/2) / (1 + [w - w' z / 2] + w' z^2 / 2),

which this module evaluates directly and cross-checks against the dilatation
computed pointwise from the product series.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .harmonic import HarmonicMap
from .series import TruncatedSeries, make_generator


@dataclass(frozen=True)
class ConvolutionResult:
    product: HarmonicMap
    left_label: str
    right_label: str


def hadamard_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise product, truncated to the smaller degree."""
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: n + 1] * b.coeffs[: n + 1])


def hadamard(f: HarmonicMap, F: HarmonicMap) -> ConvolutionResult:
    """Harmonic Hadamard product of two normalized maps.

    The result keeps the normalization (the degree-one analytic coefficient
    is 1 * 1) and is truncated to the smaller operand degree.  Closed-form
    evaluators do not survive the product; the result is series-backed.
    """
    prod = HarmonicMap(
        hadamard_series(f.h, F.h),
        hadamard_series(f.g, F.g),
        None,
        label=f"({f.label or 'f'})*({F.label or 'F'})",
    )
    return ConvolutionResult(prod, f.label or "f", F.label or "F")


def convex_combination_convolve(
    phi: TruncatedSeries,
    beta: complex,
    f: HarmonicMap,
) -> HarmonicMap:
    """Product of beta*conj(phi) + phi with f: H = phi*h, G = conj(beta)(phi*g).

    For |beta| <= 1 and convex analytic phi this sends members of the
    dilatation-alpha*z family to close-to-convex maps; here only the
    coefficient arithmetic is performed.
    """
    if abs(beta) > 1 + 1e-12:
        raise ValueError("need |beta| <= 1")
    if abs(phi.coefficient(0)) > 1e-14 or abs(phi.coefficient(1) - 1) > 1e-14:
        raise ValueError("phi must be normalized")
    H = hadamard_series(phi, f.h)
    G = np.conj(beta) * hadamard_series(phi, f.g)
    return HarmonicMap(H, G, None, label=f"combination*({f.label or 'f'})")


def tilde_dilatation(z, n: int, theta: float):
    """Closed-form dilatation of the product map for w(z) = e^{i theta} z^n."""
    eps = np.exp(1j * theta)
    zc = np.asarray(z, dtype=complex)
    w = eps * zc ** n
    wp = n * eps * zc ** (n - 1)
    mid = w - 0.5 * wp * zc
    num = w * w + mid + 0.5 * wp
    den = 1 + mid + 0.5 * wp * zc * zc
    out = zc * num / den
    return complex(out) if np.isscalar(z) else out


@dataclass(frozen=True)
class TildeDilatationReport:
    """Grid maximum of |wtil| plus the closed-form vs series cross-check."""

    n: int
    theta: float
    max_abs: float
    passed: bool
    r_max: float
    grid: tuple[int, int]
    cross_check_max_err: float
    cross_check_r_max: float
    cross_check_passed: bool

    def to_dict(self) -> dict:
        return {
            "condition_name": "product_dilatation_bounded",
            "n": self.n,
            "theta": self.theta,
            "max_abs": self.max_abs,
            "passed": self.passed,
            "r_max": self.r_max,
            "grid": list(self.grid),
            "cross_check_max_err": self.cross_check_max_err,
            "cross_check_r_max": self.cross_check_r_max,
            "cross_check_passed": self.cross_check_passed,
        }


def tilde_dilatation_check(
    n: int,
    theta: float,
    grid: tuple[int, int] = (64, 256),
    r_max: float = 0.999,
    cross_order: int = 512,
    cross_r_max: float = 0.9,
    cross_tol: float = 1e-6,
) -> TildeDilatationReport:
    """Local univalence check for the product of the sheared maps.

    Evaluates |wtil| on an (n_r x n_theta) polar grid up to ``r_max`` (pass
    iff the maximum stays below 1), then rebuilds the same dilatation from
    scratch: the right factor is obtained by shearing z/(1-z) vertically with
    dilatation e^{i theta} z^n, the product is formed coefficientwise, and
    its dilatation g'/h' is compared against the closed form on a coarser
    grid up to ``cross_r_max``.
    """
    if n not in (1, 2):
        raise ValueError("closed form applies to n = 1 or 2")
    from .catalog import map_F, shear_vertical

    n_r, n_t = grid
    radii = np.linspace(r_max / n_r, r_max, n_r)
    thetas = np.linspace(0, 2 * np.pi, n_t, endpoint=False)
    zg = radii[:, None] * np.exp(1j * thetas[None, :])
    wt = tilde_dilatation(zg, n, theta)
    if not np.all(np.isfinite(wt)):
        raise ZeroDivisionError("product-dilatation denominator vanishes on the grid")
    max_abs = float(np.max(np.abs(wt)))

    w = np.zeros(cross_order + 1, dtype=complex)
    w[n] = np.exp(1j * theta)
    right = shear_vertical(make_generator("half_plane_l", cross_order), TruncatedSeries(w))
    prod = hadamard(map_F(cross_order), right).product
    cr = np.linspace(cross_r_max / 16, cross_r_max, 16)
    ct = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    zc = cr[:, None] * np.exp(1j * ct[None, :])
    from .harmonic import dilatation as _dil

    err = float(np.max(np.abs(_dil(prod, zc) - tilde_dilatation(zc, n, theta))))
    return TildeDilatationReport(
        n=n,
        theta=theta,
        max_abs=max_abs,
        passed=max_abs < 1.0,
        r_max=r_max,
        grid=grid,
        cross_check_max_err=err,
        cross_check_r_max=cross_r_max,
        cross_check_passed=err < cross_tol,
    )

"""Coefficient-condition classifiers and analytic-family verifiers.

Two kinds of result live here:

* order classifiers driven by absolute-coefficient sums, which certify that a
  map is fully starlike / fully convex of an explicit order when the sum is
  small enough, and
* sampled verifiers for the one-parameter family with dilatation alpha*z
  (coefficient recurrence, curvature-type grid condition, coefficient and
  growth bounds, image area, arc integrals of Kaplan type).

Coefficient sums run over the stored truncation; every report records the
truncation degree so callers can reason about the neglected tail.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .defaults import CIRCLE_THETA_POINTS, RELATION_ABS_TOL
from .harmonic import HarmonicMap, SingularPointError, evaluate_f
from .series import TruncatedSeries

_ONE_MINUS = float(np.nextafter(1.0, 0.0))


@dataclass(frozen=True)
class ClassificationReport:
    """Which coefficient condition fired, and the orders it certifies."""

    condition_name: str
    condition_value: float
    threshold: float
    passed: bool
    order_starlike: float | None = None
    order_convex: float | None = None
    close_to_convex: bool | None = None
    degenerate: bool = False
    truncation_order: int = 0

    def to_dict(self) -> dict:
        return {
            "condition_name": self.condition_name,
            "condition_value": self.condition_value,
            "threshold": self.threshold,
            "passed": self.passed,
            "orders": {"starlike": self.order_starlike, "convex": self.order_convex},
            "close_to_convex": self.close_to_convex,
            "degenerate": self.degenerate,
            "truncation_order": self.truncation_order,
            "grid": None,
        }


def _capped_order(value: float) -> tuple[float, bool]:
    # orders live in [0, 1); the value 1.0 occurs only for the identity map
    if value >= 1.0:
        return _ONE_MINUS, True
    return value, False


def order_starlike_from_linear_sum(lam: float) -> float:
    """Starlike order certified by sum n (|a_n| + |b_n|) <= lam <= 1."""
    return 2 * (1 - lam) / (2 + lam)


def order_starlike_from_quadratic_sum(lam: float) -> float:
    """Starlike order certified by sum n^2 (|a_n| + |b_n|) <= lam <= 1."""
    return 2 * (2 - lam) / (4 + lam)


def order_convex_from_quadratic_sum(lam: float) -> float:
    """Convex order certified by sum n^2 (|a_n| + |b_n|) <= lam <= 1."""
    return 2 * (1 - lam) / (2 + lam)


def coefficient_sum_orders(f: HarmonicMap) -> tuple[ClassificationReport, ClassificationReport]:
    """Classify via the two weighted coefficient sums (weights n and n^2).

    Requires b_1 = 0.  The linear sum certifies full starlikeness; the
    quadratic sum certifies full starlikeness of a higher order plus full
    convexity.
    """
    if abs(f.g.coefficient(1)) > 1e-14:
        raise ValueError("classifier requires b_1 = g'(0) = 0")
    order = f.order
    n = np.arange(2, order + 1, dtype=float)
    mags = np.abs(f.h.coeffs[2 : order + 1]) + np.abs(f.g.coeffs[2 : order + 1])
    lam1 = float(np.sum(n * mags))
    lam2 = float(np.sum(n * n * mags))

    if lam1 <= 1.0:
        v, degen = _capped_order(order_starlike_from_linear_sum(lam1))
        rep1 = ClassificationReport("linear_coefficient_sum", lam1, 1.0, True,
                                    order_starlike=v, degenerate=degen, truncation_order=order)
    else:
        rep1 = ClassificationReport("linear_coefficient_sum", lam1, 1.0, False, truncation_order=order)

    if lam2 <= 1.0:
        vs, dg1 = _capped_order(order_starlike_from_quadratic_sum(lam2))
        vc, dg2 = _capped_order(order_convex_from_quadratic_sum(lam2))
        rep2 = ClassificationReport("quadratic_coefficient_sum", lam2, 1.0, True,
                                    order_starlike=vs, order_convex=vc,
                                    degenerate=dg1 or dg2, truncation_order=order)
    else:
        rep2 = ClassificationReport("quadratic_coefficient_sum", lam2, 1.0, False, truncation_order=order)
    return rep1, rep2


def analytic_part_classify(h: TruncatedSeries, alpha: complex, power: int) -> ClassificationReport:
    """Classify a map built from h with dilatation alpha*z via sum n^power |a_n|.

    power = 2: sum <= 1 and |alpha| <= 1 gives close-to-convexity; |alpha| <= 1/3
    additionally gives full starlikeness of order 2(1-3|alpha|)/(5+3|alpha|).

    power = 3: sum <= 1 and |alpha| <= 2/11 gives full starlikeness of order
    2(6-11|alpha|)/(18+11|alpha|) and full convexity of order
    2(2-11|alpha|)/(10+11|alpha|).
    """
    if power not in (2, 3):
        raise ValueError("power must be 2 or 3")
    if abs(h.coefficient(0)) > 1e-14 or abs(h.coefficient(1) - 1) > 1e-14:
        raise ValueError("h must be normalized")
    a = abs(alpha)
    order = h.order
    n = np.arange(2, order + 1, dtype=float)
    total = float(np.sum(n ** power * np.abs(h.coeffs[2 : order + 1])))
    name = "cubed_coefficient_sum" if power == 3 else "squared_coefficient_sum"

    if total > 1.0:
        return ClassificationReport(name, total, 1.0, False, truncation_order=order)

    if power == 2:
        ctc = a <= 1.0
        if a <= 1 / 3:
            v, degen = _capped_order(2 * (1 - 3 * a) / (5 + 3 * a))
            return ClassificationReport(name, total, 1.0, True, order_starlike=v,
                                        close_to_convex=ctc, degenerate=degen, truncation_order=order)
        return ClassificationReport(name, total, 1.0, ctc, close_to_convex=ctc, truncation_order=order)

    if a <= 2 / 11:
        vs, d1 = _capped_order(2 * (6 - 11 * a) / (18 + 11 * a))
        vc, d2 = _capped_order(2 * (2 - 11 * a) / (10 + 11 * a))
        return ClassificationReport(name, total, 1.0, True, order_starlike=vs, order_convex=vc,
                                    degenerate=d1 or d2, truncation_order=order)
    return ClassificationReport(name, total, 1.0, False, truncation_order=order)


# -- dilatation-family checks ----------------------------------------------------


def coefficient_relation_residual(f: HarmonicMap, alpha: complex) -> float:
    """Max residual of (n+1) b_{n+1} - n alpha a_n over the truncation."""
    order = f.order
    n = np.arange(1, order, dtype=float)
    lhs = (n + 1) * f.g.coeffs[2 : order + 1]
    rhs = n * alpha * f.h.coeffs[1:order]
    res = np.abs(lhs - rhs)
    res = np.append(res, abs(f.g.coefficient(1)))  # b_1 must vanish
    return float(np.max(res))


@dataclass(frozen=True)
class MAlphaReport:
    """Outcome of the membership test for the dilatation-alpha*z family."""

    alpha: complex
    relation_residual: float
    relation_passed: bool
    curvature_grid_min: float
    curvature_passed: bool
    passed: bool
    r_max: float
    grid: tuple[int, int]
    truncation_order: int
    check_kind: str = "necessary"

    def to_dict(self) -> dict:
        return {
            "condition_name": "dilatation_family_membership",
            "alpha": [self.alpha.real, self.alpha.imag],
            "relation_residual": self.relation_residual,
            "relation_passed": self.relation_passed,
            "curvature_grid_min": self.curvature_grid_min,
            "curvature_passed": self.curvature_passed,
            "passed": self.passed,
            "r_max": self.r_max,
            "grid": list(self.grid),
            "truncation_order": self.truncation_order,
            "check_kind": self.check_kind,
        }


def m_alpha_check(
    f: HarmonicMap,
    alpha: complex,
    r_max: float = 0.99,
    grid: tuple[int, int] = (64, 256),
) -> MAlphaReport:
    """Test membership in the family g' = alpha z h' with bounded curvature term.

    Part (a) checks the coefficient recurrence exactly (tolerance 1e-10).
    Part (b) samples Re(1 + z h''/h') > -1/2 on a polar grid up to r_max;
    being an open condition it can only be falsified, never certified, by
    sampling.
    """
    if abs(alpha) > 1 + 1e-12:
        raise ValueError("need |alpha| <= 1")
    if not 0 < r_max < 1:
        raise ValueError("need 0 < r_max < 1")
    residual = coefficient_relation_residual(f, alpha)
    relation_ok = residual <= RELATION_ABS_TOL

    n_r, n_t = grid
    radii = np.linspace(r_max / n_r, r_max, n_r)
    thetas = np.linspace(0, 2 * np.pi, n_t, endpoint=False)
    z = radii[:, None] * np.exp(1j * thetas[None, :])
    hp = f.dh_at(z)
    if np.any(np.abs(hp) == 0.0):
        idx = int(np.argmax(np.abs(hp).ravel() == 0.0))
        raise SingularPointError(complex(z.ravel()[idx]))
    curv = np.real(1 + z * f.d2h_at(z) / hp)
    cmin = float(np.min(curv))
    curv_ok = cmin > -0.5
    return MAlphaReport(
        alpha=complex(alpha),
        relation_residual=residual,
        relation_passed=relation_ok,
        curvature_grid_min=cmin,
        curvature_passed=curv_ok,
        passed=relation_ok and curv_ok,
        r_max=r_max,
        grid=grid,
        truncation_order=f.order,
    )


@dataclass(frozen=True)
class BoundsReport:
    """Coefficient and growth bound verification for a family member."""

    alpha: complex
    coeff_slack_a: float
    coeff_slack_b: float
    coeff_passed: bool
    growth_min_slack: float
    growth_passed: bool
    passed: bool
    samples: int
    truncation_order: int

    def to_dict(self) -> dict:
        return {
            "condition_name": "coefficient_and_growth_bounds",
            "alpha": [self.alpha.real, self.alpha.imag],
            "coeff_slack_a": self.coeff_slack_a,
            "coeff_slack_b": self.coeff_slack_b,
            "coeff_passed": self.coeff_passed,
            "growth_min_slack": self.growth_min_slack,
            "growth_passed": self.growth_passed,
            "passed": self.passed,
            "samples": self.samples,
            "truncation_order": self.truncation_order,
        }


def growth_bound(alpha: complex, z) -> np.ndarray:
    """Sharp modulus bound |z|/(1-|z|)^2 [1 - (1-|alpha|)|z|/2] for the family."""
    r = np.abs(z)
    return r / (1 - r) ** 2 * (1 - 0.5 * (1 - abs(alpha)) * r)


def family_bounds_check(
    f: HarmonicMap,
    alpha: complex,
    samples: int = 1000,
    r_max: float = 0.9,
    seed: int = 7,
) -> BoundsReport:
    """Verify |a_n| <= (n+1)/2, |b_n| <= (n-1)|alpha|/2 and the growth bound.

    Coefficient slack is reported as bound - |coefficient| (minimum over n,
    allowed down to -1e-12); the growth bound is sampled at random points
    with |z| <= r_max (slack allowed down to -1e-9).
    """
    if coefficient_relation_residual(f, alpha) > RELATION_ABS_TOL:
        raise ValueError("coefficient recurrence fails; bounds only apply to family members")
    order = f.order
    n = np.arange(2, order + 1, dtype=float)
    slack_a = float(np.min((n + 1) / 2 - np.abs(f.h.coeffs[2 : order + 1])))
    slack_b = float(np.min((n - 1) / 2 * abs(alpha) - np.abs(f.g.coeffs[2 : order + 1])))
    coeff_ok = slack_a >= -1e-12 and slack_b >= -1e-12

    rng = np.random.default_rng(seed)
    z = rng.uniform(0, r_max, samples) * np.exp(1j * rng.uniform(0, 2 * np.pi, samples))
    slack = growth_bound(alpha, z) - np.abs(evaluate_f(f, z))
    gmin = float(np.min(slack))
    growth_ok = gmin >= -1e-9
    return BoundsReport(
        alpha=complex(alpha),
        coeff_slack_a=slack_a,
        coeff_slack_b=slack_b,
        coeff_passed=coeff_ok,
        growth_min_slack=gmin,
        growth_passed=growth_ok,
        passed=coeff_ok and growth_ok,
        samples=samples,
        truncation_order=order,
    )


def area_series(f: HarmonicMap, alpha: complex) -> float:
    """Image area of a family member from its coefficients.

    A = pi (1 - |alpha|^2/2) + pi sum_{n>=2} (n - n^2 |alpha|^2/(n+1)) |a_n|^2.

    Every summand is nonnegative for |alpha| <= 1, so the minimum pi(1 -
    |alpha|^2/2) is attained exactly when h is the identity.
    """
    if coefficient_relation_residual(f, alpha) > RELATION_ABS_TOL:
        raise ValueError("coefficient recurrence fails; area formula needs g' = alpha z h'")
    a2 = abs(alpha) ** 2
    order = f.order
    n = np.arange(2, order + 1, dtype=float)
    weights = n - n * n * a2 / (n + 1)
    return float(np.pi * (1 - a2 / 2) + np.pi * np.sum(weights * np.abs(f.h.coeffs[2 : order + 1]) ** 2))


def poisson_kernel(zeta: complex, theta) -> float | np.ndarray:
    """Harmonic-measure density (1 - |zeta|^2) / |e^{i theta} - zeta|^2."""
    if abs(zeta) >= 1:
        raise ValueError("kernel point must satisfy |zeta| < 1")
    th = np.asarray(theta, dtype=float)
    val = (1 - abs(zeta) ** 2) / np.abs(np.exp(1j * th) - zeta) ** 2
    return float(val) if np.isscalar(theta) else val


def kaplan_integrand(f: HarmonicMap, epsilon: complex, r: float, theta):
    """Re(1 + z Fe''/Fe') on |z| = r, where Fe = h + epsilon g."""
    z = r * np.exp(1j * np.asarray(theta, dtype=float))
    fp = f.dh_at(z) + epsilon * f.dg_at(z)
    small = np.abs(np.asarray(fp)) < 1e-13
    if np.any(small):
        zf = np.broadcast_to(np.asarray(z, dtype=complex), small.shape)
        raise SingularPointError(complex(zf.ravel()[int(np.argmax(small.ravel()))]))
    fpp = f.d2h_at(z) + epsilon * f.d2g_at(z)
    return np.real(1 + z * fpp / fp)


def kaplan_integral_check(
    f: HarmonicMap,
    epsilon: complex,
    r: float,
    theta1: float,
    theta2: float,
) -> float:
    """Arc integral of Re(1 + z Fe''/Fe') over theta in [theta1, theta2].

    Adaptive quadrature; the close-to-convexity criterion asks for every such
    integral to stay above -pi.  A full period (theta2 - theta1 = 2 pi) must
    integrate to exactly 2 pi when Fe' has no zeros inside |z| < r.
    """
    if not 0 < theta2 - theta1 <= 2 * np.pi + 1e-12:
        raise ValueError("need 0 < theta2 - theta1 <= 2 pi")
    if abs(abs(epsilon) - 1) > 1e-12:
        raise ValueError("epsilon must be unimodular")
    val, _ = quad(
        lambda t: float(kaplan_integrand(f, epsilon, r, t)),
        theta1,
        theta2,
        limit=400,
        epsabs=1e-10,
        epsrel=1e-10,
    )
    return float(val)


def kaplan_worst_subarc(
    f: HarmonicMap,
    epsilon: complex,
    r: float,
    n_grid: int = CIRCLE_THETA_POINTS,
) -> tuple[float, tuple[float, float]]:
    """Scan all grid sub-arcs for the minimal arc integral of the integrand.

    Cumulative trapezoid sums make the scan O(n); the returned arc can be
    re-verified with :func:`kaplan_integral_check`.
    """
    theta = np.linspace(0, 2 * np.pi, n_grid + 1)
    vals = kaplan_integrand(f, epsilon, r, theta)
    step = 2 * np.pi / n_grid
    cum = np.concatenate([[0.0], np.cumsum((vals[1:] + vals[:-1]) / 2 * step)])
    run_min = np.minimum.accumulate(cum)
    diffs = cum[1:] - run_min[:-1]
    j = int(np.argmin(diffs))
    worst = float(diffs[j])
    i = int(np.argmin(cum[: j + 1]))
    return worst, (float(theta[i]), float(theta[j + 1]))

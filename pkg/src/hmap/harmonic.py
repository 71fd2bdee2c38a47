"""Planar harmonic mappings f = h + conj(g) on the unit disk.

The analytic part ``h`` and the co-analytic part ``g`` are both stored as
analytic power series (the conjugation is applied only at evaluation time),
because every coefficient relation used elsewhere in the package acts on the
analytic ``g``.  A map may carry closed-form evaluators for (h, g) and their
first two derivatives; whenever they are present they take over from the
truncated series outside |z| = 0.7, so boundary-adjacent scans stay accurate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .defaults import (
    COEFF_ABS_TOL,
    EXACT_AGREEMENT_POINTS,
    EXACT_AGREEMENT_TOL,
    EXACT_SWITCH_RADIUS,
)
from .series import TruncatedSeries


class SingularPointError(ValueError):
    """Raised when h'(z) vanishes where a dilatation is requested."""

    def __init__(self, z: complex):
        self.z = z
        super().__init__(f"h' vanishes at z = {z}")


@dataclass(frozen=True)
class ExactEvaluators:
    """Closed-form evaluators for h, g and their first two derivatives.

    Each callable must accept complex scalars and ndarrays alike.
    """

    h: Callable
    g: Callable
    dh: Callable
    dg: Callable
    d2h: Callable
    d2g: Callable


def _check_exact_agreement(hmap: "HarmonicMap") -> None:
    # fixed seed: construction must be deterministic
    rng = np.random.default_rng(20157)
    r = 0.5 * np.sqrt(rng.uniform(0, 1, EXACT_AGREEMENT_POINTS))
    t = rng.uniform(0, 2 * np.pi, EXACT_AGREEMENT_POINTS)
    z = r * np.exp(1j * t)
    pairs = (
        ("h", hmap.exact.h, hmap.h),
        ("g", hmap.exact.g, hmap.g),
        ("dh", hmap.exact.dh, hmap.h.differentiate()),
        ("dg", hmap.exact.dg, hmap.g.differentiate()),
        ("d2h", hmap.exact.d2h, hmap.h.differentiate(2)),
        ("d2g", hmap.exact.d2g, hmap.g.differentiate(2)),
    )
    # second derivatives of maps with quadratically growing coefficients leave
    # a tail ~ n^4 (1/2)^n at the check radius; the allowance keeps the check
    # strict at the default truncation degree but not vacuous below it
    order = min(hmap.h.order, hmap.g.order)
    tol = EXACT_AGREEMENT_TOL + 8.0 * (order + 2) ** 4 * 0.5 ** (order + 1)
    for name, exact, ser in pairs:
        gap = np.max(np.abs(exact(z) - ser.evaluate(z)))
        if gap > tol:
            raise ValueError(
                f"closed-form {name} disagrees with its series by {gap:.3e} "
                f"inside |z| <= 0.5 (allowed {tol:.3e})"
            )


@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """Sense-preserving candidate f = h + conj(g), normalized at the origin.

    Normalization ``h(0) = 0`` and ``h'(0) = 1`` is enforced; ``g`` is an
    arbitrary analytic series.  Instances are immutable and all operations on
    them are pure.
    """

    h: TruncatedSeries
    g: TruncatedSeries
    exact: ExactEvaluators | None = None
    label: str = ""

    def __post_init__(self):
        if abs(self.h.coefficient(0)) > COEFF_ABS_TOL or abs(self.h.coefficient(1) - 1) > COEFF_ABS_TOL:
            raise ValueError("analytic part must satisfy h(0) = 0 and h'(0) = 1")
        if self.exact is not None:
            _check_exact_agreement(self)

    @property
    def order(self) -> int:
        return min(self.h.order, self.g.order)

    @cached_property
    def _dh(self) -> TruncatedSeries:
        return self.h.differentiate()

    @cached_property
    def _dg(self) -> TruncatedSeries:
        return self.g.differentiate()

    @cached_property
    def _d2h(self) -> TruncatedSeries:
        return self.h.differentiate(2)

    @cached_property
    def _d2g(self) -> TruncatedSeries:
        return self.g.differentiate(2)

    # -- evaluation plumbing -------------------------------------------------

    def _eval(self, which: str, z):
        """Evaluate one of h, g, h', g', h'', g'' with the series/exact switch."""
        zarr = np.asarray(z, dtype=complex)
        if np.any(np.abs(zarr) >= 1.0):
            raise ValueError("harmonic map evaluation requires |z| < 1")
        series = {
            "h": self.h, "g": self.g,
            "dh": self._dh, "dg": self._dg,
            "d2h": self._d2h, "d2g": self._d2g,
        }[which]
        if self.exact is None:
            return series.evaluate(zarr if zarr.ndim else z)
        exact_fn = getattr(self.exact, which)
        far = np.abs(zarr) > EXACT_SWITCH_RADIUS
        if zarr.ndim == 0:
            return complex(exact_fn(complex(z))) if far else series.evaluate(z)
        out = series.evaluate(np.where(far, 0, zarr))
        if np.any(far):
            out = np.where(far, exact_fn(zarr), out)
        return out

    def h_at(self, z):
        return self._eval("h", z)

    def g_at(self, z):
        return self._eval("g", z)

    def dh_at(self, z):
        return self._eval("dh", z)

    def dg_at(self, z):
        return self._eval("dg", z)

    def d2h_at(self, z):
        return self._eval("d2h", z)

    def d2g_at(self, z):
        return self._eval("d2g", z)

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"HarmonicMap(order={self.order}{tag}, exact={self.exact is not None})"


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class GridCheckReport:
    """Outcome of a sampled positivity check on a polar grid.

    A pass is a necessary condition only: the property was observed on the
    grid, not certified on the disk.
    """

    name: str
    passed: bool
    r_max: float
    grid: tuple[int, int]
    worst_value: float
    first_failure: complex | None = None
    check_kind: str = "necessary"

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "passed": self.passed,
            "r_max": self.r_max,
            "grid": list(self.grid),
            "worst_value": self.worst_value,
            "check_kind": self.check_kind,
        }
        if self.first_failure is not None:
            d["first_failure"] = [self.first_failure.real, self.first_failure.imag]
        return d


@dataclass(frozen=True)
class CollisionReport:
    """Outcome of the sampled injectivity check.

    ``collision`` is True when two sample points at domain distance at least
    ``min_separation`` land (numerically) on the same image point.  Absence
    of a collision proves nothing; presence falsifies injectivity on the
    sampled disk.
    """

    passed: bool
    collision: bool
    min_image_distance: float
    witness: tuple[complex, complex] | None
    n_samples: int
    r_max: float
    min_separation: float
    collision_tol: float
    check_kind: str = "necessary"

    def to_dict(self) -> dict:
        d = {
            "passed": self.passed,
            "collision": self.collision,
            "min_image_distance": self.min_image_distance,
            "n_samples": self.n_samples,
            "r_max": self.r_max,
            "min_separation": self.min_separation,
            "collision_tol": self.collision_tol,
            "check_kind": self.check_kind,
        }
        if self.witness is not None:
            d["witness"] = [[w.real, w.imag] for w in self.witness]
        return d


# -- operations ----------------------------------------------------------------


def evaluate_f(f: HarmonicMap, z):
    """Value of the harmonic map: h(z) + conj(g(z))."""
    return f.h_at(z) + np.conj(f.g_at(z))


def dilatation(f: HarmonicMap, z):
    """Second complex dilatation w = g'/h'.

    Raises :class:`SingularPointError` where h' vanishes.
    """
    hp = f.dh_at(z)
    gp = f.dg_at(z)
    hp_arr = np.asarray(hp)
    zero = np.abs(hp_arr) == 0.0
    if np.any(zero):
        zf = np.broadcast_to(np.asarray(z, dtype=complex), hp_arr.shape)
        raise SingularPointError(complex(zf.ravel()[int(np.argmax(zero.ravel()))]))
    return gp / hp


def jacobian(f: HarmonicMap, z):
    """Jacobian determinant |h'|^2 - |g'|^2; positive iff sense-preserving at z."""
    hp = f.dh_at(z)
    gp = f.dg_at(z)
    return np.abs(hp) ** 2 - np.abs(gp) ** 2


def angular_derivatives(f: HarmonicMap, r: float, theta):
    """First and second derivatives of f along the circle |z| = r.

    With z = r e^{i theta}:

        d1 = i (z h'(z) - conj(z g'(z)))
        d2 = -(z h' + z^2 h'') - conj(z g' + z^2 g'')

    Both follow from differentiating z(theta) = r e^{i theta} through the
    chain rule; they drive the circle-image convexity and starlikeness tests.
    """
    if not 0 < r < 1:
        raise ValueError("need 0 < r < 1")
    z = r * np.exp(1j * np.asarray(theta, dtype=float))
    if np.isscalar(theta):
        z = complex(z)
    zhp = z * f.dh_at(z)
    zgp = z * f.dg_at(z)
    d1 = 1j * (zhp - np.conj(zgp))
    d2 = -(zhp + z * z * f.d2h_at(z)) - np.conj(zgp + z * z * f.d2g_at(z))
    return d1, d2


def sense_preserving_check(
    f: HarmonicMap,
    r_max: float,
    grid: tuple[int, int] = (32, 64),
) -> GridCheckReport:
    """Sample the Jacobian on a polar grid and require it to be positive.

    Failure reports the first offending node; a pass is only a sampled
    necessary condition for the map being sense-preserving.
    """
    if not 0 < r_max < 1:
        raise ValueError("need 0 < r_max < 1")
    n_r, n_t = grid
    if n_r < 8 or n_t < 8:
        raise ValueError("grid must be at least 8 x 8")
    radii = np.linspace(r_max / n_r, r_max, n_r)
    thetas = np.linspace(0.0, 2 * np.pi, n_t, endpoint=False)
    zg = radii[:, None] * np.exp(1j * thetas[None, :])
    jac = jacobian(f, zg)
    worst = float(np.min(jac))
    if worst > 0:
        return GridCheckReport("sense_preserving", True, r_max, grid, worst)
    idx = np.unravel_index(int(np.argmin(jac)), jac.shape)
    return GridCheckReport("sense_preserving", False, r_max, grid, worst, complex(zg[idx]))


def _disk_samples(r_max: float, n: int) -> np.ndarray:
    # sunflower layout: quasi-uniform, deterministic
    k = np.arange(1, n + 1)
    rho = r_max * np.sqrt((k - 0.5) / n)
    ang = k * (np.pi * (3 - np.sqrt(5)))
    return rho * np.exp(1j * ang)


def injectivity_sample_check(
    f: HarmonicMap,
    r_max: float,
    n_samples: int = 1000,
    min_separation: float = 0.05,
    collision_tol: float = 1e-8,
    include: tuple[complex, ...] = (),
) -> CollisionReport:
    """Scan image distances of well-separated sample pairs.

    Two samples at domain distance >= ``min_separation`` whose images differ
    by less than ``collision_tol`` falsify injectivity on |z| <= r_max.  The
    quadratic pair scan caps ``n_samples`` at 2000; ``include`` lets callers
    pin specific points (suspected collision pairs) into the sample set.
    """
    if n_samples > 2000:
        raise ValueError("n_samples capped at 2000 (quadratic pair scan)")
    z = _disk_samples(r_max, n_samples)
    if include:
        z = np.concatenate([np.asarray(include, dtype=complex), z])
    w = evaluate_f(f, z)
    best = np.inf
    witness = None
    block = 256
    for i0 in range(0, z.size, block):
        zi = z[i0 : i0 + block]
        wi = w[i0 : i0 + block]
        dz = np.abs(zi[:, None] - z[None, :])
        dw = np.abs(wi[:, None] - w[None, :])
        dw[dz < min_separation] = np.inf
        j = int(np.argmin(dw))
        val = float(dw.ravel()[j])
        if val < best:
            best = val
            a, b = np.unravel_index(j, dw.shape)
            witness = (complex(zi[a]), complex(z[b]))
    collision = best < collision_tol
    return CollisionReport(
        passed=not collision,
        collision=collision,
        min_image_distance=best,
        witness=witness if collision else None,
        n_samples=int(z.size),
        r_max=r_max,
        min_separation=min_separation,
        collision_tol=collision_tol,
    )

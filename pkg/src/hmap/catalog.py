"""Constructors for the named harmonic mappings studied by the package.

Every entry returns a :class:`~hmap.harmonic.HarmonicMap` populated with both
truncated series coefficients and closed-form evaluators, so that radius
scans close to the unit circle stay accurate.

Catalog vocabulary (also the CLI ``--function`` grammar):

================  ==============================================================
``f_alpha:re,im``  half-plane/Koebe mix with dilatation alpha*z, |alpha| <= 1
``L``              vertical shear of z/(1-z) with dilatation -z  (= f_alpha at -1)
``F``              horizontal shear of z/(1-z) with dilatation z (= f_alpha at 1)
``g_alpha:re,im``  h = z, g = alpha z^2 / 2
``example21``      h = z - z^2/2, g = z^2/2 - z^3/3 (sense-preserving, not injective)
``example22``      h = z/(1-z), g = z/(1-z) + log(1-z) (close-to-convex, image
                   not starlike)
================  ==============================================================
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .defaults import DEFAULT_ORDER
from .harmonic import ExactEvaluators, HarmonicMap
from .series import TruncatedSeries, make_generator

CATALOG_NAMES = ("f_alpha", "L", "F", "g_alpha", "example21", "example22")


@dataclass(frozen=True)
class CatalogEntry:
    """A named map plus its parameter (only f_alpha / g_alpha take one)."""

    name: str
    alpha: complex | None = None

    def __post_init__(self):
        if self.name not in CATALOG_NAMES + ("m_alpha_member",):
            raise ValueError(f"unknown catalog name {self.name!r}")
        if self.name in ("f_alpha", "g_alpha", "m_alpha_member"):
            if self.alpha is None:
                raise ValueError(f"{self.name} requires a parameter alpha")
            if abs(self.alpha) > 1 + 1e-12:
                raise ValueError(f"{self.name} requires |alpha| <= 1, got {abs(self.alpha)}")


# -- coefficient tables ---------------------------------------------------------


def _f_alpha_series(alpha: complex, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    n = np.arange(order + 1, dtype=float)
    a = (n + 1) / 2
    a[0] = 0.0
    b = alpha * (n - 1) / 2
    b[0] = 0.0
    b[1] = 0.0
    return TruncatedSeries(a.astype(complex)), TruncatedSeries(b.astype(complex))


def f_alpha(alpha: complex, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Extremal family member: a_n = (n+1)/2, b_n = alpha (n-1)/2.

    Dilatation alpha*z; h = (l + k)/2 where l = z/(1-z), k = z/(1-z)^2.
    """
    if abs(alpha) > 1 + 1e-12:
        raise ValueError("need |alpha| <= 1")
    h, g = _f_alpha_series(alpha, order)
    exact = ExactEvaluators(
        h=lambda z: 0.5 * (z / (1 - z) + z / (1 - z) ** 2),
        g=lambda z, a=alpha: 0.5 * a * (z / (1 - z) ** 2 - z / (1 - z)),
        dh=lambda z: 1 / (1 - z) ** 3,
        dg=lambda z, a=alpha: a * z / (1 - z) ** 3,
        d2h=lambda z: 3 / (1 - z) ** 4,
        d2g=lambda z, a=alpha: a * (1 + 2 * z) / (1 - z) ** 4,
    )
    return HarmonicMap(h, g, exact, label=f"f_alpha({alpha})")


def map_L(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Harmonic half-plane map Re(z/(1-z)) + i Im(z/(1-z)^2); dilatation -z."""
    f = f_alpha(-1, order)
    return HarmonicMap(f.h, f.g, f.exact, label="L")


def map_F(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Re(z/(1-z)^2) + i Im(z/(1-z)); dilatation z.

    The flagship example for the radius computations: its circle images stop
    being convex above 2 - sqrt(3) and stop being starlike above ~0.658331.
    """
    f = f_alpha(1, order)
    return HarmonicMap(f.h, f.g, f.exact, label="F")


def g_alpha(alpha: complex, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Minimal-area map: h = z, g = alpha z^2 / 2."""
    if abs(alpha) > 1 + 1e-12:
        raise ValueError("need |alpha| <= 1")
    h = make_generator("identity", order)
    c = np.zeros(order + 1, dtype=complex)
    c[2] = alpha / 2
    g = TruncatedSeries(c)
    exact = ExactEvaluators(
        h=lambda z: z + 0 * z,
        g=lambda z, a=alpha: 0.5 * a * z * z,
        dh=lambda z: 1 + 0 * z,
        dg=lambda z, a=alpha: a * z,
        d2h=lambda z: 0 * z,
        d2g=lambda z, a=alpha: a + 0 * z,
    )
    return HarmonicMap(h, g, exact, label=f"g_alpha({alpha})")


def example21(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Cubic map with dilatation z: sense-preserving but not injective.

    Its analytic part is starlike yet non-convex, and the map identifies the
    conjugate pair (3 +- sqrt(3) i)/4, both of which land on 3/4.
    """
    h = np.zeros(order + 1, dtype=complex)
    h[1], h[2] = 1.0, -0.5
    g = np.zeros(order + 1, dtype=complex)
    g[2], g[3] = 0.5, -1 / 3
    exact = ExactEvaluators(
        h=lambda z: z - z * z / 2,
        g=lambda z: z * z / 2 - z ** 3 / 3,
        dh=lambda z: 1 - z,
        dg=lambda z: z * (1 - z),
        d2h=lambda z: -1 + 0 * z,
        d2g=lambda z: 1 - 2 * z,
    )
    return HarmonicMap(TruncatedSeries(h), TruncatedSeries(g), exact, label="example21")


def example22(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Half-plane analytic part sheared with dilatation z: b_n = 1 - 1/n.

    Close-to-convex, but the image of the disk is not starlike; the large
    non-starlike lobe shows up in circle scans already at r = 0.9.
    """
    h = make_generator("half_plane_l", order)
    g = make_generator("half_plane_l", order) + make_generator("log_one_minus_z", order)
    exact = ExactEvaluators(
        h=lambda z: z / (1 - z),
        g=lambda z: z / (1 - z) + np.log(1 - z),  # principal branch, analytic on the disk
        dh=lambda z: 1 / (1 - z) ** 2,
        dg=lambda z: z / (1 - z) ** 2,
        d2h=lambda z: 2 / (1 - z) ** 3,
        d2g=lambda z: (1 + z) / (1 - z) ** 3,
    )
    return HarmonicMap(h, g, exact, label="example22")


def l_hadamard_l(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Coefficient square of the half-plane map: a_n = ((n+1)/2)^2, b_n = ((n-1)/2)^2.

    This is the Hadamard product L*L (equivalently F*F) with closed-form
    evaluators attached, so it can be scanned near the boundary.
    """
    n = np.arange(order + 1, dtype=float)
    a = ((n + 1) / 2) ** 2
    a[0] = 0.0
    b = ((n - 1) / 2) ** 2
    b[0] = 0.0
    b[1] = 0.0
    exact = ExactEvaluators(
        h=lambda z: (z * (1 + z) / (1 - z) ** 3 + 2 * z / (1 - z) ** 2 + z / (1 - z)) / 4,
        g=lambda z: z * z * (1 + z) / (4 * (1 - z) ** 3),
        dh=lambda z: ((1 + 4 * z + z * z) / (1 - z) ** 4 + 2 * (1 + z) / (1 - z) ** 3 + 1 / (1 - z) ** 2) / 4,
        dg=lambda z: z * (1 + 2 * z) / (2 * (1 - z) ** 4),
        d2h=lambda z: ((8 + 14 * z + 2 * z * z) / (1 - z) ** 5 + (8 + 4 * z) / (1 - z) ** 4 + 2 / (1 - z) ** 3) / 4,
        d2g=lambda z: (1 + 7 * z + 4 * z * z) / (2 * (1 - z) ** 5),
    )
    return HarmonicMap(
        TruncatedSeries(a.astype(complex)), TruncatedSeries(b.astype(complex)), exact, label="L*L"
    )


def make_named(entry: CatalogEntry, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Dispatch on a :class:`CatalogEntry`."""
    if order < 8:
        raise ValueError("catalog maps need order >= 8")
    if entry.name == "f_alpha":
        return f_alpha(entry.alpha, order)
    if entry.name == "L":
        return map_L(order)
    if entry.name == "F":
        return map_F(order)
    if entry.name == "g_alpha":
        return g_alpha(entry.alpha, order)
    if entry.name == "example21":
        return example21(order)
    if entry.name == "example22":
        return example22(order)
    raise ValueError(f"{entry.name!r} has no direct constructor")


def parse_function(text: str, order: int = DEFAULT_ORDER):
    """Parse the CLI function grammar: ``name[:re,im]`` or ``conv(left,right)``.

    Returns a HarmonicMap; convolution expressions are resolved recursively
    through the Hadamard product.
    """
    text = text.strip()
    if text.startswith("conv(") and text.endswith(")"):
        inner = text[5:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                from .convolution import hadamard

                left = parse_function(inner[:i], order)
                right = parse_function(inner[i + 1 :], order)
                return hadamard(left, right).product
        raise ValueError(f"malformed convolution expression {text!r}")
    if ":" in text:
        name, _, param = text.partition(":")
        parts = param.split(",")
        if len(parts) != 2:
            raise ValueError(f"parameter must be re,im in {text!r}")
        alpha = complex(float(parts[0]), float(parts[1]))
        return make_named(CatalogEntry(name, alpha), order)
    return make_named(CatalogEntry(text), order)


# -- shearing construction ------------------------------------------------------


def _geometric_inverse(w: TruncatedSeries, sign: float, order: int) -> np.ndarray:
    """Coefficients of 1/(1 + sign*w) as a truncated geometric series.

    Requires w(0) = 0 so the expansion is a polynomial identity up to the
    truncation degree.
    """
    if abs(w.coefficient(0)) != 0.0:
        raise ValueError("shear dilatation must vanish at the origin")
    wc = np.zeros(order + 1, dtype=complex)
    m = min(order, w.order)
    wc[: m + 1] = w.coeffs[: m + 1]
    inv = np.zeros(order + 1, dtype=complex)
    inv[0] = 1.0
    term = inv.copy()
    for _ in range(order):
        term = np.convolve(term, -sign * wc)[: order + 1]
        if not term.any():
            break
        inv += term
    return inv


def _shear(phi: TruncatedSeries, w: TruncatedSeries, sign: float, label: str) -> HarmonicMap:
    order = phi.order
    # guard: the construction divides by 1 +- w, which must not vanish
    rr = np.linspace(0.05, 0.95, 16)
    tt = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    zg = rr[:, None] * np.exp(1j * tt[None, :])
    wv = w.evaluate(zg)
    if np.any(np.abs(wv) >= 1.0):
        raise ValueError("dilatation must satisfy |w(z)| < 1 on the sample grid")
    if np.any(np.abs(1.0 + sign * wv) < 1e-9):
        raise ValueError("1 %s w vanishes on the sample grid" % ("+" if sign > 0 else "-"))
    dphi = phi.differentiate()
    inv = _geometric_inverse(w, sign, order - 1)
    hp = np.convolve(dphi.coeffs, inv)[:order]
    h = np.zeros(order + 1, dtype=complex)
    h[1:] = hp / np.arange(1, order + 1)
    hs = TruncatedSeries(h)
    gs = TruncatedSeries(sign * (phi.coeffs[: order + 1] - h))
    return HarmonicMap(hs, gs, None, label=label)


def shear_horizontal(phi: TruncatedSeries, w: TruncatedSeries, label: str = "shear_h") -> HarmonicMap:
    """Harmonic map with h - g = phi and g' = w h', i.e. h' = phi'/(1 - w).

    Shearing the half-plane map with w(z) = z reproduces the catalog map F.
    """
    return _shear(phi, w, -1.0, label)


def shear_vertical(phi: TruncatedSeries, w: TruncatedSeries, label: str = "shear_v") -> HarmonicMap:
    """Harmonic map with h + g = phi and g' = w h', i.e. h' = phi'/(1 + w).

    Shearing the half-plane map with w(z) = -z reproduces the catalog map L.
    """
    return _shear(phi, w, 1.0, label)


def make_M_alpha_member(
    h: TruncatedSeries,
    alpha: complex,
    exact: ExactEvaluators | None = None,
    label: str = "",
) -> HarmonicMap:
    """Build g termwise from h through (n+1) b_{n+1} = n alpha a_n, b_1 = 0.

    Membership additionally requires Re(1 + z h''/h') > -1/2, which this
    constructor does not verify; use the classifier check for that.
    """
    if abs(alpha) > 1 + 1e-12:
        raise ValueError("need |alpha| <= 1")
    n = np.arange(h.order + 1, dtype=float)
    b = np.zeros(h.order + 1, dtype=complex)
    b[2:] = alpha * (n[1:-1] / n[2:]) * h.coeffs[1:-1]
    return HarmonicMap(h, TruncatedSeries(b), exact, label=label or f"M({alpha}) member")

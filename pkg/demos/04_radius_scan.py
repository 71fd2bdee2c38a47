"""
Radii of convexity and starlikeness
===================================

The map F = Re(z/(1-z)^2) + i Im(z/(1-z)) sends small circles to convex
curves and larger ones to curves that first lose convexity (at 2 - sqrt(3))
and then starlikeness (at ~0.658331).  Both transitions are located by
bisection over circle tests, and both constants drop out of explicit sign
polynomials.
"""

import math
from pathlib import Path

from hmap import (
    PlotSpec,
    convex_test_at_radius,
    map_F,
    plot_command,
    polynomial_p,
    radius_search,
    solve_special_radii,
    starlike_test_at_radius,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

F = map_F()

# scan: where do the circle tests flip?
print("r      convex  starlike   (min angular derivatives)")
for r in (0.15, 0.25, 0.267949, 0.30, 0.5, 0.65, 0.658330, 0.66, 0.8):
    c = convex_test_at_radius(F, r)
    s = starlike_test_at_radius(F, r)
    print(f"{r:.6f}  {str(c.passed):5}   {str(s.passed):5}"
          f"   ({c.min_derivative:+.2e}, {s.min_derivative:+.2e})")

# bisect both transitions to 1e-6
conv = radius_search(F, "convexity", tol=1e-6)
star = radius_search(F, "starlikeness", tol=1e-6)
print(f"\nconvexity bracket  [{conv.r_lo:.9f}, {conv.r_hi:.9f}]")
print(f"starlikeness bracket [{star.r_lo:.9f}, {star.r_hi:.9f}]")

# the same constants from the sign polynomials
sp = solve_special_radii()
print(f"root of 1 - 4r + r^2        = {sp.r_convex:.12f}  (2 - sqrt(3) = {2 - math.sqrt(3):.12f})")
print(f"root of the starlike margin = {sp.r_star:.12f}")
print(f"class-level starlike bound  = {sp.r_close_to_convex_star:.12f}  (4 sqrt(2) - 5)")

# p(r, u) controls convexity: nonnegative on [-1, 1] exactly up to the radius
for r in (sp.r_convex - 1e-3, sp.r_convex + 1e-3):
    worst = min(polynomial_p(r, u / 500 - 1) for u in range(1001))
    print(f"min_u p({r:.6f}, u) = {worst:+.2e}")

# figure: the circle at the convexity radius against one beyond it
plot_command(F, PlotSpec(radii=(sp.r_convex, 0.5), n_rays=16, samples_per_curve=512),
             str(OUT / "convexity_transition.svg"))
plot_command(F, PlotSpec(radii=(sp.r_star, 0.85), n_rays=16, samples_per_curve=512),
             str(OUT / "starlikeness_transition.svg"))
print("figures written to", OUT)

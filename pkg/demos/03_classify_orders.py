"""
Coefficient classifiers and membership checks
=============================================

Small weighted coefficient sums certify strong geometry: if
sum n (|a_n| + |b_n|) <= lam <= 1 the map is fully starlike of order
2(1-lam)/(2+lam), and the n^2-weighted analogue additionally certifies full
convexity.  Membership in the dilatation-alpha*z family pairs an exact
coefficient recurrence with a sampled curvature condition.
"""

import numpy as np

from hmap import (
    HarmonicMap,
    TruncatedSeries,
    coefficient_sum_orders,
    m_alpha_check,
    make_M_alpha_member,
    make_generator,
    map_F,
    analytic_part_classify,
    family_bounds_check,
)


def padded(coeffs, order=32):
    c = np.zeros(order + 1, dtype=complex)
    c[: len(coeffs)] = coeffs
    return TruncatedSeries(c)


# h = z + z^2/4 with no co-analytic part: lambda = 1/2, order 2/5
f = HarmonicMap(padded([0, 1, 0.25]), padded([0]))
linear, quadratic = coefficient_sum_orders(f)
print(f"linear sum {linear.condition_value}: starlike order {linear.order_starlike}")
print(f"quadratic sum {quadratic.condition_value}: starlike {quadratic.order_starlike}, "
      f"convex {quadratic.order_convex}")

# the same analytic part fed through the squared-sum classifier
rep = analytic_part_classify(padded([0, 1, 0.25]), alpha=0.2, power=2)
print("squared-sum classifier at alpha=0.2:",
      "close-to-convex" if rep.close_to_convex else "inconclusive",
      "| starlike order:", rep.order_starlike)

# family membership: F satisfies g' = 1*z*h' exactly, and its curvature term
# stays above -1/2 on a 64 x 256 grid up to r = 0.99
ma = m_alpha_check(map_F(), 1.0, r_max=0.99)
print(f"membership(F, alpha=1): relation residual {ma.relation_residual:.1e}, "
      f"curvature grid min {ma.curvature_grid_min:.4f} (> -0.5: {ma.curvature_passed})")

# coefficient and growth bounds for a member built termwise from h = z/(1-z)
member = make_M_alpha_member(make_generator("half_plane_l", 256), 0.5)
bounds = family_bounds_check(member, 0.5, samples=2000)
print(f"bounds check: coeff slack ({bounds.coeff_slack_a:.2e}, {bounds.coeff_slack_b:.2e}), "
      f"growth min slack {bounds.growth_min_slack:.2e}, passed = {bounds.passed}")

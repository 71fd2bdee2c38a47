"""Shared numeric conventions.

All tolerances used across the package are centralized here so that tests
and library code agree on what "equal" means at each precision tier.
"""

# Truncation degree used by the catalog constructors unless overridden.
DEFAULT_ORDER = 64

# Absolute tolerance for series identities (coefficient comparisons after
# arithmetic, evaluation against closed forms inside the convergence zone).
SERIES_ABS_TOL = 1e-9

# Exact coefficient relations (integer-valued in exact arithmetic).
COEFF_ABS_TOL = 1e-12

# Coefficient recurrences checked relation-by-relation.
RELATION_ABS_TOL = 1e-10

# |z| above which closed-form evaluators take over from truncated series
# (when available): keeps truncation error below SERIES_ABS_TOL while
# allowing radius scans close to the boundary.
EXACT_SWITCH_RADIUS = 0.7

# Agreement required between closed-form and series evaluation, checked on
# random points with |z| <= 0.5 when a map is built with both.
EXACT_AGREEMENT_TOL = 1e-8
EXACT_AGREEMENT_POINTS = 20

# Circle tests: number of sample angles, pass threshold for the minimum
# angular derivative, and the allowed defect in the total-turning integral.
CIRCLE_THETA_POINTS = 4096
CIRCLE_MIN_TOL = 1e-9
TURNING_TOL = 1e-3

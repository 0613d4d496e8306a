"""
How smooth is D4?
=================

Differences ``phi(x) - phi(y)`` are driven by two 2x2 matrices.  Their joint
spectral radius gives the Hoelder exponent.
"""

import numpy as np

from wavefft.jsr import holder_estimate, jsr_bounds, reduced_pair

###############################################################################
# Warm-up: each matrix alone has spectral radius 0, the pair has radius 2.

A = np.array([[0.0, 2.0], [0.0, 0.0]])
B = np.array([[0.0, 0.0], [2.0, 0.0]])
est = jsr_bounds(A, B, 6)
print("toy pair:", est.lower, est.upper, "best word", est.argmax_word)

###############################################################################
# The reduced pair for D4, then the bounds tightening with depth.

pair = reduced_pair("d4")
print(np.round(pair.A, 4))
print(np.round(pair.B, 4))
est = jsr_bounds(pair.A, pair.B, 12)
for m in (1, 4, 8, 12):
    print(f"depth {m:2d}: [{est.lower_by_depth[m - 1]:.5f}, {est.upper_by_depth[m - 1]:.5f}]")

###############################################################################
# Minus log base 2 turns radii into exponents.

for name in ("d4", "hat", "stretched-box"):
    h = holder_estimate(name, 12)
    print(f"{name:14s} alpha in [{h.alpha_lower:.4f}, {h.alpha_upper:.4f}] continuous={h.continuous}")

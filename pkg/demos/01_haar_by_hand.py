"""
Haar pyramid on four samples
============================

Four numbers go in, four coefficients come out.  We do it once by the
pyramid and once by the explicit matrix, then undo it.
"""

import numpy as np

from wavefft import analyze, haar_factors, haar_matrix, synthesize

###############################################################################
# Averages and half-differences, two levels deep.  The "paper" normalization
# keeps the arithmetic in integers.

x = np.array([9.0, 1.0, 2.0, 0.0])
p = analyze(x, "haar", levels=2, normalization="paper")
print("coarse :", p.coarse)
print("details:", p.details)
print("flat   :", p.to_array())

###############################################################################
# The same coefficients solve ``W4 b = x`` where the columns of ``W4`` are the
# box and the three Haar wavelets sampled on four cells.

W4 = haar_matrix(4)
print(W4)
print("W4 @ b =", W4 @ p.to_array())

###############################################################################
# ``W4`` splits into three sparse factors; each one is a cheap pass.

left, P, right = haar_factors(4)
print("factors reproduce W4:", np.array_equal(left @ P @ right, W4))

###############################################################################
# Orthonormal scaling changes the numbers but not the round trip.

q = analyze(x, "haar", levels=2)
print("orthonormal:", q.to_array(), " energy", np.sum(q.to_array() ** 2), "vs", np.sum(x**2))
print("back:", synthesize(q, "haar"))

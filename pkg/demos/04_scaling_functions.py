"""
Building phi point by point
===========================

Values at the integers come from an eigenvector.  Every halving of the grid
then costs one pass over the coefficients.
"""

import numpy as np

from wavefft import (
    dilation_residual,
    integer_values,
    partition_of_unity_error,
    phi_hat,
    refine,
    vector_at,
    wavelet_samples,
)
from wavefft.dilation import sampled_transform

print("d4 phi(1), phi(2):", integer_values("d4"))
print("closed form      :", (1 + np.sqrt(3)) / 2, (1 - np.sqrt(3)) / 2)

###############################################################################
# Depth 10 means spacing ``1/1024``.

phi = refine("d4", 10)
print("samples:", phi.values.size, " max:", phi.values.max().round(4), " min:", phi.values.min().round(4))
print("dilation residual:", dilation_residual(phi))
print("sum of translates minus 1:", partition_of_unity_error(phi))
print("integral:", phi.integral())

###############################################################################
# Any single dyadic point is a short matrix product.  ``0.101`` in binary is 5/8.

print("v(5/8) =", vector_at("d4", "101"), " from the grid:", [phi.at(5 / 8 + k) for k in range(3)])

###############################################################################
# The wavelet has two vanishing moments.

w = wavelet_samples("d4", 10)
print("int W =", w.integral(), " int xW =", w.moment(1))

###############################################################################
# The Fourier side: a truncated infinite product, checked against the samples.

xi = np.array([0.0, 1.0, 3.0, 6.0])
print(np.round(phi_hat("d4", xi), 5))
print(np.round(sampled_transform(phi, xi), 5))

###############################################################################
# A CSV for plotting elsewhere.

np.savetxt("d4_phi.csv", np.column_stack([phi.x, phi.values]), delimiter=",", header="x,phi", comments="")
print("wrote d4_phi.csv")

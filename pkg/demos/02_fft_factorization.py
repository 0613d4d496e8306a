"""
The FFT as a product of sparse matrices
=======================================

A dense ``n x n`` Fourier matrix costs ``n^2`` multiplications.  Splitting
even and odd samples gives three factors and brings the count down to
``(n/2) log2 n``.
"""

import numpy as np

from wavefft import dft_naive, fft_factors, fft_forward, fourier_matrix

###############################################################################
# The convention here is ``w = exp(+2 pi i / n)``, so ``F4`` starts like this:

print(np.round(fourier_matrix(4), 12))

###############################################################################
# Combine, two half-size transforms, then the shuffle.

combine, middle, shuffle = fft_factors(8)
print("F8 recovered:", np.allclose(combine @ middle @ shuffle, fourier_matrix(8)))
print("nonzeros per factor:", [int(np.count_nonzero(m)) for m in (combine, middle, shuffle)])

###############################################################################
# Twiddle multiplications for ``n = 1024``, stage by stage.

rng = np.random.default_rng(0)
a = rng.standard_normal(1024) + 1j * rng.standard_normal(1024)
spectrum, count = fft_forward(a)
print("total:", count.multiplications, "stages:", count.stage_breakdown)
print("naive would need:", 1024 * 1024)

###############################################################################
# And the answer agrees with the direct sum.

ref = dft_naive(a).values
print("relative error:", np.linalg.norm(spectrum.values - ref) / np.linalg.norm(ref))

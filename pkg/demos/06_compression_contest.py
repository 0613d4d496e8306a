"""
Edges against sinusoids
=======================

Keep 5% of the coefficients and compare the damage.
"""

import numpy as np

from wavefft import Basis, compress_in_basis, contest_report, decay_profile, step_signal
from wavefft.compress import report_rows

n = 1024
signals = {
    "step": step_signal(n),
    "sine": np.sin(2 * np.pi * np.arange(n) / n),
}
for label, x in signals.items():
    print(f"--- {label}")
    for row in report_rows(contest_report(x, ["haar", "d4", "fourier"], [0.05])):
        print("  ".join(f"{cell:>22s}" for cell in row))

###############################################################################
# Why: the decay rates.  A jump placed off the dyadic grid gives Fourier
# coefficients falling like ``1/j`` and wavelet details falling by a factor
# of about ``sqrt 2`` per level.

off_grid = step_signal(4096, 4096 // 3)
print("fourier slope:", round(decay_profile(off_grid, "fourier").exponent, 3))
print("haar slope   :", round(decay_profile(off_grid, "haar").exponent, 3))

###############################################################################
# Images work the same way.  A synthetic disc stands in for a photograph.

yy, xx = np.mgrid[:128, :128]
disc = 200.0 * ((xx - 60) ** 2 + (yy - 70) ** 2 < 40**2)
for basis in (Basis.fourier(), Basis.blocked_fourier(8), Basis.wavelet("d4")):
    result, _ = compress_in_basis(disc, basis, 0.05)
    print(f"{result.basis:16s} error {result.l2_rel_error:.4f}")

"""
Which coefficient lists make good wavelets?
===========================================

Four candidate filters, one report each.
"""

import numpy as np

from wavefft import check_conditions, lawton_test, make_filter, symbol_eval
from wavefft.filters import orthogonality_freq_residual

for name in ("haar", "hat", "d4", "stretched-box"):
    f = make_filter(name)
    r = check_conditions(f)
    print(f"{name:14s} c={np.round(f.c, 4)}")
    print(f"{'':14s} sums={r.sum_ok} order={r.accuracy_order} O={r.ortho_ok} lawton={r.lawton_ok}")

###############################################################################
# In frequency terms Condition O says ``|P(xi)|^2 + |P(xi + pi)|^2 = 1``.
# The hat filter misses it everywhere except at a few points.

xi = np.linspace(0, np.pi, 5)
hat = make_filter("hat")
print("hat mirror sum:", np.round(np.abs(symbol_eval(hat, xi)) ** 2 + np.abs(symbol_eval(hat, xi + np.pi)) ** 2, 4))
print("d4 worst deviation over 1024 samples:", orthogonality_freq_residual(make_filter("d4"), 1024))

###############################################################################
# The stretched box passes O yet fails Lawton: eigenvalue 1 shows up twice.

eig = lawton_test(make_filter("stretched-box")).eigenvalues
print("stretched-box eigenvalues near 1:", np.round(eig[np.abs(eig - 1) < 1e-8].real, 12))

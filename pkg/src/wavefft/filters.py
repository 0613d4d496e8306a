"""Dilation-coefficient filters and their admissibility conditions.

A filter is the coefficient vector ``c_0 .. c_N`` of the two-scale relation
``phi(x) = sum_k c_k phi(2x - k)``.  Coefficients are stored unnormalized,
so an averaging filter sums to 2 (Haar is ``(1, 1)``).

The symbol uses the ``e^{+ik xi}`` sign convention throughout the package,
matching the ``omega = e^{+2 pi i / n}`` convention of :mod:`wavefft.fft`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConditionOFailedError, InvalidFilterError

SYMBOL_SIGN = +1

_SQRT3 = math.sqrt(3.0)

BUILTIN_FILTERS: dict[str, tuple[float, ...]] = {
    "haar": (1.0, 1.0),
    "hat": (0.5, 1.0, 0.5),
    "d4": (
        (1 + _SQRT3) / 4,
        (3 + _SQRT3) / 4,
        (3 - _SQRT3) / 4,
        (1 - _SQRT3) / 4,
    ),
    "stretched-box": (1.0, 0.0, 0.0, 1.0),
}


@dataclass(frozen=True)
class FilterCoefficients:
    """Immutable dilation coefficients ``c_0 .. c_N``."""

    coeffs: tuple[float, ...]
    name: str | None = None
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size < 2:
            raise InvalidFilterError("a filter needs at least two coefficients")
        if not np.all(np.isfinite(c)):
            raise InvalidFilterError("filter coefficients must be finite")
        if c[0] == 0 or c[-1] == 0:
            raise InvalidFilterError("first and last coefficients must be nonzero")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", tuple(float(v) for v in c))
        object.__setattr__(self, "_array", c)

    @property
    def c(self) -> np.ndarray:
        """Read-only coefficient array."""
        return self._array

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @property
    def support_length(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def reversed(self) -> "FilterCoefficients":
        name = None if self.name is None else self.name + "-reversed"
        return FilterCoefficients(self.coeffs[::-1], name)


def make_filter(coeffs: Sequence[float] | str, name: str | None = None) -> FilterCoefficients:
    """Build a filter from coefficients, or look up a built-in by name.

    Built-ins: ``haar``, ``hat``, ``d4``, ``stretched-box``.
    """
    if isinstance(coeffs, str):
        key = coeffs.strip().lower()
        if key not in BUILTIN_FILTERS:
            raise InvalidFilterError(
                f"unknown filter {coeffs!r}; built-ins are {', '.join(BUILTIN_FILTERS)}"
            )
        return FilterCoefficients(BUILTIN_FILTERS[key], name or key)
    return FilterCoefficients(tuple(coeffs), name)


def as_filter(f) -> FilterCoefficients:
    if isinstance(f, FilterCoefficients):
        return f
    return make_filter(f)


def symbol_eval(f: FilterCoefficients, xi):
    """Evaluate ``P(xi) = 1/2 sum_k c_k exp(i k xi)``.  Vectorized over ``xi``."""
    f = as_filter(f)
    xi = np.asarray(xi, dtype=float)
    k = np.arange(len(f))
    phase = np.exp(SYMBOL_SIGN * 1j * np.multiply.outer(xi, k))
    out = 0.5 * phase @ f.c
    return complex(out) if out.ndim == 0 else out


def symbol_derivative(f: FilterCoefficients, xi, order: int = 1):
    """``d^order P / d xi^order`` evaluated at ``xi``."""
    f = as_filter(f)
    xi = np.asarray(xi, dtype=float)
    k = np.arange(len(f))
    weights = f.c * (SYMBOL_SIGN * 1j * k) ** order
    out = 0.5 * np.exp(SYMBOL_SIGN * 1j * np.multiply.outer(xi, k)) @ weights
    return complex(out) if out.ndim == 0 else out


def check_sums(f: FilterCoefficients, tol: float = 1e-10) -> bool:
    """True iff the even-indexed and odd-indexed coefficients each sum to 1."""
    c = as_filter(f).c
    return bool(abs(c[0::2].sum() - 1) <= tol and abs(c[1::2].sum() - 1) <= tol)


def moment_sums(f: FilterCoefficients, max_m: int) -> np.ndarray:
    """Alternating moments ``sum_k (-1)^k k^m c_k`` for ``m = 0 .. max_m``."""
    c = as_filter(f).c
    k = np.arange(c.size, dtype=float)
    sign = (-1.0) ** np.arange(c.size)
    return np.array([np.sum(sign * k**m * c) for m in range(max_m + 1)])


def accuracy_order(f: FilterCoefficients, max_p: int | None = None, tol: float = 1e-10) -> int:
    """Approximation order ``p``: the alternating moments vanish for all ``m < p``.

    Each moment is compared against ``tol * sum_k |c_k| k^m`` since the sums
    grow like ``N^m``.
    """
    f = as_filter(f)
    if max_p is None:
        max_p = len(f)
    if max_p < 1:
        raise ValueError("max_p must be at least 1")
    c = f.c
    k = np.arange(c.size, dtype=float)
    sign = (-1.0) ** np.arange(c.size)
    p = 0
    for m in range(max_p):
        km = k**m
        scale = np.sum(np.abs(c) * km)
        if abs(np.sum(sign * km * c)) > tol * scale:
            break
        p = m + 1
    return p


def autocorrelation(f: FilterCoefficients) -> np.ndarray:
    """``r[m] = sum_k c_k c_{k-m}`` for ``m = -N .. N`` (index ``m + N``)."""
    c = as_filter(f).c
    return np.correlate(c, c, mode="full")


def check_orthogonality(f: FilterCoefficients, tol: float = 1e-10) -> tuple[bool, float]:
    """Condition O in time form: ``sum_k c_k c_{k-2m} = 2 delta_{0m}``.

    Returns ``(passed, residual)`` where the residual is the worst deviation
    over all even shifts.
    """
    f = as_filter(f)
    r = autocorrelation(f)
    N = f.N
    even = r[N % 2 :: 2]  # shifts with the same parity as 0
    lags = np.arange(-N, N + 1)[N % 2 :: 2]
    target = np.where(lags == 0, 2.0, 0.0)
    residual = float(np.max(np.abs(even - target)))
    return residual < tol, residual


def orthogonality_freq_residual(f: FilterCoefficients, samples: int = 1024) -> float:
    """Worst ``| |P(xi)|^2 + |P(xi+pi)|^2 - 1 |`` over a uniform grid on ``[0, 2pi)``."""
    xi = 2 * np.pi * np.arange(samples) / samples
    total = np.abs(symbol_eval(f, xi)) ** 2 + np.abs(symbol_eval(f, xi + np.pi)) ** 2
    return float(np.max(np.abs(total - 1)))


def transition_matrix(f: FilterCoefficients) -> np.ndarray:
    """Lawton's matrix ``A_ij = 1/2 sum_k c_k c_{j-2i+k}`` for ``|i|, |j| < N``.

    The factor 1/2 makes the autocorrelation of ``phi`` an eigenvector with
    eigenvalue exactly 1 under the sum-to-2 normalization.
    """
    f = as_filter(f)
    N = f.N
    r = autocorrelation(f)  # r[N + m] = sum_k c_k c_{k-m}
    idx = np.arange(-(N - 1), N)
    # sum_k c_k c_{k + (j - 2i)} is the autocorrelation at lag 2i - j
    lag = 2 * idx[:, None] - idx[None, :]
    inside = np.abs(lag) <= N
    A = np.zeros(lag.shape)
    A[inside] = r[N + lag[inside]]
    return 0.5 * A


class LawtonResult(NamedTuple):
    ok: bool
    gap: float
    eigenvalues: np.ndarray


def lawton_test(f: FilterCoefficients, tol: float = 1e-8) -> LawtonResult:
    """Check that eigenvalue 1 of :func:`transition_matrix` is simple.

    ``gap`` is the distance from 1 to the nearest *other* eigenvalue; it is
    infinite for the 1x1 Haar case.  Requires Condition O.
    """
    f = as_filter(f)
    ok_o, residual = check_orthogonality(f)
    if not ok_o:
        raise ConditionOFailedError(
            f"Condition O fails (residual {residual:.3g}); the Lawton test does not apply"
        )
    eig = np.linalg.eigvals(transition_matrix(f))
    dist = np.abs(eig - 1.0)
    order = np.argsort(dist, kind="stable")
    gap = float(dist[order[1]]) if eig.size > 1 else math.inf
    near_one = int(np.sum(dist < tol))
    return LawtonResult(near_one == 1 and gap > tol, gap, eig)


def wavelet_coefficients(f: FilterCoefficients) -> np.ndarray:
    """Wavelet coefficients ``d_k = (-1)^k c_{N-k}``, ``k = 0 .. N``.

    The coefficients are the scaling filter reversed with alternating signs.
    For odd ``N`` they sit at positions ``0 .. N``.  For even ``N`` the
    sequence must be read at positions ``wavelet_shift(f) + k`` to stay
    orthogonal to the even translates of ``c``.
    """
    c = as_filter(f).c
    return c[::-1] * (-1.0) ** np.arange(c.size)


def wavelet_shift(f: FilterCoefficients) -> int:
    """Position of ``d_0`` on the fine grid: 0 for odd ``N``, ``1 - N`` for even ``N``."""
    N = as_filter(f).N
    return 0 if N % 2 == 1 else 1 - N


def wavelet_orthogonality_residual(f: FilterCoefficients) -> float:
    """``max_m | sum_k d_k c_{k-2m} |`` with the wavelet placed at its shift."""
    f = as_filter(f)
    c = f.c
    d = wavelet_coefficients(f)
    shift = wavelet_shift(f)
    # full cross-correlation: entry t is sum_k d_k c_{k + shift - lag}
    xc = np.correlate(d, c, mode="full")  # lag runs from -(N) to N
    lags = np.arange(-f.N, f.N + 1) + shift
    even = xc[lags % 2 == 0]
    return float(np.max(np.abs(even))) if even.size else 0.0


@dataclass(frozen=True)
class ConditionReport:
    sum_ok: bool
    accuracy_order: int
    ortho_ok: bool
    ortho_residual: float
    lawton_ok: bool
    lawton_second_eigenvalue_gap: float

    def as_dict(self) -> dict:
        return {
            "sum_ok": self.sum_ok,
            "accuracy_order": self.accuracy_order,
            "ortho_ok": self.ortho_ok,
            "ortho_residual": self.ortho_residual,
            "lawton_ok": self.lawton_ok,
            "lawton_second_eigenvalue_gap": self.lawton_second_eigenvalue_gap,
        }


def check_conditions(f: FilterCoefficients, tol: float = 1e-10) -> ConditionReport:
    """Run every admissibility test.  Lawton is reported false when O fails."""
    f = as_filter(f)
    ortho_ok, residual = check_orthogonality(f, tol)
    if ortho_ok:
        lawton = lawton_test(f)
        lawton_ok, gap = lawton.ok, lawton.gap
    else:
        lawton_ok, gap = False, float("nan")
    return ConditionReport(
        sum_ok=check_sums(f, tol),
        accuracy_order=accuracy_order(f, tol=tol),
        ortho_ok=ortho_ok,
        ortho_residual=residual,
        lawton_ok=lawton_ok,
        lawton_second_eigenvalue_gap=gap,
    )

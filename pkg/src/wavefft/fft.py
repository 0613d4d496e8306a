"""Radix-2 FFT written as the even-odd matrix factorization.

Convention: ``omega = exp(+2 pi i / n)`` and ``F[j, k] = omega^(j k)``, so
``fft_forward`` evaluates the trigonometric sum ``y_j = sum_k a_k omega^(jk)``.
Many references call this sign the *inverse* DFT; here it is the forward
map because it is the matrix ``F_n`` whose factorization we follow.

One factorization step is::

    F_n = [[I, D], [I, -D]] @ blockdiag(F_{n/2}, F_{n/2}) @ shuffle

with ``D = diag(1, omega, ..., omega^(n/2-1))``.  The multiplication count
takes all ``n/2`` diagonal products at each of the ``log2 n`` levels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidLengthError

CONVENTION = "omega=exp(+2j*pi/n), entry(j,k)=omega**(j*k)"


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def log2_exact(n: int) -> int:
    if not is_power_of_two(n):
        raise InvalidLengthError(f"length {n} is not a power of two")
    return n.bit_length() - 1


@dataclass(frozen=True)
class OpCount:
    multiplications: int
    stage_breakdown: tuple[int, ...]

    def __post_init__(self):
        if self.multiplications != sum(self.stage_breakdown):
            raise ValueError("multiplications must equal the sum of the stages")


@dataclass(frozen=True, eq=False)
class ComplexSpectrum:
    """DFT output together with the sign convention that produced it."""

    values: np.ndarray
    convention: str = CONVENTION

    @property
    def n(self) -> int:
        return self.values.shape[-1]

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __len__(self):
        return self.values.shape[-1]

    def __getitem__(self, item):
        return self.values[item]


def _roots(n: int, sign: int = +1) -> np.ndarray:
    return np.exp(sign * 2j * np.pi * np.arange(n) / n)


def fourier_matrix(n: int) -> np.ndarray:
    """Dense ``F_n`` with entries ``omega^(jk)``; ``jk`` is reduced mod ``n`` first."""
    j = np.arange(n)
    return _roots(n)[np.outer(j, j) % n]


def dft_naive(a, block_rows: int = 512) -> ComplexSpectrum:
    """Direct ``n^2`` evaluation of ``y_j = sum_k a_k omega^(jk)``.

    Works along the last axis, so a stack of vectors can be transformed in
    one call.  Rows of ``F_n`` are formed in blocks to bound memory.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[-1]
    if n < 1:
        raise InvalidLengthError("empty input")
    roots = _roots(n)
    k = np.arange(n)
    out = np.empty(a.shape, dtype=complex)
    for start in range(0, n, block_rows):
        j = np.arange(start, min(start + block_rows, n))
        F_rows = roots[np.outer(j, k) % n]
        out[..., j] = a @ F_rows.T
    return ComplexSpectrum(out)


def bit_reverse_permutation(n: int) -> np.ndarray:
    """Index order produced by repeated even-odd shuffles."""
    levels = log2_exact(n)
    perm = np.arange(n)
    rev = np.zeros(n, dtype=int)
    for _ in range(levels):
        rev = (rev << 1) | (perm & 1)
        perm >>= 1
    return rev


def _fft(a: np.ndarray, sign: int) -> tuple[np.ndarray, OpCount]:
    n = a.shape[-1]
    levels = log2_exact(n)
    y = a[..., bit_reverse_permutation(n)].astype(complex)
    stages = []
    m = 1
    for _ in range(levels):
        # combine pairs of length-m transforms into length-2m transforms
        twiddle = np.exp(sign * 2j * np.pi * np.arange(m) / (2 * m))
        blocks = y.reshape(y.shape[:-1] + (n // (2 * m), 2, m))
        even = blocks[..., 0, :]
        odd = blocks[..., 1, :] * twiddle  # D times the odd half-size output
        y = np.concatenate([even + odd, even - odd], axis=-1).reshape(a.shape)
        stages.append((n // (2 * m)) * m)
        m *= 2
    return y, OpCount(sum(stages), tuple(stages))


def fft_forward(a) -> tuple[ComplexSpectrum, OpCount]:
    """Fast evaluation of ``F_n a``.  Length must be a power of two.

    Returns the spectrum and the twiddle multiplication count, which is
    exactly ``(n/2) log2 n``.
    """
    a = np.asarray(a, dtype=complex)
    y, count = _fft(a, +1)
    return ComplexSpectrum(y), count


def fft_inverse(y) -> np.ndarray:
    """``a_k = (1/n) sum_j y_j omega^(-jk)``, the inverse of :func:`fft_forward`."""
    y = np.asarray(y, dtype=complex)
    a, _ = _fft(y, -1)
    return a / y.shape[-1]


def fft_recursive(a) -> tuple[np.ndarray, OpCount]:
    """Literal recursive form of the factorization; slow but easy to audit."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[-1]
    log2_exact(n)
    if n == 1:
        return a.copy(), OpCount(0, ())
    even, c_even = fft_recursive(a[0::2])
    odd, _ = fft_recursive(a[1::2])
    D = _roots(n)[: n // 2]
    Dodd = D * odd
    y = np.concatenate([even + Dodd, even - Dodd])
    # both half-size transforms contribute their stages
    below = tuple(2 * s for s in c_even.stage_breakdown)
    stages = below + (n // 2,)
    return y, OpCount(sum(stages), stages)


def even_odd_shuffle(n: int) -> np.ndarray:
    """Permutation matrix that moves ``a_0, a_2, ...`` ahead of ``a_1, a_3, ...``."""
    order = np.concatenate([np.arange(0, n, 2), np.arange(1, n, 2)])
    P = np.zeros((n, n))
    P[np.arange(n), order] = 1.0
    return P


def fft_factors(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three factors of one Cooley-Tukey step: combine, half-size pair, shuffle.

    Their product equals :func:`fourier_matrix` ``(n)``.
    """
    log2_exact(n)
    if n < 2:
        raise InvalidLengthError("factorization needs n >= 2")
    h = n // 2
    I = np.eye(h)
    D = np.diag(_roots(n)[:h])
    combine = np.block([[I, D], [I, -D]])
    Fh = fourier_matrix(h)
    Z = np.zeros((h, h))
    middle = np.block([[Fh, Z], [Z, Fh]])
    return combine, middle, even_odd_shuffle(n)

"""Solving the dilation equation ``phi(x) = sum_k c_k phi(2x - k)``.

Two routes are provided.  The matrix route finds ``phi`` at the integers
from an eigenvector, then fills in half-integers, quarter-integers, and so
on exactly: every new value is a finite combination of values already
known.  The Fourier route evaluates the truncated infinite product of the
symbol.  The two are independent and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFilterError, InvalidInputError, NoSolutionError
from .filters import (
    FilterCoefficients,
    as_filter,
    check_sums,
    symbol_eval,
    wavelet_coefficients,
    wavelet_shift,
)


@dataclass(frozen=True, eq=False)
class ScalingFunctionSamples:
    """Values of ``phi`` (or of the wavelet ``W``) on the grid ``x = k / 2^depth``."""

    depth: int
    x: np.ndarray
    values: np.ndarray
    filter: FilterCoefficients
    kind: str = "phi"
    degenerate: bool = False

    @property
    def step(self) -> float:
        return 2.0**-self.depth

    def integral(self) -> float:
        """Riemann sum ``2^-depth * sum(values)``."""
        return float(self.step * self.values.sum())

    def moment(self, m: int) -> float:
        return float(self.step * np.sum(self.x**m * self.values))

    def at(self, x: float) -> float:
        """Value at a grid point; zero off the stored range."""
        pos = (x - self.x[0]) * 2**self.depth
        k = int(round(pos))
        if abs(pos - k) > 1e-9:
            raise InvalidInputError(f"{x} is not on the depth-{self.depth} grid")
        if 0 <= k < self.values.size:
            return float(self.values[k])
        return 0.0


@dataclass(frozen=True, eq=False)
class MatrixPair:
    """Dyadic refinement matrices ``A[i, j] = c_{2i-j}``, ``B[i, j] = c_{2i-j+1}``.

    They act on ``v(x) = (phi(x), phi(x+1), ..., phi(x+N-1))``:
    ``v(x) = A v(2x)`` on ``[0, 1/2]`` and ``v(x) = B v(2x-1)`` on ``[1/2, 1]``.
    """

    A: np.ndarray
    B: np.ndarray

    @property
    def dim(self) -> int:
        return self.A.shape[0]


def _c(f: FilterCoefficients, k):
    c = f.c
    k = np.asarray(k)
    inside = (k >= 0) & (k <= f.N)
    return np.where(inside, c[np.clip(k, 0, f.N)], 0.0)


def dyadic_matrices(f) -> MatrixPair:
    f = as_filter(f)
    i = np.arange(f.N)[:, None]
    j = np.arange(f.N)[None, :]
    return MatrixPair(_c(f, 2 * i - j), _c(f, 2 * i - j + 1))


def integer_matrix(f) -> np.ndarray:
    """``M[i, j] = c_{2i-j}`` for ``i, j = 1 .. N-1``; ``phi`` at the integers is its fixed point."""
    f = as_filter(f)
    idx = np.arange(1, f.N)
    return _c(f, 2 * idx[:, None] - idx[None, :])


@dataclass(frozen=True, eq=False)
class IntegerValues:
    values: np.ndarray  # phi(1) .. phi(N-1)
    degenerate: bool = False


def solve_integer_values(f, tol: float = 1e-8, allow_degenerate: bool = False) -> IntegerValues:
    """Eigenvector for eigenvalue 1 of :func:`integer_matrix`, normalized to sum 1.

    Haar (``N = 1``) has no interior integers and returns an empty vector.
    When eigenvalue 1 is repeated, ``DegenerateFilterError`` is raised unless
    ``allow_degenerate`` is set, in which case the all-ones vector projected
    onto the eigenspace is returned and flagged.
    """
    f = as_filter(f)
    if f.N == 1:
        return IntegerValues(np.zeros(0))
    if not check_sums(f, 1e-10):
        raise InvalidInputError("integer values need sum(c_even) = sum(c_odd) = 1")
    M = integer_matrix(f)
    m = M.shape[0]
    eigvals, eigvecs = np.linalg.eig(M)
    near = np.abs(eigvals - 1.0) < tol
    count = int(near.sum())
    if count == 0:
        raise NoSolutionError("eigenvalue 1 is missing from the integer-value system")
    degenerate = count > 1
    if degenerate:
        if not allow_degenerate:
            raise DegenerateFilterError(f"eigenvalue 1 has multiplicity {count}")
        # orthonormal basis of the eigenspace from the null space of M - I
        _, s, vh = np.linalg.svd(M - np.eye(m))
        basis = vh[s < tol * max(1.0, s.max())].T if s.size else np.eye(m)
        if basis.shape[1] == 0:
            basis = np.real(eigvecs[:, near])
        v = basis @ (basis.T @ np.ones(m))
    else:
        v = np.real(eigvecs[:, np.argmax(near)])
    if abs(v.sum()) < 1e-12:
        raise NoSolutionError("the eigenvector sums to zero and cannot be normalized")
    v = v / v.sum()
    if not degenerate:
        # polish: (M - I) v = 0 together with sum(v) = 1, least squares
        system = np.vstack([M - np.eye(m), np.ones((1, m))])
        rhs = np.concatenate([np.zeros(m), [1.0]])
        v = np.linalg.lstsq(system, rhs, rcond=None)[0]
    return IntegerValues(v, degenerate)


def integer_values(f, tol: float = 1e-8, allow_degenerate: bool = False) -> np.ndarray:
    """``phi(1), ..., phi(N-1)`` normalized so the integer values sum to 1."""
    return solve_integer_values(f, tol, allow_degenerate).values


def refine(f, depth: int, allow_degenerate: bool = False) -> ScalingFunctionSamples:
    """``phi`` at every point ``k / 2^depth`` of ``[0, N]``.

    Level ``j + 1`` is filled from level ``j`` by the dilation equation:
    ``phi(i / 2^(j+1)) = sum_k c_k phi(i / 2^j - k)``.
    Haar uses the half-open box, ``phi(0) = 1`` and ``phi(1) = 0``.
    """
    f = as_filter(f)
    if depth < 0:
        raise InvalidInputError("depth must be nonnegative")
    solved = solve_integer_values(f, allow_degenerate=allow_degenerate)
    N = f.N
    if N == 1:
        vals = np.array([1.0, 0.0])
    else:
        vals = np.concatenate([[0.0], solved.values, [0.0]])
    c = f.c
    for j in range(depth):
        stride = 1 << j  # one unit of x on the level-j grid
        size = N * stride + 1
        new = np.zeros(2 * N * stride + 1)
        new[0::2] = vals
        odd = np.arange(1, new.size, 2)
        acc = np.zeros(odd.size)
        for k, ck in enumerate(c):
            src = odd - k * stride
            ok = (src >= 0) & (src < size)
            acc[ok] += ck * vals[src[ok]]
        new[odd] = acc
        vals = new
    x = np.arange(vals.size) / 2.0**depth
    return ScalingFunctionSamples(depth, x, vals, f, "phi", solved.degenerate)


def vector_at(f, bits: str, allow_degenerate: bool = False) -> np.ndarray:
    """``v(0.b1 b2 ... bn)`` as the matrix product ``T_b1 T_b2 ... T_bn v(0)``."""
    f = as_filter(f)
    if f.N < 2:
        raise InvalidInputError("the vector recursion needs N >= 2")
    if any(b not in "01" for b in bits):
        raise InvalidInputError("bits must be a string of 0s and 1s")
    pair = dyadic_matrices(f)
    v = np.concatenate([[0.0], integer_values(f, allow_degenerate=allow_degenerate)])
    for b in reversed(bits):
        v = (pair.A if b == "0" else pair.B) @ v
    return v


def dilation_residual(samples: ScalingFunctionSamples) -> float:
    """``max |phi(x) - sum_k c_k phi(2x - k)|`` over grid points where ``2x`` is on-grid."""
    f = samples.filter
    vals = samples.values
    stride = 1 << samples.depth
    n = vals.size
    # x = i / 2^J with i even keeps 2x - k on the depth-J grid: index 2i - k*stride
    i = np.arange(0, n)
    rhs = np.zeros(n)
    for k, ck in enumerate(f.c):
        src = 2 * i - k * stride
        ok = (src >= 0) & (src < n)
        rhs[ok] += ck * vals[src[ok]]
    if f.N == 1:
        # half-open box: the right endpoint is a convention, not a solution value
        i_ok = i < n - 1
        return float(np.max(np.abs(vals[i_ok] - rhs[i_ok])))
    return float(np.max(np.abs(vals - rhs)))


def partition_of_unity_error(samples: ScalingFunctionSamples) -> float:
    """``max |sum_k phi(x - k) - 1|`` over the grid points of ``[0, 1)``."""
    stride = 1 << samples.depth
    vals = samples.values
    total = np.zeros(stride)
    for k in range(samples.filter.N + 1):
        seg = vals[k * stride : (k + 1) * stride]
        total[: seg.size] += seg
    return float(np.max(np.abs(total - 1)))


def wavelet_samples(f, depth: int, allow_degenerate: bool = False) -> ScalingFunctionSamples:
    """``W(x) = sum_k d_k phi(2x - k - s)`` on the depth-``depth`` grid.

    ``d`` and ``s`` come from :func:`wavelet_coefficients` and
    :func:`wavelet_shift`.  ``W`` is supported on ``[s/2, (s + 2N)/2]``.
    """
    f = as_filter(f)
    phi = refine(f, depth, allow_degenerate)
    d = wavelet_coefficients(f)
    shift = wavelet_shift(f)
    N = f.N
    stride = 1 << depth
    # grid index i <-> x = shift/2 + i / 2^depth
    count = N * stride + 1
    i = np.arange(count)
    vals = np.zeros(count)
    n_phi = phi.values.size
    for k, dk in enumerate(d):
        # 2x - (k + shift) = 2i / 2^depth - k, as a phi-grid index 2i - k*stride
        src = 2 * i - k * stride
        ok = (src >= 0) & (src < n_phi)
        vals[ok] += dk * phi.values[src[ok]]
    if N == 1:
        vals[-1] = 0.0  # half-open convention, like phi
    x = shift / 2 + i / 2.0**depth
    return ScalingFunctionSamples(depth, x, vals, f, "wavelet", phi.degenerate)


def phi_hat(f, xi, terms: int = 40):
    """Truncated product ``prod_{j=1..terms} P(xi / 2^j)``; vectorized over ``xi``."""
    f = as_filter(f)
    if terms < 1:
        raise InvalidInputError("terms must be at least 1")
    xi = np.asarray(xi, dtype=float)
    out = np.ones(xi.shape, dtype=complex)
    for j in range(1, terms + 1):
        out = out * symbol_eval(f, xi / 2.0**j)
    return complex(out) if out.ndim == 0 else out


def sampled_transform(samples: ScalingFunctionSamples, xi):
    """Riemann-sum Fourier transform ``2^-J sum phi(x_i) exp(i xi x_i)``."""
    xi = np.asarray(xi, dtype=float)
    out = samples.step * (np.exp(1j * np.multiply.outer(xi, samples.x)) @ samples.values)
    return complex(out) if out.ndim == 0 else out

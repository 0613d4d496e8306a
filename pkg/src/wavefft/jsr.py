"""Joint spectral radius bounds and Hoelder regularity of scaling functions.

For products ``Pi_m`` of ``m`` factors drawn from ``{A, B}``::

    max rho(Pi_m)^(1/m)  <=  rho(A, B)  <=  max ||Pi_m||^(1/m)

for every ``m``.  ``jsr_bounds`` enumerates all ``2^m`` words for
``m = 1 .. depth`` and keeps the best bound of each kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .dilation import MatrixPair, dyadic_matrices
from .errors import InvalidFilterError, InvalidInputError, NotApplicableError
from .filters import as_filter, check_sums

MAX_DEPTH = 22


@dataclass(frozen=True)
class JsrEstimate:
    lower: float
    upper: float
    depth: int
    argmax_word: str  # "0" = A, "1" = B; word achieving `lower`
    lower_by_depth: tuple[float, ...] = field(default=(), repr=False)
    upper_by_depth: tuple[float, ...] = field(default=(), repr=False)

    @property
    def gap(self) -> float:
        return self.upper - self.lower


def _norms(prods: np.ndarray, norm: str) -> np.ndarray:
    if norm == "2":
        return np.linalg.norm(prods, ord=2, axis=(-2, -1))
    if norm == "inf":
        return np.abs(prods).sum(axis=-1).max(axis=-1)
    raise InvalidInputError(f"unknown norm {norm!r}; use '2' or 'inf'")


def _spectral_radii(prods: np.ndarray) -> np.ndarray:
    return np.abs(np.linalg.eigvals(prods)).max(axis=-1)


def jsr_bounds(A, B, depth: int, norm: str = "2") -> JsrEstimate:
    """Bracket ``rho(A, B)`` using every product of length up to ``depth``.

    ``upper`` is the smallest ``max ||Pi_m||^(1/m)`` seen and ``lower`` the
    largest ``max rho(Pi_m)^(1/m)``, so both tighten monotonically with depth.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise InvalidInputError("A and B must be square matrices of the same size")
    if A.shape[0] == 0:
        raise InvalidInputError("matrices are empty")
    if not 1 <= depth <= MAX_DEPTH:
        raise InvalidInputError(f"depth must lie in 1..{MAX_DEPTH}")
    _norms(A[None], norm)

    pair = np.stack([A, B])
    prods = np.eye(A.shape[0])[None]
    lower, upper = 0.0, math.inf
    best_word = ""
    lowers, uppers = [], []
    for m in range(1, depth + 1):
        # word bits read left to right; the new factor is appended on the right
        prods = (prods[:, None] @ pair[None]).reshape(-1, *A.shape)
        radii = _spectral_radii(prods)
        k = int(np.argmax(radii))
        cand = float(radii[k]) ** (1.0 / m)
        if cand > lower:
            lower = cand
            best_word = format(k, f"0{m}b")
        upper = min(upper, float(_norms(prods, norm).max()) ** (1.0 / m))
        lowers.append(lower)
        uppers.append(upper)
    return JsrEstimate(lower, upper, depth, best_word, tuple(lowers), tuple(uppers))


def word_product(A, B, word: str) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    out = np.eye(A.shape[0])
    for b in word:
        out = out @ (A if b == "0" else B)
    return out


def difference_basis(n: int) -> np.ndarray:
    """Columns ``e_i - e_{i+1}``: a basis of the vectors whose entries sum to zero."""
    V = np.zeros((n, n - 1))
    idx = np.arange(n - 1)
    V[idx, idx] = 1.0
    V[idx + 1, idx] = -1.0
    return V


def reduced_pair(f) -> MatrixPair:
    """Restrict the refinement matrices to the sum-zero subspace.

    Both matrices have ``(1, ..., 1)`` as a left eigenvector when the even
    and odd coefficients each sum to 1, so sum-zero vectors stay sum-zero.
    Differences ``v(x) - v(y)`` live there, which is why this pair governs
    the regularity of ``phi``.
    """
    f = as_filter(f)
    if not check_sums(f):
        raise InvalidFilterError("reduction needs sum(c_even) = sum(c_odd) = 1")
    if f.N < 2:
        raise NotApplicableError("N = 1 leaves no complementary subspace")
    pair = dyadic_matrices(f)
    V = difference_basis(f.N)
    # partial sums invert the difference basis exactly: left @ V = I
    left = np.tril(np.ones((f.N - 1, f.N)))
    return MatrixPair(left @ pair.A @ V, left @ pair.B @ V)


class HolderInterval(NamedTuple):
    alpha_lower: float
    alpha_upper: float

    @property
    def continuous(self) -> bool:
        """Certified when the upper JSR bound is below 1."""
        return self.alpha_lower > 0

    def contains(self, alpha: float) -> bool:
        return self.alpha_lower <= alpha <= self.alpha_upper


def neg_log2(r: float) -> float:
    return math.inf if r <= 0 else -math.log2(r)


def holder_estimate(f, depth: int = 12, norm: str = "2") -> HolderInterval:
    """Hoelder exponent interval ``[-log2 upper, -log2 lower]`` from the reduced pair."""
    pair = reduced_pair(f)
    est = jsr_bounds(pair.A, pair.B, depth, norm)
    return HolderInterval(neg_log2(est.upper), neg_log2(est.lower))

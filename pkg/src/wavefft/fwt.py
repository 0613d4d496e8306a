"""Fast wavelet transform by the pyramid algorithm.

One analysis step multiplies a length-``n`` vector by the stacked matrix
``[L; H]`` whose rows carry the scaling filter ``c`` and the wavelet
filter ``d`` shifted by two columns per row (periodic wraparound).  The
transform recurses on the low-pass half only, so the total work is a
geometric series bounded by twice the first step.

Two normalizations are offered:

``"orthonormal"``
    rows scaled by ``1/sqrt(2)``; every step is an orthogonal matrix.
``"paper"``
    rows scaled by ``1/2``; for Haar this returns the coefficients of the
    unnormalized box/step basis, e.g. ``(9, 1, 2, 0) -> (3, 2, 4, 1)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError, InvalidLengthError
from .fft import OpCount, is_power_of_two
from .filters import FilterCoefficients, as_filter, check_orthogonality, wavelet_coefficients

NORMALIZATIONS = ("orthonormal", "paper")


def _scale(normalization: str) -> float:
    if normalization == "orthonormal":
        return 1 / math.sqrt(2)
    if normalization == "paper":
        return 0.5
    raise InvalidInputError(f"unknown normalization {normalization!r}")


def _synthesis_scale(normalization: str) -> float:
    # reciprocal of the analysis gain per step: analysis @ synthesis = I
    return 1 / math.sqrt(2) if normalization == "orthonormal" else 1.0


def _check_length(n: int) -> int:
    if not is_power_of_two(n) or n < 2:
        raise InvalidLengthError(f"signal length {n} must be a power of two >= 2")
    return n.bit_length() - 1


def _warn_if_not_orthogonal(f: FilterCoefficients):
    ok, residual = check_orthogonality(f)
    if not ok:
        warnings.warn(
            f"filter {f.name or f.coeffs} fails Condition O (residual {residual:.3g}); "
            "the transform will not be invertible",
            stacklevel=3,
        )


def _tap_indices(n: int, taps: int) -> np.ndarray:
    return (2 * np.arange(n // 2)[:, None] + np.arange(taps)[None, :]) % n


def analysis_step(x: np.ndarray, f: FilterCoefficients, normalization: str = "orthonormal"):
    """One ``[L; H]`` step along the last axis.  Returns ``(low, high)``."""
    f = as_filter(f)
    s = _scale(normalization)
    n = x.shape[-1]
    idx = _tap_indices(n, len(f))
    windows = x[..., idx]  # (..., n/2, taps)
    low = s * (windows @ f.c)
    high = s * (windows @ wavelet_coefficients(f))
    return low, high


def synthesis_step(low: np.ndarray, high: np.ndarray, f: FilterCoefficients,
                   normalization: str = "orthonormal") -> np.ndarray:
    """Transpose of :func:`analysis_step` (scaled to be its inverse)."""
    f = as_filter(f)
    s = _synthesis_scale(normalization)
    n = 2 * low.shape[-1]
    idx = _tap_indices(n, len(f))
    c, d = f.c, wavelet_coefficients(f)
    out = np.zeros(low.shape[:-1] + (n,), dtype=np.result_type(low, high, float))
    for k in range(len(f)):
        # for fixed k the targets 2m + k are distinct, so fancy += is safe
        out[..., idx[:, k]] += s * (c[k] * low + d[k] * high)
    return out


def analysis_matrix(f: FilterCoefficients, n: int, normalization: str = "orthonormal") -> np.ndarray:
    """The periodized ``n x n`` matrix ``[L; H]`` of one analysis step."""
    _check_length(n)
    low, high = analysis_step(np.eye(n), f, normalization)
    # columns of the identity give the matrix column by column
    return np.vstack([low.T, high.T])


@dataclass
class PyramidCoefficients:
    """Leveled transform output: coarse block first, then details coarse to fine."""

    coarse: np.ndarray
    details: list[np.ndarray] = field(default_factory=list)
    normalization: str = "orthonormal"

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def block_lengths(self) -> list[int]:
        return [len(self.coarse)] + [len(d) for d in self.details]

    def __len__(self):
        return sum(self.block_lengths)

    def to_array(self) -> np.ndarray:
        return np.concatenate([self.coarse] + list(self.details))

    @classmethod
    def from_array(cls, flat, block_lengths, normalization: str = "orthonormal"):
        flat = np.asarray(flat, dtype=float)
        if sum(block_lengths) != flat.size:
            raise InvalidInputError(
                f"block lengths {list(block_lengths)} do not add up to {flat.size}"
            )
        parts = np.split(flat, np.cumsum(block_lengths)[:-1])
        return cls(parts[0], parts[1:], normalization)

    def validate(self):
        lengths = self.block_lengths
        if not self.details:
            raise InvalidInputError("pyramid has no detail blocks")
        if lengths[1] != lengths[0]:
            raise InvalidInputError("coarsest detail block must match the coarse block")
        for a, b in zip(lengths[1:], lengths[2:]):
            if b != 2 * a:
                raise InvalidInputError(f"block lengths {lengths} do not double level to level")
        _check_length(2 * lengths[-1])


def analyze(signal, f, levels: int | None = None, normalization: str = "orthonormal") -> PyramidCoefficients:
    """Pyramid analysis of a power-of-two length signal.

    ``levels`` defaults to the full depth ``log2 n``.
    """
    f = as_filter(f)
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError("analyze expects a 1-D signal")
    max_levels = _check_length(x.size)
    if levels is None:
        levels = max_levels
    if not 1 <= levels <= max_levels:
        raise InvalidInputError(f"levels must lie in 1..{max_levels}, got {levels}")
    _scale(normalization)
    _warn_if_not_orthogonal(f)
    details = []
    low = x
    for _ in range(levels):
        low, high = analysis_step(low, f, normalization)
        details.append(high)
    return PyramidCoefficients(low, details[::-1], normalization)


def synthesize(p: PyramidCoefficients, f) -> np.ndarray:
    """Invert :func:`analyze`."""
    f = as_filter(f)
    p.validate()
    low = np.asarray(p.coarse, dtype=float)
    for high in p.details:
        low = synthesis_step(low, np.asarray(high, dtype=float), f, p.normalization)
    return low


@dataclass
class Pyramid2D:
    """Separable 2-D pyramid.

    Band names use two letters: the first is the filter applied down each
    column (vertical), the second the filter along each row (horizontal).
    ``details[i]`` is the ``(LH, HL, HH)`` triple at level ``i``, coarse to fine.
    """

    ll: np.ndarray
    details: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default_factory=list)
    normalization: str = "orthonormal"

    @property
    def levels(self) -> int:
        return len(self.details)

    def to_array(self) -> np.ndarray:
        parts = [self.ll.ravel()]
        for bands in self.details:
            parts.extend(b.ravel() for b in bands)
        return np.concatenate(parts)

    def like(self, flat) -> "Pyramid2D":
        """A pyramid with this one's band shapes filled from ``flat``."""
        flat = np.asarray(flat, dtype=float)
        pos = self.ll.size
        ll = flat[:pos].reshape(self.ll.shape)
        details = []
        for bands in self.details:
            new = []
            for b in bands:
                new.append(flat[pos : pos + b.size].reshape(b.shape))
                pos += b.size
            details.append(tuple(new))
        return Pyramid2D(ll, details, self.normalization)


def _analysis_step_2d(image, f, normalization):
    lo, hi = analysis_step(image, f, normalization)  # along rows
    ll, hl = analysis_step(lo.T, f, normalization)  # along columns
    lh, hh = analysis_step(hi.T, f, normalization)
    return ll.T, lh.T, hl.T, hh.T


def analyze_2d(image, f, levels: int | None = None, normalization: str = "orthonormal") -> Pyramid2D:
    """Tensor-product pyramid: rows then columns at each level, recursing on LL."""
    f = as_filter(f)
    img = np.asarray(image, dtype=float)
    if img.ndim != 2:
        raise InvalidInputError("analyze_2d expects a 2-D array")
    max_levels = min(_check_length(img.shape[0]), _check_length(img.shape[1]))
    if levels is None:
        levels = max_levels
    if not 1 <= levels <= max_levels:
        raise InvalidInputError(f"levels must lie in 1..{max_levels}, got {levels}")
    _scale(normalization)
    _warn_if_not_orthogonal(f)
    details = []
    ll = img
    for _ in range(levels):
        ll, lh, hl, hh = _analysis_step_2d(ll, f, normalization)
        details.append((lh, hl, hh))
    return Pyramid2D(ll, details[::-1], normalization)


def synthesize_2d(p: Pyramid2D, f) -> np.ndarray:
    f = as_filter(f)
    ll = np.asarray(p.ll, dtype=float)
    for lh, hl, hh in p.details:
        if not (ll.shape == lh.shape == hl.shape == hh.shape):
            raise InvalidInputError("2-D band shapes are inconsistent")
        lo = synthesis_step(ll.T, hl.T, f, p.normalization).T
        hi = synthesis_step(lh.T, hh.T, f, p.normalization).T
        ll = synthesis_step(lo, hi, f, p.normalization)
    return ll


@dataclass(frozen=True)
class PacketTree:
    """Binary splitting tree.  ``split=True`` sends the band through one more step."""

    split: bool = False
    low: "PacketTree | None" = None
    high: "PacketTree | None" = None

    @classmethod
    def leaf(cls) -> "PacketTree":
        return cls(False)

    @classmethod
    def full(cls, depth: int) -> "PacketTree":
        """Uniform tree; with Haar at ``depth = log2 n`` it yields the Walsh basis."""
        if depth <= 0:
            return cls.leaf()
        child = cls.full(depth - 1)
        return cls(True, child, child)

    @classmethod
    def wavelet(cls, levels: int) -> "PacketTree":
        """Tree that only splits the low band; reproduces :func:`analyze`."""
        if levels <= 0:
            return cls.leaf()
        return cls(True, cls.wavelet(levels - 1), cls.leaf())

    @classmethod
    def from_nested(cls, spec) -> "PacketTree":
        """Build from ``None``/``False`` (leaf) or a ``(low, high)`` pair."""
        if spec is None or spec is False:
            return cls.leaf()
        if spec is True:
            return cls(True, cls.leaf(), cls.leaf())
        if isinstance(spec, (tuple, list)) and len(spec) == 2:
            return cls(True, cls.from_nested(spec[0]), cls.from_nested(spec[1]))
        raise InvalidInputError(f"cannot build a packet tree from {spec!r}")

    @property
    def depth(self) -> int:
        if not self.split:
            return 0
        return 1 + max(self.low.depth, self.high.depth)

    def validate(self):
        if self.split:
            if self.low is None or self.high is None:
                raise InvalidInputError("a split node needs both children")
            self.low.validate()
            self.high.validate()
        elif self.low is not None or self.high is not None:
            raise InvalidInputError("a leaf node must not have children")


def packet_analyze(signal, f, tree: PacketTree, normalization: str = "orthonormal"):
    """Wavelet-packet analysis.

    Returns ``(coefficients, labels)``: the leaf bands concatenated depth
    first (low before high) and one label per band such as ``"LH"``.  The
    root band is labelled ``""``.
    """
    f = as_filter(f)
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError("packet_analyze expects a 1-D signal")
    max_depth = _check_length(x.size)
    if not isinstance(tree, PacketTree):
        raise InvalidInputError("tree must be a PacketTree")
    tree.validate()
    if tree.depth > max_depth:
        raise InvalidInputError(f"tree depth {tree.depth} exceeds log2 n = {max_depth}")
    _scale(normalization)
    bands, labels = [], []

    def walk(node, band, label):
        if not node.split:
            bands.append(band)
            labels.append(label)
            return
        lo, hi = analysis_step(band, f, normalization)
        walk(node.low, lo, label + "L")
        walk(node.high, hi, label + "H")

    walk(tree, x, "")
    return np.concatenate(bands), labels


def packet_synthesize(coeffs, f, tree: PacketTree, normalization: str = "orthonormal") -> np.ndarray:
    """Invert :func:`packet_analyze` for the same tree."""
    f = as_filter(f)
    coeffs = np.asarray(coeffs, dtype=float)
    n = coeffs.size
    _check_length(n)
    tree.validate()
    if tree.depth > n.bit_length() - 1:
        raise InvalidInputError("tree is deeper than the signal allows")
    pos = 0

    def walk(node, length):
        nonlocal pos
        if not node.split:
            band = coeffs[pos : pos + length]
            pos += length
            return band
        lo = walk(node.low, length // 2)
        hi = walk(node.high, length // 2)
        return synthesis_step(lo, hi, f, normalization)

    return walk(tree, n)


def packet_matrix(f, tree: PacketTree, n: int, normalization: str = "orthonormal") -> np.ndarray:
    """Matrix whose column ``k`` is ``packet_analyze`` of the unit vector ``e_k``."""
    cols = [packet_analyze(e, f, tree, normalization)[0] for e in np.eye(n)]
    return np.array(cols).T


def haar_matrix(n: int) -> np.ndarray:
    """Unnormalized Haar synthesis matrix ``W_n`` (values on ``n`` subintervals).

    Columns: the box ``phi``, then ``W(2^j x - k)`` for ``j = 0, 1, ...`` and
    ``k = 0 .. 2^j - 1``.
    """
    levels = _check_length(n) if n > 1 else 0
    cols = [np.ones(n)]
    for j in range(levels):
        width = n >> j
        for k in range(1 << j):
            col = np.zeros(n)
            col[k * width : k * width + width // 2] = 1
            col[k * width + width // 2 : (k + 1) * width] = -1
            cols.append(col)
    return np.array(cols).T


def haar_factors(n: int, walsh: bool = False) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One pyramid step of ``W_n`` as three sparse factors.

    ``W_n = blockdiag(W_2, ..., W_2) @ P @ blockdiag(W_{n/2}, I_{n/2})`` where
    ``P`` brings columns ``0, 2, 4, ...`` ahead of ``1, 3, 5, ...``.  With
    ``walsh=True`` the identity corner is replaced by a second ``W_{n/2}``
    and the product becomes a Walsh (Hadamard-type) matrix.
    """
    _check_length(n)
    h = n // 2
    W2 = np.array([[1.0, 1.0], [1.0, -1.0]])
    left = np.kron(np.eye(h), W2)
    order = np.concatenate([np.arange(0, n, 2), np.arange(1, n, 2)])
    P = np.zeros((n, n))
    P[order, np.arange(n)] = 1.0
    if walsh:
        Wh = corner = walsh_matrix(h)
    else:
        Wh, corner = haar_matrix(h), np.eye(h)
    Z = np.zeros((h, h))
    right = np.block([[Wh, Z], [Z, corner]])
    return left, P, right


def walsh_matrix(n: int) -> np.ndarray:
    """Product of :func:`haar_factors` with ``walsh=True``, built recursively."""
    if n == 1:
        return np.ones((1, 1))
    left, P, right = haar_factors(n, walsh=True)
    return left @ P @ right


def fwt_opcount(n: int, levels: int | None = None, taps: int = 2) -> OpCount:
    """Multiplications for the pyramid: ``2 * taps`` per output pair, halving each level."""
    max_levels = _check_length(n)
    if levels is None:
        levels = max_levels
    if not 1 <= levels <= max_levels:
        raise InvalidInputError(f"levels must lie in 1..{max_levels}, got {levels}")
    stages = tuple(2 * taps * (n >> (j + 1)) for j in range(levels))
    total = sum(stages)
    assert total < 4 * taps * n
    return OpCount(total, stages)

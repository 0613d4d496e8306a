"""Keep-the-largest-coefficients compression in Fourier, wavelet and packet bases.

Every basis here is orthonormal, so ranking coefficients by magnitude is
ranking them by energy, and the squared reconstruction error equals the sum
of the squared discarded coefficients.

Fourier coefficients of a real signal come in conjugate pairs.  They are
stored as real coordinates (DC, ``sqrt(2) Re``, ``sqrt(2) Im`` per
frequency, Nyquist), which is the orthonormal cosine/sine basis; a
"coefficient" is therefore one real number in every basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import InsufficientDataError, InvalidInputError
from .fft import fft_forward, fft_inverse, is_power_of_two
from .filters import FilterCoefficients, make_filter
from .fwt import (
    PacketTree,
    PyramidCoefficients,
    analyze,
    analyze_2d,
    packet_analyze,
    packet_synthesize,
    synthesize,
    synthesize_2d,
)

ZERO_TOL = 1e-12


def real_fourier(x: np.ndarray) -> np.ndarray:
    """Orthonormal real Fourier coordinates along the last axis."""
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    X = np.asarray(fft_forward(x)[0]) / math.sqrt(n)
    if n == 1:
        return X.real
    h = n // 2
    mid = X[..., 1:h]
    pairs = np.stack([mid.real, mid.imag], axis=-1) * math.sqrt(2)
    return np.concatenate(
        [X[..., :1].real, pairs.reshape(x.shape[:-1] + (2 * (h - 1),)), X[..., h : h + 1].real],
        axis=-1,
    )


def real_fourier_inverse(r: np.ndarray) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    n = r.shape[-1]
    if n == 1:
        return r.copy()
    h = n // 2
    pairs = r[..., 1 : n - 1].reshape(r.shape[:-1] + (h - 1, 2)) / math.sqrt(2)
    mid = pairs[..., 0] + 1j * pairs[..., 1]
    X = np.concatenate(
        [r[..., :1], mid, r[..., n - 1 :], np.conj(mid[..., ::-1])], axis=-1
    ).astype(complex)
    return (fft_inverse(X) * math.sqrt(n)).real


def _along_both_axes(fn, img):
    return fn(fn(img).T).T


@dataclass(frozen=True)
class Basis:
    """Which transform :func:`compress_in_basis` should use.

    ``kind`` is one of ``fourier``, ``blocked-fourier``, ``wavelet``, ``packet``.
    """

    kind: str
    filter: FilterCoefficients | None = None
    levels: int | None = None
    tree: PacketTree | None = None
    block: int = 8

    @classmethod
    def fourier(cls) -> "Basis":
        return cls("fourier")

    @classmethod
    def blocked_fourier(cls, block: int = 8) -> "Basis":
        return cls("blocked-fourier", block=block)

    @classmethod
    def wavelet(cls, f, levels: int | None = None) -> "Basis":
        f = f if isinstance(f, FilterCoefficients) else make_filter(f)
        return cls("wavelet", filter=f, levels=levels)

    @classmethod
    def packet(cls, f, tree: PacketTree) -> "Basis":
        f = f if isinstance(f, FilterCoefficients) else make_filter(f)
        return cls("packet", filter=f, tree=tree)

    @property
    def label(self) -> str:
        if self.kind == "fourier":
            return "fourier"
        if self.kind == "blocked-fourier":
            return f"fourier-blocks{self.block}"
        name = self.filter.name or "custom"
        if self.kind == "wavelet":
            return name if self.levels is None else f"{name}:L{self.levels}"
        depth = "full" if self.tree is None else self.tree.depth
        return f"packet:{name}:d{depth}"


def parse_basis(text: str, resolve: Callable[[str], FilterCoefficients] = make_filter) -> Basis:
    """Parse ``fourier``, ``blocked-fourier[:8]``, ``packet:<filter>[:depth]``,
    ``wavelet:<filter>[:levels]`` or a bare filter name."""
    parts = text.strip().split(":")
    head = parts[0].lower()
    try:
        if head == "fourier":
            return Basis.fourier()
        if head in ("blocked-fourier", "fourier8"):
            return Basis.blocked_fourier(int(parts[1]) if len(parts) > 1 else 8)
        if head == "packet":
            depth = int(parts[2]) if len(parts) > 2 else None
            return Basis("packet", filter=resolve(parts[1]), tree=None if depth is None else PacketTree.full(depth))
        if head == "wavelet":
            levels = int(parts[2]) if len(parts) > 2 else None
            return Basis.wavelet(resolve(parts[1]), levels)
    except (IndexError, ValueError) as exc:
        raise InvalidInputError(f"cannot parse basis {text!r}") from exc
    if len(parts) != 1:
        raise InvalidInputError(f"cannot parse basis {text!r}")
    return Basis.wavelet(resolve(parts[0]))


def _check_shape(data: np.ndarray):
    if data.ndim not in (1, 2):
        raise InvalidInputError("input must be a signal (1-D) or an image (2-D)")
    for s in data.shape:
        if not is_power_of_two(s) or s < 2:
            raise InvalidInputError(f"dimension {s} is not a power of two >= 2")


def _transform(data: np.ndarray, basis: Basis):
    """Return ``(coeffs, inverse)`` where ``inverse(coeffs)`` rebuilds the data."""
    if basis.kind == "fourier":
        if data.ndim == 1:
            return real_fourier(data), real_fourier_inverse
        return (
            _along_both_axes(real_fourier, data).ravel(),
            lambda c: _along_both_axes(real_fourier_inverse, c.reshape(data.shape)),
        )
    if basis.kind == "blocked-fourier":
        b = basis.block
        if data.ndim == 1:
            b = min(b, data.size)
            coeffs = real_fourier(data.reshape(-1, b)).ravel()
            return coeffs, lambda c: real_fourier_inverse(c.reshape(-1, b)).ravel()
        bh, bw = min(b, data.shape[0]), min(b, data.shape[1])
        H, W = data.shape
        blocks = data.reshape(H // bh, bh, W // bw, bw).transpose(0, 2, 1, 3)
        tb = real_fourier(np.swapaxes(real_fourier(blocks), -1, -2))
        shape = tb.shape

        def inv(c):
            t = c.reshape(shape)
            blk = real_fourier_inverse(np.swapaxes(real_fourier_inverse(t), -1, -2))
            return blk.transpose(0, 2, 1, 3).reshape(H, W)

        return tb.ravel(), inv
    if basis.kind == "wavelet":
        f = basis.filter
        if data.ndim == 1:
            p = analyze(data, f, basis.levels)
            lengths = p.block_lengths
            return p.to_array(), lambda c: synthesize(PyramidCoefficients.from_array(c, lengths), f)
        levels = basis.levels
        if levels is None:
            levels = max(1, int(math.log2(min(data.shape))) - 2)
        p2 = analyze_2d(data, f, levels)
        return p2.to_array(), lambda c: synthesize_2d(p2.like(c), f)
    if basis.kind == "packet":
        if data.ndim != 1:
            raise InvalidInputError("packet bases are only defined for 1-D signals")
        tree = basis.tree or PacketTree.full(int(math.log2(data.size)))
        coeffs, _ = packet_analyze(data, basis.filter, tree)
        return coeffs, lambda c: packet_synthesize(c, basis.filter, tree)
    raise InvalidInputError(f"unknown basis kind {basis.kind!r}")


def kept_count(fraction: float, n: int) -> int:
    # round away float noise such as 0.05 * 1000 = 50.000000000000007
    return min(n, max(1, math.ceil(round(fraction * n, 9))))


def top_indices(coeffs: np.ndarray, count: int) -> np.ndarray:
    """Indices of the ``count`` largest magnitudes; ties go to the lower index."""
    order = np.argsort(-np.abs(coeffs), kind="stable")
    return order[:count]


@dataclass(frozen=True)
class CompressionResult:
    basis: str
    kept_fraction: float
    kept_count: int
    l2_rel_error: float
    linf_error: float
    discarded_energy: float


def compress_in_basis(data, basis: Basis | str, kept_fraction: float):
    """Transform, keep the largest ``ceil(kept_fraction * n)`` coefficients, invert.

    Returns ``(CompressionResult, reconstruction)``.
    """
    if isinstance(basis, str):
        basis = parse_basis(basis)
    if not (0 < kept_fraction <= 1) or not math.isfinite(kept_fraction):
        raise InvalidInputError(f"kept_fraction must lie in (0, 1], got {kept_fraction}")
    x = np.asarray(data, dtype=float)
    _check_shape(x)
    coeffs, inverse = _transform(x, basis)
    n = coeffs.size
    count = kept_count(kept_fraction, n)
    keep = top_indices(coeffs, count)
    mask = np.zeros(n, dtype=bool)
    mask[keep] = True
    recon = inverse(np.where(mask, coeffs, 0.0))
    err = x - recon
    norm = np.linalg.norm(x)
    l2 = float(np.linalg.norm(err) / norm) if norm > 0 else float(np.linalg.norm(err))
    result = CompressionResult(
        basis=basis.label,
        kept_fraction=float(kept_fraction),
        kept_count=count,
        l2_rel_error=l2,
        linf_error=float(np.max(np.abs(err))),
        discarded_energy=float(np.sum(coeffs[~mask] ** 2)),
    )
    return result, recon


def basis_coefficients(data, basis: Basis | str) -> np.ndarray:
    if isinstance(basis, str):
        basis = parse_basis(basis)
    x = np.asarray(data, dtype=float)
    _check_shape(x)
    return _transform(x, basis)[0]


@dataclass(frozen=True, eq=False)
class DecayProfile:
    """Coefficient magnitudes and a least-squares decay exponent.

    For Fourier, ``index`` holds frequencies ``j`` and the fit is
    ``log(mag) ~ exponent * log(j)``.  For wavelets ``index`` holds levels
    (coarse to fine) and the fit is ``log2(mag) ~ exponent * level``.
    ``residual`` is the RMS misfit in the same log units.
    """

    basis: str
    index: np.ndarray
    magnitudes: np.ndarray
    exponent: float
    residual: float
    all_zero: bool = False


def _fit(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float]:
    if xs.size < 4:
        raise InsufficientDataError(f"need at least 4 points for a decay fit, have {xs.size}")
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = ys - (slope * xs + intercept)
    return float(slope), float(np.sqrt(np.mean(resid**2)))


def decay_profile(signal, basis: Basis | str = "fourier") -> DecayProfile:
    """Measure how fast coefficients of a (step-like) signal decay.

    Fourier: the magnitudes ``|a_j|`` of the unitary DFT are replaced by their
    upper envelope ``max_{i >= j} |a_i|`` (a step placed off the dyadic grid
    has near-zero coefficients at a regular subset of ``j``) and fitted on
    ``2 <= j <= n/4``; a jump gives a slope near -1.

    Wavelet: the largest detail magnitude per level, fitted against the level
    number; a jump gives a slope near -1/2.  Levels that are exactly zero
    carry no decay information and are left out of the fit.
    """
    if isinstance(basis, str):
        basis = parse_basis(basis)
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError("decay profiles are defined for 1-D signals")
    _check_shape(x)
    n = x.size
    if basis.kind == "fourier":
        mags = np.abs(np.asarray(fft_forward(x)[0])) / math.sqrt(n)
        half = mags[1 : n // 2 + 1]
        envelope = np.maximum.accumulate(half[::-1])[::-1]  # envelope[j-1] for j >= 1
        j = np.arange(2, n // 4 + 1)
        if np.all(half < ZERO_TOL):
            return DecayProfile(basis.label, j, envelope[j - 1], math.nan, math.nan, True)
        env = envelope[j - 1]
        slope, resid = _fit(np.log(j), np.log(env))
        return DecayProfile(basis.label, j, env, slope, resid)
    if basis.kind == "wavelet":
        p = analyze(x, basis.filter, basis.levels)
        levels = np.arange(p.levels)
        mags = np.array([np.max(np.abs(d)) for d in p.details])
        if np.all(mags < ZERO_TOL):
            return DecayProfile(basis.label, levels, mags, math.nan, math.nan, True)
        use = mags >= ZERO_TOL
        slope, resid = _fit(levels[use].astype(float), np.log2(mags[use]))
        return DecayProfile(basis.label, levels, mags, slope, resid)
    raise InvalidInputError("decay profiles support the fourier and wavelet bases")


def contest_report(data, bases: Sequence[Basis | str], fractions: Sequence[float],
                   include_blocked: bool = True) -> list[CompressionResult]:
    """Run every basis at every fraction, in input order.

    An 8-sample blocked Fourier basis is appended unless already present or
    ``include_blocked`` is false.
    """
    parsed = [parse_basis(b) if isinstance(b, str) else b for b in bases]
    if include_blocked and not any(b.kind == "blocked-fourier" for b in parsed):
        parsed.append(Basis.blocked_fourier(8))
    rows = []
    for b in parsed:
        for frac in fractions:
            rows.append(compress_in_basis(data, b, frac)[0])
    return rows


REPORT_COLUMNS = ("basis", "fraction", "kept_count", "l2_rel_error", "linf_error")


def report_rows(rows: Sequence[CompressionResult]) -> list[list[str]]:
    out = [list(REPORT_COLUMNS)]
    for r in rows:
        out.append([r.basis, repr(r.kept_fraction), str(r.kept_count),
                    repr(r.l2_rel_error), repr(r.linf_error)])
    return out


def step_signal(n: int, position: int | None = None) -> np.ndarray:
    """1 on ``[0, position)`` and 0 afterwards; ``position`` defaults to ``n // 2``."""
    if position is None:
        position = n // 2
    x = np.zeros(n)
    x[:position] = 1.0
    return x

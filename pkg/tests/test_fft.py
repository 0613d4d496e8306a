import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavefft import InvalidLengthError, dft_naive, fft_factors, fft_forward, fft_inverse, fourier_matrix
from wavefft.fft import OpCount, bit_reverse_permutation, fft_recursive


def _random(rng, n, batch=None):
    shape = (n,) if batch is None else (batch, n)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_naive_small_cases():
    np.testing.assert_allclose(dft_naive([1, 0, 0, 0]).values, [1, 1, 1, 1])
    np.testing.assert_allclose(dft_naive([0, 1, 0, 0]).values, [1, 1j, -1, -1j], atol=1e-15)
    np.testing.assert_allclose(dft_naive([1, 1]).values, [2, 0], atol=1e-15)


def test_naive_matches_closed_form_matrix():
    a = np.arange(8.0)
    w = np.exp(2j * np.pi / 8)
    F = np.array([[w ** (j * k) for k in range(8)] for j in range(8)])
    np.testing.assert_allclose(dft_naive(a).values, F @ a, atol=1e-12)


def test_f4_matrix():
    F4 = np.array([[1, 1, 1, 1], [1, 1j, -1, -1j], [1, -1, 1, -1], [1, -1j, -1, 1j]])
    np.testing.assert_allclose(fourier_matrix(4), F4, atol=1e-15)


def test_f4_inverse_rows():
    Finv = np.array([fft_inverse(e) for e in np.eye(4)]).T
    expected = np.array([[(-1j) ** (j * k) for k in range(4)] for j in range(4)]) / 4
    np.testing.assert_allclose(Finv, expected, atol=1e-15)


def test_fft_small():
    y, count = fft_forward([1, 0, 0, 0])
    np.testing.assert_allclose(y.values, [1, 1, 1, 1])
    assert count.multiplications == 4
    np.testing.assert_allclose(fft_inverse([2, 0]), [1, 1])


def test_opcount_1024():
    _, count = fft_forward(np.zeros(1024))
    assert count.multiplications == 5120
    assert count.stage_breakdown == (512,) * 10


@pytest.mark.parametrize("n", [1, 2, 4, 64, 512])
def test_opcount_formula(n):
    _, count = fft_forward(np.zeros(n))
    assert count.multiplications == (n // 2) * int(math.log2(n))
    _, rcount = fft_recursive(np.zeros(n))
    assert rcount == count


def test_opcount_invariant():
    with pytest.raises(ValueError):
        OpCount(3, (1, 1))


def test_against_oracle_256(rng):
    a = _random(rng, 256)
    y = fft_forward(a)[0].values
    ref = dft_naive(a).values
    assert np.max(np.abs(y - ref)) / np.max(np.abs(ref)) < 1e-11


def test_recursive_matches_iterative(rng):
    a = _random(rng, 128)
    np.testing.assert_allclose(fft_recursive(a)[0], fft_forward(a)[0].values, atol=1e-11)


def test_round_trip_1024(rng):
    a = _random(rng, 1024)
    assert np.max(np.abs(fft_inverse(fft_forward(a)[0]) - a)) < 1e-10


def test_batch_axis(rng):
    a = _random(rng, 32, batch=5)
    y = fft_forward(a)[0].values
    for row, out in zip(a, y):
        np.testing.assert_allclose(out, dft_naive(row).values, atol=1e-11)


def test_parseval(rng):
    a = _random(rng, 512)
    y = fft_forward(a)[0].values
    assert abs(np.sum(np.abs(y) ** 2) - 512 * np.sum(np.abs(a) ** 2)) / np.sum(np.abs(y) ** 2) < 1e-10


def test_linearity(rng):
    a, b = _random(rng, 64), _random(rng, 64)
    alpha, beta = 2 - 1j, 0.5j
    lhs = fft_forward(alpha * a + beta * b)[0].values
    rhs = alpha * fft_forward(a)[0].values + beta * fft_forward(b)[0].values
    np.testing.assert_allclose(lhs, rhs, atol=1e-10)


@pytest.mark.parametrize("n", [3, 6, 12, 0])
def test_invalid_length(n):
    with pytest.raises(InvalidLengthError):
        fft_forward(np.zeros(n))
    with pytest.raises(InvalidLengthError):
        fft_inverse(np.zeros(n))


@pytest.mark.parametrize("n", [2, 4, 8, 1024])
def test_factorization_reproduces_fourier_matrix(n):
    combine, middle, shuffle = fft_factors(n)
    np.testing.assert_allclose(combine @ middle @ shuffle, fourier_matrix(n), atol=1e-10)


def test_eq1_factors_for_n4():
    combine, middle, shuffle = fft_factors(4)
    np.testing.assert_allclose(combine, [[1, 0, 1, 0], [0, 1, 0, 1j], [1, 0, -1, 0], [0, 1, 0, -1j]], atol=1e-15)
    np.testing.assert_allclose(middle, [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]], atol=1e-15)
    np.testing.assert_array_equal(shuffle, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def test_bit_reversal():
    np.testing.assert_array_equal(bit_reverse_permutation(8), [0, 4, 2, 6, 1, 5, 3, 7])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 9), st.integers(0, 2**31 - 1))
def test_oracle_property(log_n, seed):
    rng = np.random.default_rng(seed)
    a = _random(rng, 2**log_n)
    ref = dft_naive(a).values
    y = fft_forward(a)[0].values
    assert np.linalg.norm(y - ref) <= 1e-9 * max(np.linalg.norm(ref), 1e-300)

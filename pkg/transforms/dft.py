"""Discrete Fourier transform of arbitrary length"""

import logging

import numpy as np

from models.backend import UnifiedBackend, get_backend
from models.errors import LengthError

logger = logging.getLogger(__name__)


def _as_vector(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1:
        raise LengthError(f"Expected a 1-D vector, got shape {x.shape}")
    if x.size == 0:
        raise LengthError("DFT of an empty vector is undefined")
    return x


def dft_forward(x, backend: UnifiedBackend | None = None) -> np.ndarray:
    """
    X[l] = sum_n x[n] exp(-j 2 pi l n / N), unnormalized.

    Every N >= 1 is supported, not only powers of two.
    """
    x = _as_vector(x)
    return (backend or get_backend()).fft(x)


def dft_inverse(X, backend: UnifiedBackend | None = None) -> np.ndarray:
    """x[n] = (1/N) sum_l X[l] exp(+j 2 pi l n / N)"""
    X = _as_vector(X)
    return (backend or get_backend()).ifft(X)


def naive_dft(x) -> np.ndarray:
    """O(N^2) summation of the defining formula, used as a test oracle"""
    x = _as_vector(x)
    n = np.arange(x.size)
    # reduce the exponent mod N first; large phases lose digits in exp
    kernel = np.exp(-2j * np.pi * (np.outer(n, n) % x.size) / x.size)
    return kernel @ x

"""Circulant approximations of Hermitian Toeplitz matrices and their FFT spectra

Three first rows, each built in O(N) straight from the coefficients:

- fourier: eigenvalues sample the partial Fourier sum S_{N-1} at l/N
- strang:  keeps the central band of H_N and wraps it around
- cesaro:  eigenvalues sample the Cesàro sum sigma_N; the Frobenius-closest circulant to H_N
"""

from dataclasses import dataclass
import logging

import numpy as np
import scipy.linalg

from config import CIRCULANT_RESIDUE_TOL
from matrices.toeplitz import DenseHermitian, Spectrum
from models.backend import UnifiedBackend
from models.errors import LengthError, NotHermitianError, ValidationError
from symbols.sequences import HermitianSequence
from transforms.dft import dft_forward

logger = logging.getLogger(__name__)

SCHEMES = ("cesaro", "fourier", "strang")


@dataclass(frozen=True)
class CirculantRow:
    scheme: str
    row: np.ndarray

    def __post_init__(self):
        row = np.asarray(self.row, dtype=complex)
        if row.ndim != 1 or row.size == 0:
            raise LengthError("A circulant row needs at least one entry")
        object.__setattr__(self, "row", row)

    @property
    def n(self) -> int:
        return self.row.size

    def to_dense(self) -> DenseHermitian:
        """C[m,n] = row[(n-m) mod N]"""
        first_column = np.roll(self.row[::-1], 1)
        return DenseHermitian(scipy.linalg.toeplitz(first_column, self.row))

    def __add__(self, other: "CirculantRow") -> "CirculantRow":
        if other.n != self.n:
            raise LengthError(f"Row lengths differ: {self.n} vs {other.n}")
        return CirculantRow(self.scheme, self.row + other.row)

    def __sub__(self, other: "CirculantRow") -> "CirculantRow":
        if other.n != self.n:
            raise LengthError(f"Row lengths differ: {self.n} vs {other.n}")
        return CirculantRow("perturbation", self.row - other.row)


def _check_size(N: int):
    if N < 1:
        raise ValidationError(f"Matrix size must be >= 1, got {N}")


def _forward_and_wrapped(seq: HermitianSequence, N: int) -> tuple[np.ndarray, np.ndarray]:
    """(h[-k], h[N-k]) for k = 0..N-1, with h[N-0] := 0"""
    h = seq.coefficients(N)
    backward = np.conj(h)
    wrapped = np.zeros(N, dtype=complex)
    wrapped[1:] = h[:0:-1]
    return backward, wrapped


def fourier_row(seq: HermitianSequence, N: int) -> CirculantRow:
    """row[0] = h[0]; row[k] = h[-k] + h[N-k]"""
    _check_size(N)
    backward, wrapped = _forward_and_wrapped(seq, N)
    row = backward + wrapped
    row[0] = backward[0].real
    return CirculantRow("fourier", row)


def strang_row(seq: HermitianSequence, N: int) -> CirculantRow:
    """
    row[k] = h[-k] for k <= floor((N-1)/2), h[N-k] for k >= ceil((N+1)/2),
    and row[N/2] = 0 when N is even.
    """
    _check_size(N)
    backward, wrapped = _forward_and_wrapped(seq, N)
    k = np.arange(N)
    row = np.zeros(N, dtype=complex)
    head = k <= (N - 1) // 2
    tail = k >= (N + 2) // 2
    row[head] = backward[head]
    row[tail] = wrapped[tail]
    row[0] = backward[0].real
    return CirculantRow("strang", row)


def cesaro_row(seq: HermitianSequence, N: int) -> CirculantRow:
    """row[k] = ((N-k) h[-k] + k h[N-k]) / N"""
    _check_size(N)
    backward, wrapped = _forward_and_wrapped(seq, N)
    k = np.arange(N)
    row = ((N - k) * backward + k * wrapped) / N
    row[0] = backward[0].real
    return CirculantRow("cesaro", row)


_BUILDERS = {
    "fourier": fourier_row,
    "strang": strang_row,
    "cesaro": cesaro_row,
}


def build_row(seq: HermitianSequence, N: int, scheme: str) -> CirculantRow:
    """Dispatch on scheme name"""
    builder = _BUILDERS.get(scheme)
    if builder is None:
        raise ValidationError(f"Unknown scheme: {scheme}. Must be one of {SCHEMES}")
    return builder(seq, N)


def circulant_eigs(row: CirculantRow, backend: UnifiedBackend | None = None,
                   tol: float = CIRCULANT_RESIDUE_TOL) -> Spectrum:
    """
    lambda_l = sum_n row[n] exp(-j 2 pi l n / N), i.e. the DFT of the first row.

    The imaginary residue must stay below tol * ||row||_1 before it is dropped.
    """
    transformed = dft_forward(row.row, backend)
    residue = float(np.max(np.abs(transformed.imag)))
    threshold = tol * float(np.sum(np.abs(row.row)))
    if residue > threshold:
        raise NotHermitianError(
            f"{row.scheme} row is not Hermitian: imaginary residue {residue:.3e} > {threshold:.3e}"
        )
    return Spectrum.from_values(transformed.real)


def frobenius_gap(seq: HermitianSequence, row: CirculantRow) -> float:
    """
    ||C - H_N||_F in O(N), summing each diagonal offset d = n - m once:
    it has N - |d| entries, h[-d] in H_N and row[d mod N] in C.
    """
    N = row.n
    d = np.arange(-(N - 1), N)
    diff = row.row[np.mod(d, N)] - seq.at(-d)
    return float(np.sqrt(np.sum((N - np.abs(d)) * np.abs(diff) ** 2)))


def chan_optimality_gap(seq: HermitianSequence, N: int, perturbation) -> tuple[float, float]:
    """
    (||Cbar - H||_F, ||(Cbar + perturbation) - H||_F).

    The Cesàro circulant minimizes the Frobenius distance over all circulants,
    so the first value never exceeds the second.
    """
    if not isinstance(perturbation, CirculantRow):
        perturbation = CirculantRow("perturbation", perturbation)
    if perturbation.n != N:
        raise LengthError(f"Perturbation length {perturbation.n} does not match N={N}")
    chan = cesaro_row(seq, N)
    return frobenius_gap(seq, chan), frobenius_gap(seq, chan + perturbation)

"""Hermitian Toeplitz matrices: dense construction, fast matvec, and the exact eigenvalue oracle"""

from dataclasses import dataclass
import logging

import numpy as np
import scipy.linalg

from config import HERMITIAN_TOL
from models.backend import UnifiedBackend, get_backend
from models.errors import LengthError, NotHermitianError, ValidationError
from symbols.sequences import HermitianSequence
from transforms.dft import dft_forward, dft_inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseHermitian:
    """Square complex matrix expected to satisfy A[n,m] = conj(A[m,n])"""
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise LengthError(f"Expected a non-empty square matrix, got shape {entries.shape}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def asymmetry(self) -> float:
        """max |A - A^H|"""
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def principal(self, n: int) -> "DenseHermitian":
        """Leading n x n principal submatrix"""
        return DenseHermitian(self.entries[:n, :n])

    def matvec(self, x) -> np.ndarray:
        return self.entries @ np.asarray(x, dtype=complex)


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalue multiset plus the permutation that sorts it descending.

    ``order`` is a stable argsort of -values, so ties keep the lower index first.
    """
    values: np.ndarray
    order: np.ndarray

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise LengthError("A spectrum needs at least one eigenvalue")
        return cls(values=values, order=np.argsort(-values, kind="stable"))

    def __len__(self) -> int:
        return self.values.size

    @property
    def descending(self) -> np.ndarray:
        return self.values[self.order]

    @property
    def lambda_max(self) -> float:
        return float(self.values[self.order[0]])

    @property
    def lambda_min(self) -> float:
        return float(self.values[self.order[-1]])


def build_toeplitz(seq: HermitianSequence, N: int) -> DenseHermitian:
    """H_N[m,n] = h[m-n]"""
    if N < 1:
        raise ValidationError(f"Matrix size must be >= 1, got {N}")
    column = seq.coefficients(N)
    row = np.conj(column)
    return DenseHermitian(scipy.linalg.toeplitz(column, row))


def toeplitz_matvec(seq: HermitianSequence, N: int, x, backend: UnifiedBackend | None = None) -> np.ndarray:
    """
    H_N x in O(N log N) by embedding H_N in a (2N-1) x (2N-1) circulant.

    The circulant's first column is h[0..N-1] followed by h[-(N-1)..-1].
    """
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or x.size != N:
        raise LengthError(f"Vector length {x.size} does not match matrix size {N}")
    h = seq.coefficients(N)
    column = np.concatenate([h, np.conj(h[:0:-1])])
    padded = np.zeros(2 * N - 1, dtype=complex)
    padded[:N] = x
    product = dft_inverse(dft_forward(column, backend) * dft_forward(padded, backend), backend)
    return product[:N]


def exact_eigs(A: DenseHermitian, backend: UnifiedBackend | None = None, tol: float = HERMITIAN_TOL) -> Spectrum:
    """
    Ground-truth eigenvalues of a dense Hermitian matrix.

    Stored asymmetry above ``tol`` is rejected rather than repaired.
    """
    if not isinstance(A, DenseHermitian):
        A = DenseHermitian(A)
    asymmetry = A.asymmetry()
    if asymmetry > tol:
        raise NotHermitianError(f"Matrix is not Hermitian: max |A - A^H| = {asymmetry:.3e} > {tol:.0e}")
    logger.debug(f"Dense eigensolve at N={A.n}")
    values = (backend or get_backend()).eigvalsh(A.entries)
    return Spectrum.from_values(values)

"""Unified numerical backend supporting numpy and scipy providers"""

import logging

import numpy as np

from config import SPECTRAL_BACKEND

logger = logging.getLogger(__name__)

BACKENDS = ("numpy", "scipy")


class UnifiedBackend:
    """
    Unified wrapper over the FFT and the dense Hermitian eigensolver.

    Provider is selected via the SPECTRAL_BACKEND environment variable:
    - "numpy" → numpy.fft (pocketfft) and numpy.linalg.eigvalsh (LAPACK heevd)
    - "scipy" → scipy.fft and scipy.linalg.eigvalsh

    Both FFTs accept every length (mixed radix with a Bluestein fallback for
    large prime factors). Usage is identical regardless of provider.
    """

    def __init__(self, provider: str | None = None):
        self.provider = (provider or SPECTRAL_BACKEND).lower()
        self._fft = None
        self._ifft = None
        self._eigvalsh = None
        self._initialize_backend()

    def _initialize_backend(self):
        """Initialize backend based on selected provider"""
        if self.provider == "numpy":
            self._initialize_numpy()
        elif self.provider == "scipy":
            self._initialize_scipy()
        else:
            raise ValueError(
                f"Invalid SPECTRAL_BACKEND: {self.provider}. "
                "Must be 'numpy' or 'scipy'"
            )

    def _initialize_numpy(self):
        self._fft = np.fft.fft
        self._ifft = np.fft.ifft
        self._eigvalsh = np.linalg.eigvalsh
        logger.debug("✓ Initialized numpy backend")

    def _initialize_scipy(self):
        try:
            import scipy.fft
            import scipy.linalg
        except ImportError as e:
            logger.error(f"✗ Failed to initialize scipy backend: {e}")
            raise

        self._fft = scipy.fft.fft
        self._ifft = scipy.fft.ifft
        self._eigvalsh = scipy.linalg.eigvalsh
        logger.debug("✓ Initialized scipy backend")

    def fft(self, x: np.ndarray) -> np.ndarray:
        """Unnormalized forward DFT"""
        return self._fft(x)

    def ifft(self, x: np.ndarray) -> np.ndarray:
        """Inverse DFT carrying the 1/N factor"""
        return self._ifft(x)

    def eigvalsh(self, a: np.ndarray) -> np.ndarray:
        """Eigenvalues of a Hermitian matrix, ascending"""
        return np.asarray(self._eigvalsh(a), dtype=float)

    def get_backend_info(self) -> dict:
        """Get information about the active provider"""
        if self.provider == "numpy":
            return {"provider": "numpy", "version": np.__version__}
        import scipy
        return {"provider": "scipy", "version": scipy.__version__}


# Global backend instance
_backend = None


def get_backend(provider: str | None = None) -> UnifiedBackend:
    """Get the global backend, or build a specific provider when one is named"""
    global _backend
    if provider is not None:
        return UnifiedBackend(provider)
    if _backend is None:
        _backend = UnifiedBackend()
    return _backend

"""
Test the numpy / scipy backend switch.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from models.backend import UnifiedBackend, get_backend
from transforms.dft import dft_forward


def test_global_backend_is_shared():
    assert get_backend() is get_backend()


def test_invalid_provider():
    with pytest.raises(ValueError, match="Must be 'numpy' or 'scipy'"):
        UnifiedBackend("cuda")


def test_providers_agree():
    """Both providers give the same FFT and eigenvalues"""
    rng = np.random.default_rng(3)
    x = rng.standard_normal(101) + 1j * rng.standard_normal(101)
    a = rng.standard_normal((12, 12)) + 1j * rng.standard_normal((12, 12))
    a = a + a.conj().T

    numpy_backend, scipy_backend = get_backend("numpy"), get_backend("scipy")
    assert np.max(np.abs(dft_forward(x, numpy_backend) - dft_forward(x, scipy_backend))) < 1e-10
    np.testing.assert_allclose(numpy_backend.eigvalsh(a), scipy_backend.eigvalsh(a), atol=1e-10)


def test_backend_info():
    info = get_backend("numpy").get_backend_info()
    assert info["provider"] == "numpy"
    assert info["version"]

"""
Tests for the fourier / strang / cesaro circulant rows and their FFT spectra.

Checks:
1. Row examples and the Cesàro row against sampled Cesàro sums
2. FFT eigenvalues against the dense oracle on random Hermitian circulants
3. Exact one-half eigenvalues of the rectangular window
4. Cesàro spectrum bracketed by the Toeplitz spectrum
5. Frobenius optimality of the Cesàro circulant
"""

import sys
from pathlib import Path
import logging

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from matrices.circulant import (
    SCHEMES,
    CirculantRow,
    build_row,
    cesaro_row,
    chan_optimality_gap,
    circulant_eigs,
    fourier_row,
    frobenius_gap,
    strang_row,
)
from matrices.toeplitz import build_toeplitz, exact_eigs
from models.errors import LengthError, NotHermitianError, ValidationError
from symbols.sequences import HermitianSequence, cesaro_sum, make_symbol, partial_fourier_sum
from transforms.dft import dft_inverse

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

TRIDIAG = HermitianSequence(coeffs=[2.0, 1.0], decay_class="banded")

BUILT_IN = [
    ("triangular", {"W": 0.25}),
    ("sawtooth", {}),
    ("rect_window", {"W": 0.25}),
]


def _random_hermitian_row(rng, N):
    row = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    row[0] = row[0].real
    for k in range(1, N // 2 + 1):
        row[N - k] = np.conj(row[k])
    if N % 2 == 0:
        row[N // 2] = row[N // 2].real
    return CirculantRow("random", row)


def _random_complex_sequence(rng, r):
    coeffs = rng.standard_normal(r + 1) + 1j * rng.standard_normal(r + 1)
    coeffs[0] = coeffs[0].real
    return HermitianSequence(coeffs=coeffs, decay_class="banded")


# ============================================================================
# ROWS
# ============================================================================

def test_row_examples():
    np.testing.assert_allclose(fourier_row(TRIDIAG, 4).row, [2, 1, 0, 1], atol=1e-12)
    np.testing.assert_allclose(strang_row(TRIDIAG, 5).row, [2, 1, 0, 0, 1], atol=1e-12)
    np.testing.assert_allclose(cesaro_row(TRIDIAG, 4).row, [2, 0.75, 0, 0.75], atol=1e-12)


def test_strang_zeroes_the_middle_for_even_n():
    seq = HermitianSequence(coeffs=[1.0, 2.0, 3.0, 4.0])
    np.testing.assert_allclose(strang_row(seq, 4).row, [1, 2, 0, 2], atol=1e-12)


def test_single_point_rows():
    seq = HermitianSequence(coeffs=[3.0, 1.0])
    for scheme in SCHEMES:
        np.testing.assert_allclose(build_row(seq, 1, scheme).row, [3.0])


def test_unknown_scheme():
    with pytest.raises(ValidationError, match="Unknown scheme"):
        build_row(TRIDIAG, 4, "toeplitz")


@pytest.mark.parametrize("scheme", SCHEMES)
def test_rows_are_hermitian_circulants(scheme):
    rng = np.random.default_rng(17)
    seq = _random_complex_sequence(rng, 20)
    for N in (5, 8, 31, 64):
        assert build_row(seq, N, scheme).to_dense().asymmetry() < 1e-14


def test_to_dense_layout():
    C = CirculantRow("x", [1, 2, 3]).to_dense().entries
    np.testing.assert_array_equal(C, [[1, 2, 3], [3, 1, 2], [2, 3, 1]])


def test_cesaro_row_matches_sampled_cesaro_sum():
    """Inverse DFT of sigma_N(l/N) recovers the Cesàro row"""
    rng = np.random.default_rng(23)
    sequences = [TRIDIAG, _random_complex_sequence(rng, 6), make_symbol("triangular", {"W": 0.25})[0]]
    for seq in sequences:
        for N in (4, 7, 32):
            samples = cesaro_sum(seq, N, np.arange(N) / N)
            np.testing.assert_allclose(cesaro_row(seq, N).row, dft_inverse(samples), atol=1e-12)


def test_fourier_eigenvalues_sample_the_partial_sum():
    rng = np.random.default_rng(29)
    seq = _random_complex_sequence(rng, 40)
    for N in (8, 25, 64):
        eigs = circulant_eigs(fourier_row(seq, N)).values
        np.testing.assert_allclose(eigs, partial_fourier_sum(seq, N - 1, np.arange(N) / N), atol=1e-10)


def test_fourier_equals_strang_for_banded_sequences():
    seq = HermitianSequence(coeffs=[3.0, 1.0, -0.5], decay_class="banded")
    for N in (5, 6, 16):
        np.testing.assert_array_equal(fourier_row(seq, N).row, strang_row(seq, N).row)


def test_constant_sequence_is_exact_for_every_scheme():
    seq, _ = make_symbol("constant", {"c": 3.0})
    for scheme in SCHEMES:
        np.testing.assert_allclose(circulant_eigs(build_row(seq, 6, scheme)).values, 3.0, atol=1e-12)


# ============================================================================
# SPECTRA
# ============================================================================

def test_circulant_eigs_example():
    spectrum = circulant_eigs(fourier_row(TRIDIAG, 4))
    np.testing.assert_allclose(spectrum.descending, [4, 2, 2, 0], atol=1e-12)


def test_fft_eigenvalues_match_dense_oracle():
    """50 random Hermitian circulants, N in {4, 8, 16}"""
    rng = np.random.default_rng(31)
    for i in range(50):
        N = (4, 8, 16)[i % 3]
        row = _random_hermitian_row(rng, N)
        fast = circulant_eigs(row).descending
        oracle = exact_eigs(row.to_dense()).descending
        assert np.max(np.abs(fast - oracle)) < 1e-9


def test_non_hermitian_row_rejected():
    with pytest.raises(NotHermitianError):
        circulant_eigs(CirculantRow("bad", [1.0, 1j, 0.0, 0.0]))


@pytest.mark.parametrize("N", [8, 64, 256])
def test_rect_window_cesaro_has_exact_halves(N):
    """Eigenvalues at l = N/4 and 3N/4 are exactly 1/2; the rest stay 0.4 away"""
    seq, _ = make_symbol("rect_window", {"W": 0.25})
    values = circulant_eigs(cesaro_row(seq, N)).values
    assert abs(values[N // 4] - 0.5) < 1e-9
    assert abs(values[3 * N // 4] - 0.5) < 1e-9
    others = np.delete(values, [N // 4, 3 * N // 4])
    closest = np.min(np.abs(others - 0.5))
    logger.info(f"N={N}: closest non-half eigenvalue sits {closest:.4f} from 1/2")
    assert closest >= 0.4 - 1e-9


@pytest.mark.parametrize("family,params", BUILT_IN)
def test_cesaro_spectrum_is_bracketed_by_toeplitz(family, params):
    seq, sym = make_symbol(family, params)
    for N in (8, 16, 64):
        exact = exact_eigs(build_toeplitz(seq, N))
        cesaro = circulant_eigs(cesaro_row(seq, N))
        assert cesaro.lambda_min >= exact.lambda_min - 1e-10
        assert cesaro.lambda_max <= exact.lambda_max + 1e-10
        assert sym.ess_inf < cesaro.lambda_min
        assert cesaro.lambda_max < sym.ess_sup


# ============================================================================
# FROBENIUS DISTANCE
# ============================================================================

@pytest.mark.parametrize("scheme", SCHEMES)
def test_frobenius_gap_matches_dense_norm(scheme):
    rng = np.random.default_rng(37)
    seq = _random_complex_sequence(rng, 30)
    for N in (1, 6, 33):
        row = build_row(seq, N, scheme)
        dense = np.linalg.norm(row.to_dense().entries - build_toeplitz(seq, N).entries)
        assert frobenius_gap(seq, row) == pytest.approx(dense, rel=1e-10, abs=1e-12)


def test_cesaro_is_frobenius_optimal():
    """No Hermitian-circulant perturbation brings the Cesàro row closer to H_N"""
    rng = np.random.default_rng(41)
    for _ in range(200):
        perturbation = _random_hermitian_row(rng, 16)
        perturbation = CirculantRow("perturbation", perturbation.row * rng.uniform(1e-3, 1.0))
        optimal, perturbed = chan_optimality_gap(TRIDIAG, 16, perturbation)
        assert optimal <= perturbed + 1e-12


def test_chan_gap_with_zero_perturbation():
    optimal, perturbed = chan_optimality_gap(TRIDIAG, 8, np.zeros(8))
    assert optimal == perturbed


def test_chan_gap_length_mismatch():
    with pytest.raises(LengthError):
        chan_optimality_gap(TRIDIAG, 8, np.zeros(5))


@pytest.mark.parametrize("family,params", BUILT_IN)
def test_cesaro_closer_than_other_schemes(family, params):
    seq, _ = make_symbol(family, params)
    for N in (16, 64):
        chan = frobenius_gap(seq, cesaro_row(seq, N))
        strang = frobenius_gap(seq, strang_row(seq, N))
        assert chan <= strang + 1e-12
        assert chan <= frobenius_gap(seq, fourier_row(seq, N)) + 1e-12

        # moving from the Cesàro row to the Strang row never gets closer to H_N
        optimal, perturbed = chan_optimality_gap(seq, N, strang_row(seq, N) - cesaro_row(seq, N))
        assert optimal == pytest.approx(chan, rel=1e-12, abs=1e-12)
        assert perturbed == pytest.approx(strang, rel=1e-10, abs=1e-12)
        assert optimal <= perturbed + 1e-12

    with pytest.raises(LengthError):
        strang_row(seq, 16) - cesaro_row(seq, 64)

"""
Test the N-sweep driver and side-by-side spectrum comparison.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from analysis.metrics import eq_dist_stat, sup_error
from analysis.sweep import SWEEP_COLUMNS, SweepConfig, compare_spectra, expand_schemes, run_sweep, scheme_spectrum
from matrices.circulant import build_row, circulant_eigs
from matrices.toeplitz import build_toeplitz, exact_eigs
from models.errors import ValidationError
from symbols.sequences import make_symbol


@pytest.fixture
def triangular():
    return make_symbol("triangular", {"W": 0.25})


def test_expand_schemes():
    assert expand_schemes(["all"]) == ["cesaro", "fourier", "strang"]
    assert expand_schemes(["strang", "cesaro", "strang"]) == ["cesaro", "strang"]
    with pytest.raises(ValidationError):
        expand_schemes(["exact"])
    with pytest.raises(ValidationError):
        expand_schemes([])


@pytest.mark.parametrize("n_values", [(), (64, 64), (128, 64), (0, 8)])
def test_config_rejects_bad_n_lists(triangular, n_values):
    seq, sym = triangular
    with pytest.raises(ValidationError):
        SweepConfig(seq=seq, n_values=n_values, schemes=("all",), sym=sym)


def test_config_caps_exact_sweeps(triangular):
    seq, sym = triangular
    with pytest.raises(ValidationError, match="capped"):
        SweepConfig(seq=seq, n_values=(1024, 4096), schemes=("cesaro",), sym=sym)
    # without the oracle there is no cap
    SweepConfig(seq=seq, n_values=(1024, 4096), schemes=("cesaro",), sym=sym, include_exact=False)


def test_config_without_exact_needs_a_symbol(triangular):
    seq, _ = triangular
    with pytest.raises(ValidationError, match="symbol"):
        SweepConfig(seq=seq, n_values=(16,), schemes=("cesaro",), include_exact=False)


def test_sweep_rows_are_ordered_and_consistent(triangular):
    seq, sym = triangular
    config = SweepConfig(seq=seq, n_values=(16, 32, 64), schemes=("strang", "all"), sym=sym, workers=3)
    rows = run_sweep(config)

    assert [(row["N"], row["scheme"]) for row in rows] == [
        (N, scheme) for N in (16, 32, 64) for scheme in ("cesaro", "fourier", "strang")
    ]
    assert all(list(row) == SWEEP_COLUMNS for row in rows)

    for row in rows:
        exact = exact_eigs(build_toeplitz(seq, row["N"]))
        approx = circulant_eigs(build_row(seq, row["N"], row["scheme"]))
        assert row["sup_error"] == sup_error(exact, approx)
        assert abs(row["eq_dist_identity"] - eq_dist_stat(exact, approx)) < 1e-14
        assert max(row["max_eig_error"], row["min_eig_error"]) <= row["sup_error"]


def test_sweep_is_deterministic_across_worker_counts(triangular):
    seq, sym = triangular
    serial = run_sweep(SweepConfig(seq=seq, n_values=(8, 24, 40), schemes=("all",), sym=sym, workers=1))
    parallel = run_sweep(SweepConfig(seq=seq, n_values=(8, 24, 40), schemes=("all",), sym=sym, workers=4))
    assert serial == parallel


def test_sweep_without_exact(triangular):
    seq, sym = triangular
    rows = run_sweep(SweepConfig(seq=seq, n_values=(64,), schemes=("cesaro",), sym=sym, include_exact=False))
    (row,) = rows
    assert row["sup_error"] is None and row["eq_dist_identity"] is None
    spectrum = circulant_eigs(build_row(seq, 64, "cesaro"))
    assert row["max_eig_error"] == pytest.approx(1.0 - spectrum.lambda_max)
    assert row["min_eig_error"] == pytest.approx(spectrum.lambda_min)


def test_scheme_spectrum_exact_cap(triangular):
    seq, _ = triangular
    with pytest.raises(ValidationError, match="refused"):
        scheme_spectrum(seq, 5000, "exact")


def test_compare_spectra(triangular):
    seq, _ = triangular
    header, rows = compare_spectra(seq, 8, ["all"])
    assert header == ["l", "exact", "cesaro", "fourier", "strang"]
    assert [row[0] for row in rows] == list(range(8))
    exact_column = np.array([row[1] for row in rows])
    assert np.all(np.diff(exact_column) <= 0)

    header, rows = compare_spectra(seq, 8, ["fourier"], include_exact=False)
    assert header == ["l", "fourier"]

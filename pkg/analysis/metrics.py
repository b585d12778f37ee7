"""Eigenvalue comparison diagnostics

Sup error after descending alignment, equal-distribution statistics,
empirical and symbol CDFs, extreme-eigenvalue gaps and a condition-number
estimate. These are single-N diagnostics; convergence thresholds belong to
the callers.
"""

from dataclasses import dataclass, field
import logging

import numpy as np

from config import CDF_GRID
from matrices.circulant import build_row, cesaro_row, circulant_eigs, frobenius_gap
from matrices.toeplitz import Spectrum
from models.errors import DomainError, LengthError, NotPositiveDefiniteError, NumericalError, ValidationError
from symbols.sequences import HermitianSequence, SymbolSpec

logger = logging.getLogger(__name__)


# ============================================================================
# TYPES
# ============================================================================

@dataclass(frozen=True)
class TestFunction:
    """
    Test function applied to eigenvalues in the equal-distribution statistic.

    Tags: identity, log, power (uses ``p``), custom-table (piecewise-linear
    through ``table`` = (x, y) with x increasing).
    """
    __test__ = False  # keep pytest from collecting this class

    tag: str = "identity"
    p: float = 1.0
    table: tuple[tuple[float, ...], tuple[float, ...]] | None = None

    def __post_init__(self):
        if self.tag not in ("identity", "log", "power", "custom-table"):
            raise ValidationError(f"Unknown test function: {self.tag}")
        if self.tag == "custom-table":
            if self.table is None or len(self.table[0]) != len(self.table[1]) or len(self.table[0]) < 2:
                raise ValidationError("custom-table needs (x, y) tables of equal length >= 2")
            if np.any(np.diff(self.table[0]) <= 0):
                raise ValidationError("custom-table x values must be strictly increasing")

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.tag == "identity":
            return x
        if self.tag == "log":
            if np.any(x <= 0):
                raise DomainError("log test function needs strictly positive eigenvalues")
            return np.log(x)
        if self.tag == "power":
            return np.power(x, self.p)
        xs, ys = self.table
        return np.interp(x, xs, ys)


@dataclass(frozen=True)
class CdfCurve:
    """
    Right-continuous step CDF: F(alpha) = values[i] for alpha in [breaks[i], breaks[i+1]),
    0 below breaks[0] and 1 from breaks[-1] on.
    """
    breaks: np.ndarray
    values: np.ndarray

    @classmethod
    def from_samples(cls, samples) -> "CdfCurve":
        samples = np.sort(np.asarray(samples, dtype=float))
        breaks, counts = np.unique(samples, return_counts=True)
        return cls(breaks=breaks, values=np.cumsum(counts) / samples.size)

    def __call__(self, alpha):
        idx = np.searchsorted(self.breaks, np.asarray(alpha, dtype=float), side="right") - 1
        out = np.where(idx >= 0, self.values[np.clip(idx, 0, None)], 0.0)
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ErrorReport:
    N: int
    scheme: str
    sup_error: float
    per_index_errors: np.ndarray = field(repr=False)
    extreme_errors: tuple[float, float]
    eq_dist_stat: float
    test_function: str = "identity"


# ============================================================================
# ALIGNMENT ERRORS
# ============================================================================

def _descending(u) -> np.ndarray:
    if isinstance(u, Spectrum):
        return u.descending
    u = np.asarray(u, dtype=float)
    return np.sort(u)[::-1]


def _aligned(u, v) -> tuple[np.ndarray, np.ndarray]:
    a, b = _descending(u), _descending(v)
    if a.size != b.size:
        raise LengthError(f"Spectra differ in length: {a.size} vs {b.size}")
    if a.size == 0:
        raise LengthError("Spectra are empty")
    return a, b


def sup_error(u, v) -> float:
    """max_l |u_desc[l] - v_desc[l]|"""
    a, b = _aligned(u, v)
    return float(np.max(np.abs(a - b)))


def extreme_errors(u, v) -> tuple[float, float]:
    """(|lambda_max gap|, |lambda_min gap|)"""
    a, b = _aligned(u, v)
    return float(abs(a[0] - b[0])), float(abs(a[-1] - b[-1]))


def eq_dist_stat(u, v, theta: TestFunction | None = None) -> float:
    """(1/N) sum_l (theta(u_desc[l]) - theta(v_desc[l]))"""
    theta = theta or TestFunction()
    a, b = _aligned(u, v)
    return float(np.mean(theta(a) - theta(b)))


def error_report(exact: Spectrum, approx: Spectrum, scheme: str,
                 theta: TestFunction | None = None) -> ErrorReport:
    """Bundle the comparison of one circulant spectrum against the exact one"""
    theta = theta or TestFunction()
    a, b = _aligned(exact, approx)
    per_index = np.abs(a - b)
    sup = float(per_index.max())

    identity_stat = float(np.mean(a - b))
    if abs(identity_stat) > sup + 1e-12:
        raise NumericalError(
            f"Equal-distribution statistic {identity_stat:.3e} exceeds sup error {sup:.3e}"
        )

    stat = identity_stat if theta.tag == "identity" else eq_dist_stat(a, b, theta)
    return ErrorReport(
        N=a.size,
        scheme=scheme,
        sup_error=sup,
        per_index_errors=per_index,
        extreme_errors=(float(per_index[0]), float(per_index[-1])),
        eq_dist_stat=stat,
        test_function=theta.tag,
    )


# ============================================================================
# DISTRIBUTIONS
# ============================================================================

def symbol_cdf(sym: SymbolSpec, grid: int | None = None) -> CdfCurve:
    """Empirical CDF of the symbol sampled at the grid midpoints (i + 1/2)/grid"""
    grid = CDF_GRID if grid is None else grid
    if grid < 2:
        raise DomainError(f"CDF grid must be >= 2, got {grid}")
    f = (np.arange(grid) + 0.5) / grid
    return CdfCurve.from_samples(sym.eval(f))


def spectrum_cdf(s: Spectrum) -> CdfCurve:
    """Exact step CDF of the eigenvalue multiset"""
    return CdfCurve.from_samples(s.values)


def cdf_distance(a: CdfCurve, b: CdfCurve) -> float:
    """sup_alpha |F_a(alpha) - F_b(alpha)|, attained on the union of breakpoints"""
    points = np.union1d(a.breaks, b.breaks)
    return float(np.max(np.abs(a(points) - b(points))))


def band_occupancy(s: Spectrum, lo: float, hi: float) -> int:
    """Number of eigenvalues strictly inside (lo, hi)"""
    return int(np.count_nonzero((s.values > lo) & (s.values < hi)))


# ============================================================================
# MATRIX-LEVEL DIAGNOSTICS
# ============================================================================

def normalized_frobenius_gap(seq: HermitianSequence, N: int, scheme: str) -> float:
    """||C_N - H_N||_F / sqrt(N); vanishes as N grows when the two sequences are asymptotically equivalent"""
    return frobenius_gap(seq, build_row(seq, N, scheme)) / np.sqrt(N)


def symbol_null_measure(sym: SymbolSpec, grid: int | None = None) -> float:
    """Sampled measure of {f : symbol(f) <= 0}"""
    return symbol_cdf(sym, grid)(0.0)


def condition_estimate(seq: HermitianSequence, N: int, sym: SymbolSpec | None = None) -> float:
    """
    lambda_max / lambda_min of the Cesàro circulant.

    Its spectrum lies inside [lambda_min(H_N), lambda_max(H_N)], so the
    estimate never exceeds the true condition number. When the symbol is
    known and vanishes on a set of positive measure, H_N is numerically
    singular and no finite estimate is meaningful.
    """
    if sym is not None:
        null_measure = symbol_null_measure(sym)
        if null_measure > 0:
            raise NotPositiveDefiniteError(
                f"Symbol is <= 0 on a set of measure ~{null_measure:.3g}; "
                f"H_N is numerically singular"
            )
    spectrum = circulant_eigs(cesaro_row(seq, N))
    if spectrum.lambda_min <= 0:
        raise NotPositiveDefiniteError(
            f"Smallest Cesàro eigenvalue is {spectrum.lambda_min:.3e} at N={N}; "
            "the matrix is not certified positive definite"
        )
    estimate = spectrum.lambda_max / spectrum.lambda_min
    logger.debug(f"Condition estimate at N={N}: {estimate:.6g}")
    return estimate


# ============================================================================
# SORTING PROPERTIES
# ============================================================================

def sorted_alignment_check(u, v) -> bool:
    """True iff sorting both sequences does not enlarge their max elementwise gap"""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise LengthError(f"Sequences differ in length: {u.size} vs {v.size}")
    sorted_gap = np.max(np.abs(np.sort(u) - np.sort(v)))
    unsorted_gap = np.max(np.abs(u - v))
    return bool(sorted_gap <= unsorted_gap)


def sorted_spread_check(u, r: int) -> bool:
    """
    True iff, over offsets 1 <= r' <= r, the largest drop between sorted
    elements r' apart is no larger than the largest |u[l] - u[l+r']|.
    """
    u = np.asarray(u, dtype=float)
    if not (1 <= r <= u.size - 1):
        raise DomainError(f"Offset r must lie in [1, {u.size - 1}], got {r}")
    desc = np.sort(u)[::-1]
    sorted_spread = max(np.max(desc[:-s] - desc[s:]) for s in range(1, r + 1))
    unsorted_spread = max(np.max(np.abs(u[:-s] - u[s:])) for s in range(1, r + 1))
    return bool(sorted_spread <= unsorted_spread)

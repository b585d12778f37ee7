"""Generating sequences h[k], their symbols, and the Fourier-series tools built on them"""

from dataclasses import dataclass, field
from typing import Callable
import logging

import numpy as np

from config import QUADRATURE_GRID
from models.errors import DomainError, ValidationError

logger = logging.getLogger(__name__)

DECAY_CLASSES = ("banded", "absolutely_summable", "square_summable", "unknown")

# rows of the exp(j2πfk) matrix built at once; bounds memory at N=4096
_CHUNK = 512


@dataclass(frozen=True)
class HermitianSequence:
    """
    Coefficients h[k] for k >= 0 with h[-k] = conj(h[k]) implied.

    Either ``coeffs`` holds the finite support (missing k means zero) or
    ``generator`` produces h[k] on demand, so non-banded families only ever
    materialize |k| <= N-1 for the matrix size at hand.
    """
    coeffs: np.ndarray
    decay_class: str = "unknown"
    bandwidth: int | None = None
    generator: Callable[[np.ndarray], np.ndarray] | None = field(default=None, compare=False, repr=False)
    name: str = "custom"

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValidationError("A sequence needs at least h[0]")
        object.__setattr__(self, "coeffs", coeffs)

        if self.decay_class not in DECAY_CLASSES:
            raise ValidationError(
                f"Unknown decay class: {self.decay_class}. Must be one of {DECAY_CLASSES}"
            )
        if self.decay_class == "banded":
            if self.generator is not None:
                raise ValidationError("A banded sequence stores its coefficients explicitly")
            support = np.flatnonzero(coeffs)
            r = int(support[-1]) if support.size else 0
            if self.bandwidth is None:
                object.__setattr__(self, "bandwidth", r)
            elif r > self.bandwidth:
                raise ValidationError(f"h[{r}] is nonzero beyond bandwidth {self.bandwidth}")

        h0 = self.coefficients(1)[0]
        if abs(h0.imag) > 1e-12 * max(1.0, abs(h0.real)):
            raise ValidationError(f"h[0] must be real for a Hermitian symbol, got {h0}")

    def coefficients(self, n: int) -> np.ndarray:
        """h[0..n-1]"""
        if self.generator is not None:
            return np.asarray(self.generator(np.arange(n)), dtype=complex)
        out = np.zeros(n, dtype=complex)
        m = min(n, self.coeffs.size)
        out[:m] = self.coeffs[:m]
        return out

    def at(self, k) -> np.ndarray:
        """h[k] for signed integer k"""
        k = np.asarray(k, dtype=int)
        mag = np.abs(k)
        values = self.coefficients(int(mag.max()) + 1 if mag.size else 1)[mag]
        return np.where(k < 0, np.conj(values), values)

    def two_sided(self, n: int) -> np.ndarray:
        """h[-n..n]"""
        return self.at(np.arange(-n, n + 1))

    def shifted(self, delta: float) -> "HermitianSequence":
        """Same sequence with h[0] += delta, i.e. the symbol moved up by delta"""
        if self.generator is not None:
            base = self.generator

            def generator(k):
                values = np.asarray(base(k), dtype=complex).copy()
                values[np.asarray(k) == 0] += delta
                return values

            return HermitianSequence(
                coeffs=self.coeffs, decay_class=self.decay_class,
                bandwidth=self.bandwidth, generator=generator, name=self.name,
            )
        coeffs = self.coeffs.copy()
        coeffs[0] += delta
        return HermitianSequence(
            coeffs=coeffs, decay_class=self.decay_class,
            bandwidth=self.bandwidth, name=self.name,
        )


@dataclass(frozen=True)
class SymbolSpec:
    """An evaluable symbol on [0,1] with known essential bounds"""
    func: Callable[[np.ndarray], np.ndarray]
    ess_sup: float
    ess_inf: float
    connected_range: bool
    family: str
    params: dict = field(default_factory=dict)

    def eval(self, f):
        values = np.asarray(self.func(np.asarray(f, dtype=float)), dtype=float)
        return float(values) if values.ndim == 0 else values

    def shifted(self, delta: float) -> "SymbolSpec":
        base = self.func
        return SymbolSpec(
            func=lambda f: base(f) + delta,
            ess_sup=self.ess_sup + delta,
            ess_inf=self.ess_inf + delta,
            connected_range=self.connected_range,
            family=self.family,
            params={**self.params, "shift": delta},
        )


@dataclass(frozen=True)
class DirichletEval:
    N: int
    f: float
    value: float


# ============================================================================
# FOURIER SUMS
# ============================================================================

def _check_unit_interval(f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if np.any((f < 0.0) | (f > 1.0)) or np.any(~np.isfinite(f)):
        raise DomainError("Frequencies must lie in [0, 1]")
    return f


def _hermitian_trig_sum(c: np.ndarray, f: np.ndarray) -> np.ndarray:
    """
    sum_{|k|<=n} c[|k|]* e^{j2πfk} with c[-k] = conj(c[k]), c = c[0..n].

    Assembled as c[0] + 2 Re(sum_{k>=1} c[k] e^{j2πfk}); the imaginary part of
    the two-sided sum cancels exactly for Hermitian coefficients.
    """
    flat = f.reshape(-1)
    out = np.full(flat.shape, c[0].real)
    if c.size > 1:
        k = np.arange(1, c.size)
        for start in range(0, flat.size, _CHUNK):
            chunk = flat[start:start + _CHUNK]
            phases = np.exp(2j * np.pi * np.outer(chunk, k))
            out[start:start + _CHUNK] += 2.0 * (phases @ c[1:]).real
    return out.reshape(f.shape)


def _scalar_or_array(values: np.ndarray):
    return float(values) if values.ndim == 0 else values


def partial_fourier_sum(seq: HermitianSequence, n: int, f):
    """S_n(f) = sum_{k=-n}^{n} h[k] e^{j2πfk}"""
    if n < 0:
        raise DomainError(f"Partial sum order must be >= 0, got {n}")
    f = _check_unit_interval(f)
    return _scalar_or_array(_hermitian_trig_sum(seq.coefficients(n + 1), f))


def cesaro_sum(seq: HermitianSequence, N: int, f):
    """
    sigma_N(f) = (1/N) sum_{n=0}^{N-1} S_n(f).

    Evaluated through the equivalent Fejér weighting (1 - |k|/N) h[k].
    """
    if N < 1:
        raise DomainError(f"Cesàro order must be >= 1, got {N}")
    f = _check_unit_interval(f)
    k = np.arange(N)
    weighted = (1.0 - k / N) * seq.coefficients(N)
    return _scalar_or_array(_hermitian_trig_sum(weighted, f))


def symbol_sup_gap(seq: HermitianSequence, sym: SymbolSpec, N: int, scheme: str, grid: int = 4096) -> float:
    """
    max over a midpoint grid of |approximant(f) - symbol(f)|.

    The approximant is the trigonometric polynomial sampled by the scheme's
    circulant eigenvalues: S_{N-1} (fourier), S_{floor((N-1)/2)} (strang), sigma_N (cesaro).
    """
    approximants = {
        "fourier": lambda f: partial_fourier_sum(seq, N - 1, f),
        "strang": lambda f: partial_fourier_sum(seq, (N - 1) // 2, f),
        "cesaro": lambda f: cesaro_sum(seq, N, f),
    }
    if scheme not in approximants:
        raise ValidationError(f"Unknown scheme: {scheme}. Must be one of {sorted(approximants)}")
    f = (np.arange(grid) + 0.5) / grid
    return float(np.max(np.abs(approximants[scheme](f) - sym.eval(f))))


# ============================================================================
# DIRICHLET KERNEL
# ============================================================================

def dirichlet(N: int, f):
    """D_N(f) = sin(πNf)/sin(πf), with D_N(m) = ±N at integers m"""
    if N < 1:
        raise DomainError(f"Dirichlet order must be >= 1, got {N}")
    f = np.asarray(f, dtype=float)
    at_integer = np.mod(f, 1.0) == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.sin(np.pi * N * f) / np.sin(np.pi * f)
    # limit at f = m: N cos(πNm)/cos(πm) = N (-1)^{m(N-1)}
    limit = N * np.where(np.mod(np.rint(f) * (N - 1), 2) == 0, 1.0, -1.0)
    return _scalar_or_array(np.where(at_integer, limit, ratio))


def dirichlet_point(N: int, f: float) -> DirichletEval:
    """D_N at one frequency, packaged with its order"""
    if not np.isfinite(f):
        raise DomainError(f"Dirichlet frequency must be finite, got {f}")
    value = float(dirichlet(N, float(f)))
    # |D_N| <= N up to rounding in sin(πNf)/sin(πf)
    value = float(np.clip(value, -N, N))
    return DirichletEval(N=N, f=float(f), value=value)


def dirichlet_energy(N: int, a: float, b: float, grid: int | None = None) -> float:
    """Composite midpoint rule for ∫_a^b |D_N(f)|^2 df"""
    grid = QUADRATURE_GRID if grid is None else grid
    if not (0.0 <= a < b <= 1.0):
        raise DomainError(f"Need 0 <= a < b <= 1, got a={a}, b={b}")
    if grid < 1:
        raise DomainError(f"Quadrature grid must be positive, got {grid}")
    step = (b - a) / grid
    mids = a + (np.arange(grid) + 0.5) * step
    return float(np.sum(np.square(dirichlet(N, mids))) * step)


# ============================================================================
# BUILT-IN FAMILIES
# ============================================================================

def _check_width(W: float) -> float:
    W = float(W)
    if not (0.0 < W < 0.5):
        raise DomainError(f"Width W must lie in (0, 1/2), got {W}")
    return W


def _off_zero(k: np.ndarray, at_zero: complex, formula: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    out = np.full(k.shape, at_zero, dtype=complex)
    nz = k != 0
    out[nz] = formula(k[nz])
    return out


def _triangular(W: float):
    # normalized so the series is exactly tri(f/W): mean W, unit peak at f=0
    seq = HermitianSequence(
        coeffs=[W], decay_class="absolutely_summable", name="triangular",
        generator=lambda k: _off_zero(k, W, lambda k: (np.sin(np.pi * W * k) / (np.pi * k)) ** 2 / W),
    )

    def tri(f):
        distance = np.minimum(f, 1.0 - f)
        return np.maximum(0.0, 1.0 - distance / W)

    return seq, SymbolSpec(tri, 1.0, 0.0, True, "triangular", {"W": W})


def _sawtooth():
    seq = HermitianSequence(
        coeffs=[0.5], decay_class="square_summable", name="sawtooth",
        generator=lambda k: _off_zero(k, 0.5, lambda k: (1 + (-1.0) ** k) / (2j * np.pi * k)),
    )

    # the coefficients above generate 1 - frac(2f): the falling sawtooth
    def saw(f):
        return 1.0 - np.mod(2.0 * f, 1.0)

    return seq, SymbolSpec(saw, 1.0, 0.0, True, "sawtooth", {})


def _rect_window(W: float):
    seq = HermitianSequence(
        coeffs=[2 * W], decay_class="square_summable", name="rect_window",
        generator=lambda k: _off_zero(k, 2 * W, lambda k: np.sin(2 * np.pi * W * k) / (np.pi * k)),
    )

    def rect(f):
        return np.where((f <= W) | (f > 1.0 - W), 1.0, 0.0)

    return seq, SymbolSpec(rect, 1.0, 0.0, False, "rect_window", {"W": W})


def _banded(coeffs, family: str = "banded"):
    seq = HermitianSequence(coeffs=coeffs, decay_class="banded", name=family)
    r = seq.bandwidth

    def poly(f):
        return _hermitian_trig_sum(seq.coefficients(r + 1), np.asarray(f, dtype=float))

    if r == 0:
        c = float(seq.coeffs[0].real)
        return seq, SymbolSpec(lambda f: np.full(np.shape(f), c), c, c, True, family, {"c": c})

    # a trig polynomial is continuous; its extremes are read off a fine grid
    samples = poly(np.linspace(0.0, 1.0, max(8192, 64 * r) + 1))
    sym = SymbolSpec(poly, float(samples.max()), float(samples.min()), True, family, {"r": r})
    return seq, sym


def make_symbol(family: str, params: dict | None = None) -> tuple[HermitianSequence, SymbolSpec | None]:
    """
    Build a matched (sequence, symbol) pair for a named family.

    Families: triangular(W), sawtooth, rect_window(W), banded(coeffs),
    constant(c), custom(path). ``custom`` returns no symbol.
    """
    params = params or {}
    logger.debug(f"Building symbol family {family} with {params}")

    if family == "triangular":
        return _triangular(_check_width(params.get("W", 0.25)))
    if family == "sawtooth":
        return _sawtooth()
    if family == "rect_window":
        return _rect_window(_check_width(params.get("W", 0.25)))
    if family == "banded":
        if "coeffs" not in params:
            raise ValidationError("banded family needs a 'coeffs' list")
        return _banded(params["coeffs"])
    if family == "constant":
        return _banded([params.get("c", 1.0)], family="constant")
    if family == "custom":
        # Import here to avoid circular dependency
        from symbols.coeff_file import read_coeff_file
        if "path" not in params:
            raise ValidationError("custom family needs a coefficient file 'path'")
        return read_coeff_file(params["path"]), None

    raise ValidationError(f"Unknown symbol family: {family}")

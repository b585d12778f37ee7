"""Reader and writer for the ``#toeplitz-coeffs v1`` text format

Layout: a header line, then one ``<k> <re> <im>`` line per stored k >= 0,
whitespace separated, k strictly increasing. Missing k means zero.
"""

from pathlib import Path
import logging

import numpy as np

from config import COEFF_FILE_MAX_K
from models.errors import ValidationError
from symbols.sequences import HermitianSequence

logger = logging.getLogger(__name__)

HEADER = "#toeplitz-coeffs v1"


def read_coeff_file(path) -> HermitianSequence:
    """Parse a coefficient file into a sequence of unknown decay class"""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ValidationError(f"Cannot read coefficient file {path}: {e}") from e

    if not lines or lines[0].strip() != HEADER:
        raise ValidationError(f"{path}: first line must be '{HEADER}'")

    entries = {}
    last_k = -1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ValidationError(f"{path}:{lineno}: expected '<k> <re> <im>', got {line!r}")
        try:
            k = int(fields[0])
            value = complex(float(fields[1]), float(fields[2]))
        except ValueError as e:
            raise ValidationError(f"{path}:{lineno}: {e}") from e
        if k < 0:
            raise ValidationError(f"{path}:{lineno}: k must be non-negative, got {k}")
        if k > COEFF_FILE_MAX_K:
            raise ValidationError(f"{path}:{lineno}: k={k} exceeds the supported maximum {COEFF_FILE_MAX_K}")
        if k <= last_k:
            raise ValidationError(f"{path}:{lineno}: k values must be strictly increasing (k={k} after {last_k})")
        if not (np.isfinite(value.real) and np.isfinite(value.imag)):
            raise ValidationError(f"{path}:{lineno}: coefficient is not finite")
        entries[k] = value
        last_k = k

    if not entries:
        raise ValidationError(f"{path}: no coefficients found")

    coeffs = np.zeros(last_k + 1, dtype=complex)
    for k, value in entries.items():
        coeffs[k] = value
    if coeffs[0].imag != 0.0:
        raise ValidationError(f"{path}: h[0] must be real, got {coeffs[0]}")

    logger.info(f"✓ Loaded {len(entries)} coefficients from {path} (support up to k={last_k})")
    return HermitianSequence(coeffs=coeffs, decay_class="unknown", name=path.stem)


def write_coeff_file(path, seq: HermitianSequence, n: int) -> None:
    """Write h[0..n-1]; zero coefficients are omitted except h[0]"""
    coeffs = seq.coefficients(n)
    lines = [HEADER]
    for k, value in enumerate(coeffs):
        if k == 0 or value != 0:
            # repr gives the shortest decimal that round-trips
            lines.append(f"{k} {float(value.real)!r} {float(value.imag)!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    logger.debug(f"Wrote {len(lines) - 1} coefficients to {path}")

"""
Test the #toeplitz-coeffs v1 reader and writer.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from models.errors import ValidationError
from symbols.coeff_file import HEADER, read_coeff_file, write_coeff_file
from symbols.sequences import HermitianSequence, make_symbol


def _write(tmp_path, text, name="seq.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_read_sparse_file(tmp_path):
    """Missing k values are zero"""
    path = _write(tmp_path, f"{HEADER}\n0 2.0 0.0\n3 0.5 -0.25\n")
    seq = read_coeff_file(path)
    assert seq.decay_class == "unknown"
    assert seq.name == "seq"
    np.testing.assert_allclose(seq.coefficients(5), [2, 0, 0, 0.5 - 0.25j, 0])


def test_written_file_reads_back(tmp_path):
    seq, _ = make_symbol("sawtooth")
    path = tmp_path / "saw.txt"
    write_coeff_file(path, seq, 9)

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == HEADER
    # odd k vanish for the sawtooth and are omitted
    assert [line.split()[0] for line in lines[1:]] == ["0", "2", "4", "6", "8"]
    np.testing.assert_array_equal(read_coeff_file(path).coefficients(9), seq.coefficients(9))


def test_h0_always_written(tmp_path):
    path = tmp_path / "zero.txt"
    write_coeff_file(path, HermitianSequence(coeffs=[0.0, 1.0]), 2)
    assert path.read_text(encoding="utf-8").splitlines()[1] == "0 0.0 0.0"


@pytest.mark.parametrize("body,message", [
    ("0 1.0 0.0\n", "first line"),
    (f"{HEADER}\n0 1.0\n", "expected"),
    (f"{HEADER}\n0 1.0 0.0\n2 1.0 0.0\n1 1.0 0.0\n", "strictly increasing"),
    (f"{HEADER}\n0 1.0 0.0\n0 1.0 0.0\n", "strictly increasing"),
    (f"{HEADER}\n0 abc 0.0\n", "seq.txt:2"),
    (f"{HEADER}\n0 1.0 0.0\n1 nan 0.0\n", "not finite"),
    (f"{HEADER}\n0 1.0 0.5\n", "must be real"),
    (f"{HEADER}\n", "no coefficients"),
    (f"{HEADER}\n-1 1.0 0.0\n", "non-negative"),
    (f"{HEADER}\n0 1.0 0.0\n10000000000000 1.0 0.0\n", "exceeds the supported maximum"),
])
def test_malformed_files(tmp_path, body, message):
    path = _write(tmp_path, body)
    with pytest.raises(ValidationError, match=message):
        read_coeff_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(ValidationError, match="Cannot read"):
        read_coeff_file(tmp_path / "absent.txt")


def test_custom_family_has_no_symbol(tmp_path):
    path = _write(tmp_path, f"{HEADER}\n0 2.0 0.0\n1 1.0 0.0\n")
    seq, sym = make_symbol("custom", {"path": path})
    assert sym is None
    np.testing.assert_allclose(seq.coefficients(2), [2, 1])

"""Command-line front end: circulant spectra, N sweeps, condition estimates and Dirichlet checks

All tabular output is CSV (comma separated, LF line endings, header row,
floats in their shortest round-trip form). Logs go to stderr.

Exit codes: 0 success, 2 validation error, 3 numerical-domain error.
"""

from contextlib import contextmanager
import argparse
import csv
import logging
import sys

import numpy as np

from analysis.metrics import condition_estimate
from analysis.sweep import SWEEP_COLUMNS, SweepConfig, compare_spectra, run_sweep, scheme_spectrum
from config import CONDEST_VERIFY_MAX_N, EXACT_MAX_N, LOG_LEVEL, QUADRATURE_GRID, SWEEP_WORKERS
from matrices.circulant import SCHEMES
from matrices.toeplitz import build_toeplitz, exact_eigs
from models.errors import NotPositiveDefiniteError, NumericalError, ValidationError
from symbols.families import families, parse_inline_seq, parse_symbol_arg
from symbols.sequences import dirichlet_energy, dirichlet_point, make_symbol

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


# ============================================================================
# HELPERS
# ============================================================================

def _load_sequence(args):
    """Resolve --symbol / --coeffs / --seq into (sequence, symbol or None)"""
    if args.symbol:
        seq, sym = parse_symbol_arg(args.symbol)
    elif args.coeffs:
        seq, sym = make_symbol("custom", {"path": args.coeffs})
    else:
        seq, sym = parse_inline_seq(args.seq)

    if args.shift:
        seq = seq.shifted(args.shift)
        sym = sym.shifted(args.shift) if sym is not None else None
    return seq, sym


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        raise ValidationError(f"Invalid --n-list {text!r}; expected comma-separated integers") from e


@contextmanager
def _output(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        handle = open(path, "w", newline="", encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot write {path}: {e}") from e
    with handle:
        yield handle


def _csv_value(value):
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return value


def _write_csv(stream, header: list[str], rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_value(value) for value in row])


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_eigs(args) -> int:
    """Descending eigenvalues of one scheme (or the exact oracle)"""
    seq, _ = _load_sequence(args)
    spectrum = scheme_spectrum(seq, args.n, args.scheme, exact_cap=EXACT_MAX_N)
    with _output(args.out) as stream:
        _write_csv(stream, ["l", "lambda_desc"], enumerate(spectrum.descending))
    logger.info(f"✓ {args.scheme} spectrum at N={args.n} written")
    return EXIT_OK


def cmd_sweep(args) -> int:
    """Error metrics versus N for each requested scheme"""
    seq, sym = _load_sequence(args)
    config = SweepConfig(
        seq=seq,
        n_values=_parse_n_list(args.n_list),
        schemes=tuple(args.scheme),
        sym=sym,
        include_exact=not args.no_exact,
        workers=args.workers,
    )
    rows = run_sweep(config)
    with _output(args.out) as stream:
        _write_csv(stream, SWEEP_COLUMNS, ([row[c] for c in SWEEP_COLUMNS] for row in rows))
    return EXIT_OK


def cmd_compare(args) -> int:
    """Sorted spectra of H_N and the circulant schemes side by side"""
    seq, _ = _load_sequence(args)
    header, rows = compare_spectra(seq, args.n, args.scheme, include_exact=not args.no_exact)
    with _output(args.out) as stream:
        _write_csv(stream, header, rows)
    return EXIT_OK


def cmd_condest(args) -> int:
    """Cesàro condition-number estimate, optionally checked against the dense oracle"""
    seq, sym = _load_sequence(args)
    estimate = condition_estimate(seq, args.n, sym=sym)
    lines = [f"condition_estimate: {estimate!r}"]

    if args.verify:
        if args.n > CONDEST_VERIFY_MAX_N:
            logger.warning(f"⚠️ --verify skipped: N={args.n} exceeds {CONDEST_VERIFY_MAX_N}")
        else:
            exact = exact_eigs(build_toeplitz(seq, args.n))
            if exact.lambda_min <= 0:
                raise NotPositiveDefiniteError(
                    f"Oracle check failed: lambda_min(H_N) = {exact.lambda_min:.3e} at N={args.n}; "
                    f"H_N is not positive definite"
                )
            oracle = exact.lambda_max / exact.lambda_min
            lines.append(f"oracle_condition: {oracle!r}")
            lines.append(f"relative_gap: {(oracle - estimate) / oracle!r}")

    with _output(args.out) as stream:
        stream.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_dirichlet(args) -> int:
    """Total and main-lobe energy of |D_N|^2"""
    total = dirichlet_energy(args.n, 0.0, 1.0, grid=args.grid)
    lobe = dirichlet_energy(args.n, 0.0, 1.0 / args.n, grid=args.grid)
    points = [dirichlet_point(args.n, f) for f in args.at]
    with _output(args.out) as stream:
        stream.write(
            f"N: {args.n}\n"
            f"total_energy: {total!r}\n"
            f"main_lobe_energy: {lobe!r}\n"
            f"main_lobe_ratio: {lobe / args.n!r}\n"
        )
        for point in points:
            stream.write(f"D_N({point.f!r}): {point.value!r}\n")
    return EXIT_OK


def cmd_symbols_list(args) -> int:
    """Built-in families"""
    with _output(args.out) as stream:
        _write_csv(stream, ["family", "description"], ((f.name, f.description) for f in families))
    return EXIT_OK


# ============================================================================
# PARSER
# ============================================================================

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--symbol", help="built-in family, e.g. triangular:0.25 or rect_window:0.25")
    source.add_argument("--coeffs", help="coefficient file (#toeplitz-coeffs v1)")
    source.add_argument("--seq", help="inline real coefficients, e.g. h0=2,h1=1")
    parser.add_argument("--shift", type=float, default=0.0, help="add a constant to h[0] (and the symbol)")


def _add_out(parser):
    parser.add_argument("--out", default="-", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toeplitz-eigs",
        description="Fast circulant estimates of Hermitian Toeplitz eigenvalues",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eigs = sub.add_parser("eigs", help="eigenvalues of one circulant scheme or the exact oracle")
    _add_source(eigs)
    eigs.add_argument("--n", type=_positive_int, required=True)
    eigs.add_argument("--scheme", choices=[*SCHEMES, "exact"], default="cesaro")
    _add_out(eigs)
    eigs.set_defaults(func=cmd_eigs)

    sweep = sub.add_parser("sweep", help="error metrics versus N")
    _add_source(sweep)
    sweep.add_argument("--n-list", required=True, help="strictly increasing sizes, e.g. 64,128,256")
    sweep.add_argument("--scheme", choices=[*SCHEMES, "all"], nargs="+", default=["all"])
    sweep.add_argument("--no-exact", action="store_true", help="skip the dense oracle; compare extremes to the symbol bounds")
    sweep.add_argument("--workers", type=_positive_int, default=SWEEP_WORKERS)
    _add_out(sweep)
    sweep.set_defaults(func=cmd_sweep)

    compare = sub.add_parser("compare", help="sorted spectra side by side at one N")
    _add_source(compare)
    compare.add_argument("--n", type=_positive_int, required=True)
    compare.add_argument("--scheme", choices=[*SCHEMES, "all"], nargs="+", default=["all"])
    compare.add_argument("--no-exact", action="store_true")
    _add_out(compare)
    compare.set_defaults(func=cmd_compare)

    condest = sub.add_parser("condest", help="condition-number estimate from the Cesàro spectrum")
    _add_source(condest)
    condest.add_argument("--n", type=_positive_int, required=True)
    condest.add_argument("--verify", action="store_true", help=f"compare with the dense oracle (N <= {CONDEST_VERIFY_MAX_N})")
    _add_out(condest)
    condest.set_defaults(func=cmd_condest)

    kernel = sub.add_parser("dirichlet", help="Dirichlet kernel energy checks")
    kernel.add_argument("--n", type=_positive_int, required=True)
    kernel.add_argument("--grid", type=_positive_int, default=QUADRATURE_GRID)
    kernel.add_argument("--at", type=float, action="append", default=[], metavar="F",
                        help="also print D_N(F); repeatable")
    _add_out(kernel)
    kernel.set_defaults(func=cmd_dirichlet)

    symbols = sub.add_parser("symbols", help="symbol family catalogue")
    symbols_sub = symbols.add_subparsers(dest="symbols_command", required=True)
    listing = symbols_sub.add_parser("list", help="list built-in families")
    _add_out(listing)
    listing.set_defaults(func=cmd_symbols_list)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        level=LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)

    try:
        return args.func(args)
    except ValidationError as e:
        logger.error(f"✗ {e}")
        return EXIT_VALIDATION
    except NumericalError as e:
        logger.error(f"✗ {e}")
        return EXIT_NUMERICAL
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        raise


if __name__ == "__main__":
    sys.exit(main())

"""Named symbol families and the command-line syntax that selects them"""

from dataclasses import dataclass
from typing import Callable
import logging

from models.errors import ValidationError
from symbols.sequences import HermitianSequence, SymbolSpec, make_symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymbolFamily:
    name: str
    parse: Callable[[list[str]], dict]
    description: str


def _no_params(name: str):
    def parse(args: list[str]) -> dict:
        if args:
            raise ValidationError(f"{name} takes no parameters, got {args}")
        return {}
    return parse


def _single_float(name: str, key: str, default: float | None = None):
    def parse(args: list[str]) -> dict:
        if not args:
            if default is None:
                raise ValidationError(f"{name} needs a value: {name}:<{key}>")
            return {key: default}
        if len(args) != 1:
            raise ValidationError(f"{name} takes a single parameter {key}, got {args}")
        return {key: _to_float(args[0], f"{name} {key}")}
    return parse


def _float_list(args: list[str]) -> dict:
    if not args:
        raise ValidationError("banded needs coefficients: banded:<h0>,<h1>,...")
    return {"coeffs": [_to_float(a, "banded coefficient") for a in args]}


def _to_float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError as e:
        raise ValidationError(f"Invalid {what}: {text!r}") from e


# ============================================================================
# FAMILY DEFINITIONS
# ============================================================================

families = [
    SymbolFamily(
        name="triangular",
        parse=_single_float("triangular", "W", default=0.25),
        description="Unit-peak triangle tri(f/W) of half-width W in (0, 1/2); absolutely summable coefficients. Example: triangular:0.25",
    ),
    SymbolFamily(
        name="sawtooth",
        parse=_no_params("sawtooth"),
        description="Sawtooth with range [0,1] and jumps at f=0 and f=1/2; square summable only, connected range. No parameters.",
    ),
    SymbolFamily(
        name="rect_window",
        parse=_single_float("rect_window", "W", default=0.25),
        description="Rectangular window: 1 on |f| <= W, 0 elsewhere; square summable, range {0,1} not connected. Example: rect_window:0.25",
    ),
    SymbolFamily(
        name="banded",
        parse=_float_list,
        description="Trigonometric polynomial from real coefficients h0,h1,...,hr. Example: banded:2,1",
    ),
    SymbolFamily(
        name="constant",
        parse=_single_float("constant", "c"),
        description="Constant symbol c; every circulant scheme reproduces H_N exactly. Example: constant:3",
    ),
]


def get_family_by_name(name: str) -> SymbolFamily | None:
    """Get a family by name"""
    for family in families:
        if family.name == name:
            return family
    return None


def parse_symbol_arg(text: str) -> tuple[HermitianSequence, SymbolSpec]:
    """Parse ``family:p1,p2,...`` into a sequence/symbol pair"""
    name, _, rest = text.partition(":")
    family = get_family_by_name(name.strip())
    if family is None:
        known = ", ".join(f.name for f in families)
        raise ValidationError(f"Unknown symbol family {name!r}. Available: {known}")
    args = [a.strip() for a in rest.split(",") if a.strip()] if rest else []
    return make_symbol(family.name, family.parse(args))


def parse_inline_seq(text: str) -> tuple[HermitianSequence, SymbolSpec]:
    """
    Parse ``h0=2,h1=1,h2=0.5`` into a banded sequence.

    Real coefficients only; complex sequences go through a coefficient file.
    """
    coeffs = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key.startswith("h") or not key[1:].isdigit():
            raise ValidationError(f"Invalid inline coefficient {item!r}; expected h<k>=<value>")
        k = int(key[1:])
        if k in coeffs:
            raise ValidationError(f"Coefficient h{k} given twice")
        coeffs[k] = _to_float(value, f"h{k}")
    if not coeffs:
        raise ValidationError("Inline sequence is empty")
    dense = [coeffs.get(k, 0.0) for k in range(max(coeffs) + 1)]
    return make_symbol("banded", {"coeffs": dense})

"""Scalar modes and conversions.

Every geometric routine in this package runs in one of two arithmetic modes:

* EXACT: coordinates are ``fractions.Fraction`` (or int) and every comparison
  is exact.  Nothing is ever rounded.
* FLOAT: coordinates are binary doubles and comparisons use a small relative
  tolerance (1e-9 unless overridden).

Mixed expressions stay honest because ``Fraction`` arithmetic promotes to
float only when a float operand is present, so exact constants such as
``Fraction(d + 2, d)`` can be used in code shared by both modes.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, float, Fraction]

DEFAULT_FLOAT_TOL = 1e-9


class ScalarMode(enum.Enum):
    """Arithmetic regime for a computation."""

    FLOAT = "float"
    EXACT = "exact"

    @classmethod
    def from_str(cls, text: str) -> "ScalarMode":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown scalar mode {text!r}; expected 'float' or 'exact'") from None


def default_tol(mode: ScalarMode) -> Scalar:
    """Zero in exact mode, the package-wide float tolerance otherwise."""
    return 0 if mode is ScalarMode.EXACT else DEFAULT_FLOAT_TOL


def is_exact_value(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def infer_mode(values: Iterable[Scalar]) -> ScalarMode:
    """EXACT when every value is an int or Fraction, FLOAT otherwise."""
    return ScalarMode.EXACT if all(is_exact_value(v) for v in values) else ScalarMode.FLOAT


def coerce_scalar(x: Scalar, mode: ScalarMode) -> Scalar:
    """Convert a number to the representation of ``mode``.

    Floats fed to EXACT mode are taken at their exact binary value; callers
    that want decimal semantics should pass strings through parse_scalar.
    """
    if mode is ScalarMode.EXACT:
        if isinstance(x, Fraction):
            return x
        return Fraction(x)
    return float(x)


def parse_scalar(text: str, mode: ScalarMode) -> Scalar:
    """Parse 'p/q', integer, or decimal notation in the requested mode."""
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}: {exc}") from None
    return value if mode is ScalarMode.EXACT else float(value)


def scalar_to_str(x: Scalar) -> str:
    """Lossless text form: 'p/q' for rationals, 17 significant digits for floats."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return str(x)
    return format(float(x), ".17g")


def coerce_point(coords: Sequence[Scalar], mode: ScalarMode) -> tuple:
    return tuple(coerce_scalar(v, mode) for v in coords)


def rel_close(a: Scalar, b: Scalar, tol: Scalar) -> bool:
    """|a - b| <= tol * max(1, |a|, |b|); exact equality when tol == 0."""
    diff = a - b
    if diff < 0:
        diff = -diff
    if tol == 0:
        return diff == 0
    scale = max(1, abs(a), abs(b))
    return diff <= tol * scale

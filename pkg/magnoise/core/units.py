"""Unit-suffixed quantity parsing for CLI flags and config files.

Scales are exact powers of ten applied in decimal arithmetic, so
``parse_quantity(format_quantity(x, unit))`` returns ``x`` bit-for-bit.
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation, localcontext
from typing import Literal

from .errors import ConfigError

Kind = Literal[
    "length",
    "frequency",
    "temperature",
    "field",
    "conductivity",
    "gyromagnetic",
    "electric",
    "angle",
    "scalar",
]

UNIT_SCALES: dict[Kind, dict[str, str]] = {
    "length": {"nm": "1e-9", "um": "1e-6", "μm": "1e-6", "mm": "1e-3", "cm": "1e-2", "m": "1"},
    "frequency": {"Hz": "1", "kHz": "1e3", "MHz": "1e6", "GHz": "1e9"},
    "temperature": {"K": "1", "mK": "1e-3"},
    "field": {"T": "1", "mT": "1e-3"},
    "conductivity": {"S/m": "1"},
    "gyromagnetic": {"Hz/T": "1", "kHz/T": "1e3", "MHz/T": "1e6", "GHz/T": "1e9"},
    "electric": {"V/m": "1", "V/cm": "1e2", "kV/cm": "1e5"},
    "angle": {"rad": "1"},
    "scalar": {},
}

_QUANTITY_RE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([^\s\d].*)?\s*$")


def parse_quantity(text: str, kind: Kind, key: str | None = None) -> float:
    """Parse a number with an optional unit suffix into SI.

    Args:
        text: e.g. "1cm", "100 Hz", "4e6", "50nm"
        kind: Which unit table applies
        key: Config key, for diagnostics

    Returns:
        Value in SI units (Hz, not rad/s, for frequencies)
    """
    m = _QUANTITY_RE.match(text)
    if not m:
        raise ConfigError(f"cannot parse quantity {text!r}", key=key)
    number, unit = m.group(1), (m.group(2) or "").strip()
    scales = UNIT_SCALES[kind]
    if unit and unit not in scales:
        allowed = ", ".join(scales) or "none"
        raise ConfigError(f"unknown {kind} unit {unit!r} (allowed: {allowed})", key=key)
    scale = scales.get(unit, "1")
    try:
        with localcontext() as ctx:
            ctx.prec = 50
            value = Decimal(number) * Decimal(scale)
    except InvalidOperation as e:
        raise ConfigError(f"invalid number {number!r}", key=key) from e
    return float(value)


def format_quantity(value: float, unit: str, kind: Kind) -> str:
    """Render an SI value in the given unit so it re-parses to the same float."""
    scales = UNIT_SCALES[kind]
    if unit and unit not in scales:
        raise ConfigError(f"unknown {kind} unit {unit!r}")
    with localcontext() as ctx:
        ctx.prec = 50
        scaled = Decimal(repr(float(value))) / Decimal(scales.get(unit, "1"))
    return f"{scaled.normalize():E}{unit}" if abs(scaled.adjusted()) > 6 else (
        f"{scaled.normalize():f}{unit}"
    )

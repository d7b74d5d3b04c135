"""Shared physical model: constants, materials, geometry and spin context."""

from .errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    MagnoiseError,
    QuadratureError,
    ResolutionError,
    StepSizeError,
)
from .model import (
    CONSTANTS,
    MU0,
    Material,
    PhysicalConstants,
    RFField,
    SlabSystem,
    SpinContext,
    skin_depth,
    thermal_occupation_kernel,
)
from .units import format_quantity, parse_quantity

__all__ = [
    "CONSTANTS",
    "MU0",
    "ConfigError",
    "DivergenceError",
    "DomainError",
    "MagnoiseError",
    "Material",
    "PhysicalConstants",
    "QuadratureError",
    "RFField",
    "ResolutionError",
    "SlabSystem",
    "SpinContext",
    "StepSizeError",
    "format_quantity",
    "parse_quantity",
    "skin_depth",
    "thermal_occupation_kernel",
]

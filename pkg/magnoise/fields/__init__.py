"""Boundary-value solution around a slab: coefficients, fields and absorbed power."""

from .coefficients import (
    BesselCoefficients,
    SlabResponse,
    boundary_residual,
    slab_response,
    solve_coefficients,
    source_amplitude,
)
from .hankel import HankelResult, hankel_integral, wynn_epsilon
from .power import DissipatedPower, depth_integrals, dissipated_power
from .reconstruct import FieldSample, dipole_field, reconstruct_fields

__all__ = [
    "BesselCoefficients",
    "DissipatedPower",
    "FieldSample",
    "HankelResult",
    "SlabResponse",
    "boundary_residual",
    "depth_integrals",
    "dipole_field",
    "dissipated_power",
    "hankel_integral",
    "reconstruct_fields",
    "slab_response",
    "solve_coefficients",
    "source_amplitude",
    "wynn_epsilon",
]

"""Magnetic dissipation coefficient Gamma(omega): quadrature, limits, survey."""

from .asymptotic import (
    AsymptoticRegime,
    detect_regime,
    gamma_asymptotic,
    gamma_interpolated,
    transition_parameter,
)
from .integral import (
    DissipationKernel,
    QuadratureConfig,
    gamma_at,
    gamma_integral,
    gamma_two_slab,
)
from .survey import SurveyGrid, SurveyPoint, SurveyReport, preset_grid, survey_design_space

__all__ = [
    "AsymptoticRegime",
    "DissipationKernel",
    "QuadratureConfig",
    "SurveyGrid",
    "SurveyPoint",
    "SurveyReport",
    "detect_regime",
    "gamma_asymptotic",
    "gamma_at",
    "gamma_integral",
    "gamma_interpolated",
    "gamma_two_slab",
    "preset_grid",
    "survey_design_space",
    "transition_parameter",
]

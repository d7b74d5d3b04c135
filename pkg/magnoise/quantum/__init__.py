"""Stieltjes-transform entanglement, renormalization and the discrete bath oracle."""

from .bath import (
    DiscreteBath,
    Oscillator,
    OscillatorSums,
    SpectralWeight,
    anisotropy_tensor,
    bath_memory_kernel_fourier,
    bath_spectral_weights,
    dissipative_weights,
    exact_entanglement_sum,
    exact_oscillator_sums,
    geometry_tensor,
    memory_kernel,
    sample_bath_from_gamma,
)
from .entanglement import (
    EntanglementResult,
    RenormalizationResult,
    angular_factor,
    approximate_entanglement,
    gamma_callable,
    ohmic_approx,
    oscillator_entanglement,
    renormalization,
    spin_entanglement,
    t1_zero_temperature,
)
from .inversion import CouplingSetup, RolloffFit, RolloffParams, entanglement_curve, fit_rolloff
from .kramers_kronig import kramers_kronig
from .oracle import OracleReport, oracle_chain
from .stieltjes import (
    FrequencyKernel,
    StieltjesSpec,
    flat_kernel,
    flat_stieltjes_closed_form,
    stieltjes_transform,
    weighted_integral,
)

__all__ = [
    "CouplingSetup",
    "DiscreteBath",
    "EntanglementResult",
    "FrequencyKernel",
    "Oscillator",
    "OracleReport",
    "OscillatorSums",
    "RenormalizationResult",
    "RolloffFit",
    "RolloffParams",
    "SpectralWeight",
    "StieltjesSpec",
    "angular_factor",
    "anisotropy_tensor",
    "approximate_entanglement",
    "bath_memory_kernel_fourier",
    "bath_spectral_weights",
    "dissipative_weights",
    "entanglement_curve",
    "exact_entanglement_sum",
    "exact_oscillator_sums",
    "fit_rolloff",
    "flat_kernel",
    "flat_stieltjes_closed_form",
    "gamma_callable",
    "geometry_tensor",
    "kramers_kronig",
    "memory_kernel",
    "ohmic_approx",
    "oracle_chain",
    "oscillator_entanglement",
    "renormalization",
    "sample_bath_from_gamma",
    "spin_entanglement",
    "stieltjes_transform",
    "t1_zero_temperature",
    "weighted_integral",
]

"""Configuration constants and numerical defaults for magnoise."""

import os

# Report versioning for determinism tracking
ENGINE_VERSION = "0.1.0"
SCHEMA_VERSION = 1

# Quadrature defaults for the Gamma integral
# Override via MAGNOISE_REL_TOL / MAGNOISE_MAX_SUBDIVISIONS
DEFAULT_REL_TOL = float(os.getenv("MAGNOISE_REL_TOL", "1e-9"))
DEFAULT_ABS_TOL = 0.0
DEFAULT_MAX_SUBDIVISIONS = int(os.getenv("MAGNOISE_MAX_SUBDIVISIONS", "200"))
# Panels of doubling width in u = rho*d; the integrand decays as exp(-2u)
DEFAULT_TAIL_MULTIPLIER = 60.0

# Stieltjes transforms and other 1-D frequency integrals
STIELTJES_REL_TOL = 1e-8

# Margin factor applied to the asymptotic regime inequalities ("much greater than")
REGIME_MARGIN = float(os.getenv("MAGNOISE_REGIME_MARGIN", "10"))

# Bloch integration
ODE_RTOL = float(os.getenv("MAGNOISE_ODE_RTOL", "1e-8"))

# Survey / sweep parallelism (1 = run in-process)
WORKERS = int(os.getenv("MAGNOISE_WORKERS", "1"))

# coth(x) switches to 1/x + x/3 below this argument
COTH_SERIES_CROSSOVER = 1e-6

# Warn thresholds
PERMEABILITY_LOSS_WARN = 0.1  # Im(K)/Re(K)
PERTURBATIVE_WARN = 0.1  # entanglement probability
CUTOFF_RATIO_WARN = 10.0  # omega_c / omega0

# Quoted accuracy envelopes (dB of the Gamma ratio)
INTERP_DB_MAX = 1.75
INTERP_DB_MIN = -0.5
# what the closed form delivers near lambda ~ d, t ~ d/3 once phi > 0
INTERP_DB_MIN_LOSSY = -0.75
TWO_SLAB_DB_MAX = 0.6

# Gyromagnetic ratios, gamma/2pi in Hz/T
GAMMA_HG199_HZ_PER_T = 7.59e6
GAMMA_ELECTRON_HZ_PER_T = 28.0e9
GAMMA_PROTON_HZ_PER_T = 42.58e6
GAMMA_P31_HZ_PER_T = 17.25e6

"""Recover a dissipation kernel from its zero-temperature entanglement curve.

E(w0) is an order-2 Stieltjes transform of w Gamma(w), so a curve of E over
w0 pins Gamma down. For the plateau-rolloff family

    Gamma(w) = gamma0 / (1 + (w / omega_c)^p)

the inversion is a least-squares fit: a coarse scan over (omega_c, p) picks a
start, then ``scipy.optimize.least_squares`` polishes it. gamma0 enters E
linearly and is solved for in closed form at every step.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy import optimize

from ..config import STIELTJES_REL_TOL
from ..core.errors import DomainError
from ..core.model import CONSTANTS, Vector3
from .bath import Geometry
from .entanglement import spin_entanglement
from .stieltjes import FrequencyKernel

logger = logging.getLogger(__name__)

_SCAN_EXPONENTS = (0.5, 1.0, 1.5, 2.0, 3.0)
_FIT_RMS_WARN = 1e-3  # rms of log E residuals


class RolloffParams(BaseModel):
    """Plateau gamma0 below omega_c, falling as w^-p above it."""

    model_config = {"frozen": True}

    gamma0: float = Field(gt=0.0)
    omega_c: float = Field(gt=0.0)
    exponent: float = Field(gt=0.0)

    def kernel(self) -> FrequencyKernel:
        g, wc, p = self.gamma0, self.omega_c, self.exponent

        def func(w: float) -> float:
            if w <= 0.0:
                return g
            s = p * math.log(w / wc)
            return g / (1.0 + math.exp(s)) if s < 700.0 else 0.0

        return FrequencyKernel(
            func=func,
            tail_exponent=-p,
            breakpoints=[wc],
            label=f"rolloff(wc={wc:g}, p={p:g})",
        )


class CouplingSetup(BaseModel):
    """Everything but Gamma that fixes E(w0): spin axis, coupling and units."""

    gamma: float = Field(default=1.0, gt=0.0)
    p_hat: Vector3 = (1.0, 0.0, 0.0)
    n_hat: Vector3 = (0.0, 0.0, 1.0)
    geometry: Geometry = "axis"
    hbar: float = CONSTANTS.hbar
    rel_tol: float = STIELTJES_REL_TOL


class RolloffFit(BaseModel):
    params: RolloffParams
    rms_log_residual: float
    evaluations: int
    success: bool
    warnings: list[str] = Field(default_factory=list)


def entanglement_curve(
    kernel: FrequencyKernel, omega0_grid: Sequence[float], setup: CouplingSetup
) -> np.ndarray:
    """E(w0) for every w0 on the grid."""
    return np.array(
        [
            spin_entanglement(
                setup.p_hat,
                float(w0),
                setup.gamma,
                kernel,
                n_hat=setup.n_hat,
                geometry=setup.geometry,
                hbar=setup.hbar,
                rel_tol=setup.rel_tol,
            ).E
            for w0 in omega0_grid
        ]
    )


def fit_rolloff(
    omega0_grid: Sequence[float],
    E_values: Sequence[float],
    setup: CouplingSetup | None = None,
) -> RolloffFit:
    """Least-squares recovery of (gamma0, omega_c, p) from E sampled over w0.

    Residuals are taken in log E so every decade of w0 weighs the same.

    Raises:
        DomainError: mismatched or too short inputs, or non-positive E
    """
    setup = setup or CouplingSetup()
    grid = np.asarray(omega0_grid, dtype=float)
    data = np.asarray(E_values, dtype=float)
    if grid.ndim != 1 or grid.shape != data.shape:
        raise DomainError("omega0 grid and E values must be 1-D and the same length")
    if grid.size < 4:
        raise DomainError("need at least four samples to fit three parameters")
    if np.any(grid <= 0) or np.any(data <= 0):
        raise DomainError("omega0 and E must be positive to fit in log space")
    log_data = np.log(data)
    evaluations = 0

    def unit_log_curve(log_wc: float, log_p: float) -> np.ndarray:
        nonlocal evaluations
        evaluations += 1
        unit = RolloffParams(gamma0=1.0, omega_c=math.exp(log_wc), exponent=math.exp(log_p))
        return np.log(entanglement_curve(unit.kernel(), grid, setup))

    def residuals(x: np.ndarray) -> np.ndarray:
        shape = unit_log_curve(x[0], x[1])
        # best log gamma0 for this shape
        offset = float(np.mean(log_data - shape))
        return shape + offset - log_data

    starts = [(math.log(wc), math.log(p)) for wc in grid[1:-1:2] for p in _SCAN_EXPONENTS]
    x0 = min(starts, key=lambda x: float(np.sum(residuals(np.asarray(x)) ** 2)))
    logger.debug(
        "rolloff scan: %d starts, best omega_c=%.4g p=%.3g",
        len(starts),
        math.exp(x0[0]),
        math.exp(x0[1]),
    )

    result = optimize.least_squares(residuals, np.asarray(x0), method="trf", xtol=1e-10)
    shape = unit_log_curve(result.x[0], result.x[1])
    gamma0 = math.exp(float(np.mean(log_data - shape)))
    rms = float(np.sqrt(np.mean(result.fun**2)))
    fit = RolloffFit(
        params=RolloffParams(
            gamma0=gamma0, omega_c=math.exp(result.x[0]), exponent=math.exp(result.x[1])
        ),
        rms_log_residual=rms,
        evaluations=evaluations,
        success=bool(result.success),
    )
    if not result.success:
        fit.warnings.append(f"least-squares did not converge: {result.message}")
    if rms > _FIT_RMS_WARN:
        fit.warnings.append(f"rms log residual {rms:.3g}: data may not follow a rolloff")
    logger.info(
        "rolloff fit: gamma0=%.4g omega_c=%.4g p=%.4g rms=%.2g (%d curve evaluations)",
        fit.params.gamma0,
        fit.params.omega_c,
        fit.params.exponent,
        rms,
        evaluations,
    )
    return fit

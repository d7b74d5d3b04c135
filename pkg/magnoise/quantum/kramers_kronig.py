"""Im G(w) from sampled Re G(w) by a principal-value Hilbert transform."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.integrate import simpson
from scipy.interpolate import CubicSpline

from ..core.errors import DomainError, ResolutionError

# Neighbouring samples around omega may differ by at most this fraction of the peak
_MAX_LOCAL_STEP = 0.05


def _check_resolution(grid: np.ndarray, values: np.ndarray, omega: float) -> None:
    peak = float(np.max(np.abs(values)))
    if peak == 0.0:
        return
    i = int(np.clip(np.searchsorted(grid, omega), 1, grid.size - 1))
    lo, hi = max(i - 2, 0), min(i + 2, grid.size - 1)
    steps = np.abs(np.diff(values[lo : hi + 1]))
    if float(np.max(steps)) > _MAX_LOCAL_STEP * peak:
        spacing = float(np.max(np.diff(grid[lo : hi + 1])))
        raise ResolutionError(omega=omega, spacing=spacing)


def kramers_kronig(
    omega_grid: Sequence[float] | np.ndarray,
    re_values: Sequence[float] | np.ndarray,
    omega: float,
) -> float:
    """Im G(w) = (1/pi) P integral Re G(w') / (w - w') dw' over the sampled grid.

    The pole is removed by subtracting Re G(w):

        P integral f(w')/(w - w') = integral [f(w') - f(w)]/(w - w') + f(w) ln((w - a)/(b - w))

    The regular part is integrated with Simpson's rule on the grid, using a cubic
    spline for f(w) and its slope at w' = w.

    Args:
        omega_grid: Increasing sample frequencies [a, b] spanning the support
        re_values: Re G at the samples
        omega: Evaluation frequency strictly inside (a, b)

    Raises:
        DomainError: omega outside the grid, or malformed samples
        ResolutionError: the grid is too coarse around omega
    """
    grid = np.asarray(omega_grid, dtype=float)
    values = np.asarray(re_values, dtype=float)
    if grid.ndim != 1 or grid.shape != values.shape or grid.size < 5:
        raise DomainError("need at least 5 matching samples of Re G")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("frequency grid must be strictly increasing")
    a, b = float(grid[0]), float(grid[-1])
    if not a < omega < b:
        raise DomainError(f"omega={omega} outside the sampled interval ({a}, {b})")
    if not np.any(values):
        return 0.0
    _check_resolution(grid, values, omega)

    spline = CubicSpline(grid, values)
    f0 = float(spline(omega))
    slope = float(spline(omega, 1))
    gap = grid - omega
    close = np.abs(gap) < 1e-9 * max(abs(a), abs(b))
    safe = np.where(close, 1.0, gap)
    # (f(w') - f(w)) / (w - w') -> -f'(w) as w' -> w
    regular = np.where(close, -slope, (values - f0) / (-safe))
    principal = float(simpson(regular, x=grid)) + f0 * math.log((omega - a) / (b - omega))
    return principal / math.pi

"""Design-space survey comparing closed forms against quadrature."""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from ..config import INTERP_DB_MAX, INTERP_DB_MIN, TWO_SLAB_DB_MAX, WORKERS
from ..core.errors import MagnoiseError
from ..core.model import MU0, Material, SlabSystem
from .asymptotic import detect_regime, gamma_interpolated, regime_label
from .integral import QuadratureConfig, gamma_integral, gamma_two_slab

logger = logging.getLogger(__name__)

SurveyMode = Literal["interpolation", "two-slab"]


class SurveyGrid(BaseModel):
    """Cartesian grid over geometry, skin depth and conductivity phase (K = 1)."""

    d_values: list[float]
    t_over_d: list[float]
    lambda_over_d: list[float]
    phi_values: list[float]
    omega: float = 2.0 * math.pi * 1e3
    mode: SurveyMode = "interpolation"

    def points(self) -> list[tuple[float, float, float, float]]:
        """(d, t, lambda, phi) tuples in deterministic grid order."""
        out = []
        for d, tr, lr, phi in itertools.product(
            self.d_values, self.t_over_d, self.lambda_over_d, self.phi_values
        ):
            out.append((d, tr * d, lr * d, phi))
        return out


class SurveyPoint(BaseModel):
    index: int
    d: float
    t: float
    sigma_mag: float
    phi: float
    omega: float
    lam: float
    gamma_quad: float | None = None
    gamma_interp: float | None = None
    gamma_two_slab: float | None = None
    err_db: float | None = None
    regime: str
    error: str | None = None


class SurveyReport(BaseModel):
    mode: SurveyMode
    points: list[SurveyPoint]
    max_db: float | None = None
    min_db: float | None = None
    argmax: int | None = None
    argmin: int | None = None
    failures: int = 0
    outside_envelope: int = 0
    warnings: list[str] = Field(default_factory=list)


def preset_grid(name: str, mode: SurveyMode = "interpolation") -> SurveyGrid:
    """Named survey grids.

    ``full`` spans four distances spaced two decades apart, t/d and lambda/d over
    [1e-3, 1e3] at half-decade steps, and five phases from 0 to pi/2.
    ``smoke`` is a small grid for quick checks.
    """
    if name == "full":
        return SurveyGrid(
            d_values=[1e-3, 1e-1, 1e1, 1e3],
            t_over_d=[float(x) for x in np.logspace(-3, 3, 13)],
            lambda_over_d=[float(x) for x in np.logspace(-3, 3, 13)],
            phi_values=[float(x) for x in np.linspace(0.0, math.pi / 2, 5)],
            mode=mode,
        )
    if name == "smoke":
        return SurveyGrid(
            d_values=[1e-2],
            t_over_d=[1e-2, 1.0, 1e2],
            lambda_over_d=[1e-2, 1.0, 1e2],
            phi_values=[0.0, math.pi / 4],
            mode=mode,
        )
    raise ValueError(f"unknown survey preset: {name}")


def _evaluate(
    args: tuple[int, float, float, float, float, float, SurveyMode, QuadratureConfig],
) -> SurveyPoint:
    index, d, t, lam, phi, omega, mode, cfg = args
    sigma_mag = 1.0 / (omega * MU0 * lam**2)
    material = Material.conductor(sigma_mag, phi=phi)
    slab = SlabSystem(d=d, t=t)
    point = SurveyPoint(
        index=index,
        d=d,
        t=t,
        sigma_mag=sigma_mag,
        phi=phi,
        omega=omega,
        lam=lam,
        regime=regime_label(detect_regime(slab, material, omega)),
    )
    try:
        gamma = gamma_integral(slab, material, omega, cfg).gamma_scalar
        point.gamma_quad = gamma
        if mode == "interpolation":
            other = gamma_interpolated(slab, material, omega).gamma_scalar
            point.gamma_interp = other
            ref = gamma
        else:
            pair = SlabSystem(d=d, t=t, config="two-slab")
            other = gamma_two_slab(pair, material, omega, cfg).gamma_scalar
            point.gamma_two_slab = other
            ref = 2.0 * gamma
    except MagnoiseError as e:
        logger.debug("point %d failed: %s", index, e)
        point.error = str(e)
        return point
    if ref > 0 and other > 0:
        point.err_db = 10.0 * math.log10(other / ref)
    return point


def survey_design_space(
    grid: SurveyGrid,
    cfg: QuadratureConfig | None = None,
    workers: int = WORKERS,
) -> SurveyReport:
    """Run the grid and collect per-point dB errors.

    In "interpolation" mode err_db = 10 log10(Gamma_interp / Gamma_quad); in
    "two-slab" mode err_db = 10 log10(Gamma' / 2 Gamma). Quadrature failures are
    recorded on their point and the survey continues. Output order follows the
    grid regardless of ``workers``.
    """
    cfg = cfg or QuadratureConfig()
    tasks = [
        (i, d, t, lam, phi, grid.omega, grid.mode, cfg)
        for i, (d, t, lam, phi) in enumerate(grid.points())
    ]
    logger.info("Survey %s: %d points, %d workers", grid.mode, len(tasks), workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(_evaluate, tasks, chunksize=16))
    else:
        points = [_evaluate(task) for task in tasks]

    report = SurveyReport(mode=grid.mode, points=points)
    scored = [p for p in points if p.err_db is not None]
    report.failures = sum(1 for p in points if p.error is not None)
    if report.failures:
        report.warnings.append(f"{report.failures} grid points failed to converge")
    skipped = len(points) - len(scored) - report.failures
    if skipped:
        report.warnings.append(f"{skipped} lossless grid points have no dB error")
    if scored:
        hi = max(scored, key=lambda p: p.err_db or 0.0)
        lo = min(scored, key=lambda p: p.err_db or 0.0)
        report.max_db, report.argmax = hi.err_db, hi.index
        report.min_db, report.argmin = lo.err_db, lo.index
        _flag_envelope(report, scored)
    return report


def _flag_envelope(report: SurveyReport, scored: list[SurveyPoint]) -> None:
    """Count and warn about points outside the quoted accuracy envelope."""
    if report.mode == "interpolation":
        lo, hi = INTERP_DB_MIN, INTERP_DB_MAX
    else:
        lo, hi = -TWO_SLAB_DB_MAX, TWO_SLAB_DB_MAX
    outside = [p for p in scored if not lo <= (p.err_db or 0.0) <= hi]
    report.outside_envelope = len(outside)
    if outside:
        regimes = sorted({p.regime for p in outside})
        report.warnings.append(
            f"{len(outside)} grid points outside the quoted {hi:+g}/{lo:+g} dB envelope "
            f"(regimes: {', '.join(regimes)})"
        )
        logger.warning(report.warnings[-1])

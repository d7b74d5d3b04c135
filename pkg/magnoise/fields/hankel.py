"""Numerical Hankel integrals for the field reconstruction.

    H_m[f](r) = integral_0^inf f(rho) J_m(rho r) d rho

The integral is split at the zeros of J_m(rho r); each interval is integrated
adaptively and the alternating partial sums are extrapolated with Wynn's
epsilon algorithm when the integrand has not decayed by the last interval.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import BaseModel
from scipy import integrate, special

from ..core.errors import DomainError

# exp(-DECAY_CUTOFF) is below double-precision relevance for every integrand here
DECAY_CUTOFF = 50.0


class HankelResult(BaseModel):
    value: complex
    abserr: float
    intervals: int
    converged: bool


def wynn_epsilon(partial_sums: Sequence[complex]) -> complex:
    """Limit estimate of a sequence by Wynn's epsilon table (even columns)."""
    cur = [complex(s) for s in partial_sums]
    if not cur:
        return 0j
    prev = [0j] * (len(cur) + 1)
    best = cur[-1]
    col = 0
    while len(cur) > 1:
        nxt = []
        for j in range(len(cur) - 1):
            diff = cur[j + 1] - cur[j]
            if diff == 0:
                return cur[j + 1]
            nxt.append(prev[j + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        col += 1
        if col % 2 == 0:
            best = cur[-1]
    return best


def _quad_complex(
    f: Callable[[float], complex], lo: float, hi: float, rel_tol: float
) -> tuple[complex, float]:
    opts = {"epsabs": 0.0, "epsrel": rel_tol, "limit": 200, "full_output": 1}
    re = integrate.quad(lambda x: f(x).real, lo, hi, **opts)
    im = integrate.quad(lambda x: f(x).imag, lo, hi, **opts)
    return complex(re[0], im[0]), float(re[1] + im[1])


def hankel_integral(
    f: Callable[[float], complex],
    order: int,
    r: float,
    decay_length: float,
    scales: Sequence[float] = (),
    rel_tol: float = 1e-11,
    max_intervals: int = 2000,
) -> HankelResult:
    """Integrate f(rho) J_order(rho r) over rho in (0, inf).

    Args:
        f: Complex spectral amplitude, decaying at least like exp(-rho * decay_length)
        order: Bessel order; negative orders use J_-m = (-1)^m J_m
        r: Radial distance, m (>= 0)
        decay_length: Exponential decay length of f in rho, m (> 0)
        scales: Extra breakpoints in rho where f changes character (1/t, 1/lambda)
        rel_tol: Per-interval relative tolerance
        max_intervals: Bessel-zero intervals before extrapolation takes over

    Returns:
        HankelResult; ``converged`` is False when extrapolation could not
        confirm the tolerance
    """
    if r < 0:
        raise DomainError("radial distance must be >= 0")
    if not decay_length > 0:
        raise DomainError("decay length must be positive")
    sign = (-1.0) ** abs(order) if order < 0 else 1.0
    m = abs(order)
    if r == 0.0 and m > 0:
        return HankelResult(value=0j, abserr=0.0, intervals=0, converged=True)

    rho_max = DECAY_CUTOFF / decay_length
    extra = sorted(s for s in scales if 0.0 < s < rho_max)

    def integrand(rho: float) -> complex:
        return f(rho) * float(special.jv(m, rho * r))

    if r == 0.0:
        zeros = np.empty(0)
    else:
        n_zeros = int(min(max_intervals, math.ceil(rho_max * r / math.pi) + 2))
        zeros = special.jn_zeros(m, n_zeros) / r
    bounded = zeros[zeros < rho_max]
    truncated = bounded.size == zeros.size and zeros.size >= max_intervals
    upper = float(zeros[-1]) if truncated else rho_max
    edges = sorted({0.0, upper, *(float(z) for z in bounded if z <= upper), *extra})
    edges = [e for e in edges if e <= upper]
    zero_set = {float(z) for z in bounded}

    total = 0j
    abserr = 0.0
    partial: list[complex] = []
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        val, err = _quad_complex(integrand, lo, hi, rel_tol)
        total += val
        abserr += err
        if hi in zero_set:
            partial.append(total)

    converged = True
    if truncated and len(partial) >= 7:
        count = min(len(partial), 13)
        tail = partial[-(count - 1 + count % 2) :]
        est_a = wynn_epsilon(tail)
        est_b = wynn_epsilon(tail[:-2])
        spread = abs(est_a - est_b)
        converged = spread <= 10.0 * rel_tol * max(abs(est_a), 1e-300)
        total = est_a
        abserr += spread
    elif truncated:
        converged = False
    return HankelResult(
        value=sign * total, abserr=abserr, intervals=len(edges) - 1, converged=converged
    )

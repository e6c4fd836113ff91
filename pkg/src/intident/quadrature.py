"""Tanh-sinh (double-exponential) quadrature on [0, 1].

Integrands are split as  x**l * (1-x)**s * smooth(x)  with l, s > -1, so
algebraic endpoint singularities are absorbed by the weight and evaluated in
log-space.  The substitution x(u) = (1 + tanh((pi/2) sinh u)) / 2 turns the
trapezoidal rule into a rule whose error decays double-exponentially; halving
the step ("level-doubling") reuses all previous nodes.

Node tables are precomputed once per (level, cutoff) pair and shared
read-only, so concurrent integrations are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

MIN_LEVEL = 3
MAX_LEVEL = 12
DEFAULT_REL_TOL = 1e-12
_MIN_REL_TOL = 1e-14
_LOG_PI_OVER_4 = math.log(math.pi / 4.0)


@dataclass(frozen=True)
class QuadResult:
    """Value, last refinement delta, and number of integrand evaluations."""

    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class WeightedIntegrand:
    """Integrand x**l_exp * (1-x)**s_exp * smooth(x) on [0, 1].

    ``smooth`` must be bounded and continuous on [0, 1] and accept numpy
    arrays (all internal integrands do).  Exponents must exceed -1 so the
    integral converges.
    """

    l_exp: float
    s_exp: float
    smooth: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self):
        if not (self.l_exp > -1.0 and self.s_exp > -1.0):
            raise ValueError(
                f"weight exponents must exceed -1, got l={self.l_exp}, s={self.s_exp}"
            )


class NonConvergence(RuntimeError):
    """Refinement cap reached before two levels agreed to tolerance."""

    def __init__(self, message: str, result: QuadResult):
        super().__init__(message)
        self.result = result


def _cutoff_for(w: float) -> float:
    """Truncation point in u for the slowest-decaying weight exponent w.

    The transformed tail decays like cosh(u) * exp(-2*(1+w)*g(u)) with
    g(u) = (pi/2) sinh(u); for w near -1 the cutoff must grow so the
    discarded tail stays below the noise floor.
    """
    if w >= -0.9:
        return 7.0
    g_needed = max(410.0 / (1.0 + w), 1100.0)
    u = math.asinh(g_needed / (math.pi / 2.0))
    return min(12.0, math.ceil(u * 4.0) / 4.0)


@lru_cache(maxsize=64)
def _node_table(level: int, cutoff: float):
    """Abscissae and log-factors for the nodes new at this level.

    Level MIN_LEVEL holds every multiple of h = 2**-level in [-cutoff,
    cutoff]; deeper levels hold only odd multiples, so summing tables
    MIN_LEVEL..m gives the full trapezoidal node set at step 2**-m.
    Returns (x, log_x, log_1mx, log_jac) as read-only arrays.
    """
    h = 2.0**-level
    n = int(cutoff / h)
    if level == MIN_LEVEL:
        k = np.arange(-n, n + 1, dtype=np.int64)
    else:
        odd = np.arange(1, n + 1, 2, dtype=np.int64)
        k = np.concatenate([-odd[::-1], odd])
    u = k * h

    g = (math.pi / 2.0) * np.sinh(u)
    m = np.abs(g)
    e = np.exp(-2.0 * m)          # in (0, 1]; underflows to 0 for |u| ~ 6+
    lg1pe = np.log1p(e)

    pos = g >= 0.0
    log_x = np.where(pos, -lg1pe, -2.0 * m - lg1pe)
    log_1mx = np.where(pos, -2.0 * m - lg1pe, -lg1pe)
    x = np.where(pos, 1.0 / (1.0 + e), e / (1.0 + e))

    au = np.abs(u)
    log_cosh_u = au + np.log1p(np.exp(-2.0 * au)) - math.log(2.0)
    log_cosh_g = m + lg1pe - math.log(2.0)
    log_jac = _LOG_PI_OVER_4 + log_cosh_u - 2.0 * log_cosh_g

    out = (x, log_x, log_1mx, log_jac)
    for arr in out:
        arr.setflags(write=False)
    return out


def _level_sum(f: WeightedIntegrand, level: int, cutoff: float) -> tuple[float, int]:
    """Sum of weighted integrand values over the nodes new at this level."""
    x, log_x, log_1mx, log_jac = _node_table(level, cutoff)
    log_w = log_jac
    if f.l_exp:
        log_w = log_w + f.l_exp * log_x
    if f.s_exp:
        log_w = log_w + f.s_exp * log_1mx
    with np.errstate(under="ignore"):
        w = np.exp(log_w)
    return float(np.sum(w * f.smooth(x))), x.size


def refinement_values(f: WeightedIntegrand, max_level: int = MAX_LEVEL):
    """Yield (level, trapezoidal value, cumulative evaluations) per level."""
    cutoff = _cutoff_for(min(f.l_exp, f.s_exp, 0.0))
    total = 0.0
    evals = 0
    for level in range(MIN_LEVEL, max_level + 1):
        part, n = _level_sum(f, level, cutoff)
        total += part
        evals += n
        yield level, total * 2.0**-level, evals


def tanh_sinh_integrate(
    f: WeightedIntegrand,
    rel_tol: float = DEFAULT_REL_TOL,
    max_level: int = MAX_LEVEL,
) -> QuadResult:
    """Integrate a weighted integrand over [0, 1] by level-doubling.

    Converges when two successive refinement levels agree to ``rel_tol``;
    raises NonConvergence (carrying the best result) if the level cap is
    reached first.
    """
    if rel_tol < _MIN_REL_TOL:
        raise ValueError(f"rel_tol must be >= {_MIN_REL_TOL}, got {rel_tol}")
    prev = None
    value = 0.0
    err = math.inf
    evals = 0
    for _level, value, evals in refinement_values(f, max_level):
        if prev is not None:
            err = abs(value - prev)
            if err <= rel_tol * max(abs(value), 1e-300):
                return QuadResult(value, err, evals)
        prev = value
    result = QuadResult(value, err, evals)
    raise NonConvergence(
        f"tanh-sinh did not reach rel_tol={rel_tol:g} by level {max_level} "
        f"(value={value:.17g}, error_estimate={err:.3g})",
        result,
    )


def fixed_level_value(f: WeightedIntegrand, level: int) -> float:
    """Trapezoidal value at one fixed refinement level (no convergence test)."""
    if not MIN_LEVEL <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in [{MIN_LEVEL}, {MAX_LEVEL}], got {level}")
    for lv, value, _evals in refinement_values(f, level):
        if lv == level:
            return value
    raise AssertionError("unreachable")


def integrate_01(
    smooth: Callable[[np.ndarray], np.ndarray],
    rel_tol: float = DEFAULT_REL_TOL,
) -> QuadResult:
    """Integrate a smooth (unweighted) function over [0, 1]."""
    return tanh_sinh_integrate(WeightedIntegrand(0.0, 0.0, smooth), rel_tol)

"""Discrete fractional-calculus operators on uniform time grids.

These are verification tools, deliberately independent of the Mittag-Leffler
propagator path: the left Riemann-Liouville integral uses product-trapezoidal
quadrature (piecewise-linear data against exact kernel moments, O(h^2) for
smooth data), the left Caputo derivative uses the classical L1 scheme
(O(h^(2-alpha))), and the right-sided operators are realized through the
time-reversal mirror identities R(op_right) = op_left(R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid 0 = t_0 < ... < t_n = T with n_steps intervals."""

    T: float
    n_steps: int

    def __post_init__(self):
        if not (self.T > 0.0) or not math.isfinite(self.T):
            raise ValueError(f"horizon T must be > 0, got {self.T}")
        if not isinstance(self.n_steps, (int, np.integer)) or self.n_steps < 2:
            raise ValueError(f"n_steps must be an integer >= 2, got {self.n_steps}")

    @property
    def h(self) -> float:
        return self.T / self.n_steps

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, self.T, self.n_steps + 1)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n_steps + 1, self.h)
        w[0] = w[-1] = 0.5 * self.h
        return w


@dataclass
class TimeSeries:
    """Scalar samples on a TimeGrid, one value per node."""

    grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.n_steps + 1,):
            raise ValueError(
                f"values length {self.values.shape} does not match grid "
                f"({self.grid.n_steps + 1} nodes)"
            )


def _check_alpha(alpha: float):
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")


def _same_grid(a: TimeSeries, b: TimeSeries):
    if a.grid != b.grid:
        raise ValueError("time series must share the same grid")


def rl_integral_left(series: TimeSeries, alpha: float) -> TimeSeries:
    """Left Riemann-Liouville integral (1/Gamma(a)) int_0^t (t-s)^(a-1) phi(s) ds.

    Product-trapezoidal scheme: phi is piecewise linear and the kernel moments
    over each step are exact, so linear data is reproduced exactly at alpha=1
    and the scheme is O(h^2) for smooth phi.
    """
    _check_alpha(alpha)
    phi = series.values
    n = series.grid.n_steps
    h = series.grid.h
    m = np.arange(n + 1, dtype=float)
    # A_m = int over one step of the kernel at lags ((m-1)h, mh); B_m likewise for the linear part
    pow_a = m**alpha
    pow_a1 = m ** (alpha + 1.0)
    A = (pow_a[1:] - pow_a[:-1]) * h**alpha / alpha
    B = (pow_a1[1:] - pow_a1[:-1]) * h ** (alpha + 1.0) / (alpha + 1.0)
    ga = math.gamma(alpha)
    dphi = np.diff(phi)
    out = np.zeros(n + 1)
    for i in range(1, n + 1):
        mm = np.arange(i, 0, -1)  # lag index m = i - j for j = 0..i-1
        w0 = A[mm - 1]
        w1 = mm * A[mm - 1] - B[mm - 1] / h
        out[i] = (phi[:i] @ w0 + dphi[:i] @ w1) / ga
    return TimeSeries(grid=series.grid, values=out)


def caputo_left(series: TimeSeries, alpha: float) -> TimeSeries:
    """Left Caputo derivative by the L1 scheme (backward differences at alpha = 1).

    Node i carries sum_j (phi_{j+1} - phi_j) * b_{i-j} with b from exact
    moments of (t_i - s)^(-alpha)/Gamma(1-alpha); node 0 is 0 by convention.
    """
    _check_alpha(alpha)
    phi = series.values
    n = series.grid.n_steps
    h = series.grid.h
    dphi = np.diff(phi)
    out = np.zeros(n + 1)
    if alpha == 1.0:
        out[1:] = dphi / h
        return TimeSeries(grid=series.grid, values=out)
    m = np.arange(n + 1, dtype=float)
    pow_b = m ** (1.0 - alpha)
    b = (pow_b[1:] - pow_b[:-1])  # b_m for lag m = 1..n
    coef = h ** (-alpha) / math.gamma(2.0 - alpha)
    for i in range(1, n + 1):
        out[i] = coef * (dphi[:i] @ b[i - 1 :: -1])
    return TimeSeries(grid=series.grid, values=out)


def time_reverse(series: TimeSeries) -> TimeSeries:
    """Reversal operator R: (R phi)(t) = phi(T - t); an involution on the grid."""
    return TimeSeries(grid=series.grid, values=series.values[::-1].copy())


def _rl_derivative_left(series: TimeSeries, alpha: float) -> TimeSeries:
    """Left RL derivative d/dt I^(1-alpha), as a backward difference of the
    product-trapezoidal integral (node 0 copies node 1's forward difference)."""
    if alpha == 1.0:
        phi = series.values
        h = series.grid.h
        out = np.empty_like(phi)
        out[1:] = np.diff(phi) / h
        out[0] = out[1]
        return TimeSeries(grid=series.grid, values=out)
    integ = rl_integral_left(series, 1.0 - alpha).values
    h = series.grid.h
    out = np.empty_like(integ)
    out[1:] = np.diff(integ) / h
    out[0] = out[1]
    return TimeSeries(grid=series.grid, values=out)


def rl_derivative_right(series: TimeSeries, alpha: float) -> TimeSeries:
    """Right RL derivative -d/dt I_T^(1-alpha), via the mirror identity:
    time-reverse, apply the left RL derivative, time-reverse back."""
    _check_alpha(alpha)
    return time_reverse(_rl_derivative_left(time_reverse(series), alpha))


def rl_integral_right(series: TimeSeries, alpha: float) -> TimeSeries:
    """Right RL integral (1/Gamma(a)) int_t^T (s-t)^(a-1) phi(s) ds via the mirror identity."""
    _check_alpha(alpha)
    return time_reverse(rl_integral_left(time_reverse(series), alpha))


def integration_by_parts_residual(phi1: TimeSeries, phi2: TimeSeries, alpha: float) -> float:
    """Discrete residual of the fractional integration-by-parts identity.

    Assembles | int phi2 * cD^a phi1 - int phi1 * D_T^a phi2
    - [phi1 * I_T^(1-a) phi2]_0^T | with trapezoidal time quadrature over the
    discrete operators; vanishes with grid refinement for smooth data.
    """
    _same_grid(phi1, phi2)
    _check_alpha(alpha)
    grid = phi1.grid
    w = grid.trapezoid_weights()
    lhs = float(w @ (phi2.values * caputo_left(phi1, alpha).values))
    rhs = float(w @ (phi1.values * rl_derivative_right(phi2, alpha).values))
    if alpha == 1.0:
        itail = phi2.values  # I^0 is the identity
    else:
        itail = rl_integral_right(phi2, 1.0 - alpha).values
    boundary = phi1.values[-1] * itail[-1] - phi1.values[0] * itail[0]
    return abs(lhs - rhs - boundary)

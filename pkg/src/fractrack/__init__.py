"""Regional trajectory-tracking optimal control of 1D time-fractional diffusion.

The package solves, at desk scale, the tracking problem for

    D_t^alpha y = a * y_xx + c * y + u   on (0, L) x [0, T]

with Neumann boundary conditions, a Caputo derivative of order alpha in
(0, 1], and a quadratic cost that penalizes the mismatch to a desired
trajectory on a sub-region omega, the terminal mismatch on omega, and the
control energy.  States are expanded in the Neumann cosine eigenbasis,
propagated by Mittag-Leffler modal multipliers with exact kernel-moment
quadrature, and the optimal control is obtained from the adjoint-based
optimality system, either by a damped fixed-point iteration or by a direct
solve of the discrete optimality equations.
"""

from .mittag_leffler import MlParams, MlResult, gamma_fn, ml, ml_conv_moment, ml_info
from .spectral import (
    Region,
    SpectralBasis,
    SpectralField,
    apply_p_omega,
    build_basis,
    project,
    region_gram,
    region_l2_norm,
    synthesize,
)
from .fraccalc import (
    TimeGrid,
    TimeSeries,
    caputo_left,
    integration_by_parts_residual,
    rl_derivative_right,
    rl_integral_left,
    rl_integral_right,
    time_reverse,
)
from .forward import (
    ModalTrajectory,
    PropagatorTable,
    pde_residual,
    propagate_free,
    solve_forward,
    step_control,
    zero_control,
)
from .adjoint import AdjointState, TrackingData, adjoint_step_moments, duality_residual, solve_adjoint
from .optimizer import (
    CostWeights,
    OptimizationReport,
    control_update,
    evaluate_cost,
    gradient_check,
    solve_direct,
    solve_fixed_point,
    variational_residual,
)
from .scenario import TrackingProblem, TrackingScenario, load_scenario, paper_example_scenario, save_scenario

__version__ = "0.1.0"

__all__ = [
    "MlParams",
    "MlResult",
    "gamma_fn",
    "ml",
    "ml_info",
    "ml_conv_moment",
    "SpectralBasis",
    "SpectralField",
    "Region",
    "build_basis",
    "project",
    "synthesize",
    "region_gram",
    "apply_p_omega",
    "region_l2_norm",
    "TimeGrid",
    "TimeSeries",
    "rl_integral_left",
    "rl_integral_right",
    "caputo_left",
    "rl_derivative_right",
    "time_reverse",
    "integration_by_parts_residual",
    "ModalTrajectory",
    "PropagatorTable",
    "propagate_free",
    "solve_forward",
    "pde_residual",
    "zero_control",
    "step_control",
    "TrackingData",
    "AdjointState",
    "solve_adjoint",
    "adjoint_step_moments",
    "duality_residual",
    "CostWeights",
    "OptimizationReport",
    "evaluate_cost",
    "control_update",
    "solve_fixed_point",
    "solve_direct",
    "variational_residual",
    "gradient_check",
    "TrackingScenario",
    "TrackingProblem",
    "load_scenario",
    "save_scenario",
    "paper_example_scenario",
]

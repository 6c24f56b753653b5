"""Cubic trigonometric B-spline collocation solver for the 1D viscous
Burgers equation, with exact reference solutions and benchmark
reproduction tooling."""

from .basis import (
    SchemeCoefficients,
    UniformPartition,
    ctb_deriv,
    ctb_eval,
    ctb_eval_recurrence,
    knot_coefficients,
)
from .exact import (
    SeriesControl,
    SeriesConvergenceError,
    bessel_i,
    bessel_i_ratio,
    sine_wave_exact,
    traveling_wave_exact,
)
from .linalg import BandedSystem, TridiagonalSystem, ZeroPivotError, banded_solve, thomas_solve
from .metrics import ErrorReport, error_norms, table_report
from .problems import exact_solution, sine_problem, traveling_problem
from .scheme import (
    CoefficientVector,
    NodalState,
    ProblemSpec,
    advance,
    assemble_step,
    eliminate_boundary,
    initialize_coefficients,
    nodal_values,
    solve_to_time,
)

__version__ = "0.1.0"

__all__ = [
    "UniformPartition",
    "SchemeCoefficients",
    "ctb_eval",
    "ctb_eval_recurrence",
    "ctb_deriv",
    "knot_coefficients",
    "ProblemSpec",
    "CoefficientVector",
    "NodalState",
    "nodal_values",
    "initialize_coefficients",
    "assemble_step",
    "eliminate_boundary",
    "advance",
    "solve_to_time",
    "TridiagonalSystem",
    "BandedSystem",
    "ZeroPivotError",
    "thomas_solve",
    "banded_solve",
    "SeriesControl",
    "SeriesConvergenceError",
    "bessel_i",
    "bessel_i_ratio",
    "sine_wave_exact",
    "traveling_wave_exact",
    "sine_problem",
    "traveling_problem",
    "exact_solution",
    "ErrorReport",
    "error_norms",
    "table_report",
]

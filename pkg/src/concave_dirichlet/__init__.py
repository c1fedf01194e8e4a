"""Coefficient, distance and Dirichlet-area computations for concave univalent maps."""

from .area import (
    AnalyticMap,
    AreaResult,
    BoundResult,
    SingularParameterError,
    D_of_x,
    E_gamma,
    E_prime,
    M_bound,
    area_green,
    area_grid2d,
    closed_area,
    gamma0,
)
from .concave import (
    BranchCutError,
    ConcaveMapSpec,
    DiscreteCircleMeasure,
    SchwarzSpec,
    boundary_distance,
    coeffs_from_measure,
    extremal_F,
    f_theta,
    hyperbolic_product,
)
from .harness import GridSpec, run_suites
from .hypergeom import (
    UnitModulusParameter,
    coefficient_A,
    coefficient_B,
    hyp2f1_euler,
    hyp2f1_terminating,
    pochhammer,
)
from .report import VerificationReport
from .series import TruncatedSeries, dirichlet_parseval, series_pow_real

__all__ = [name for name in dir() if not name.startswith("_")]

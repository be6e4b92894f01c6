"""tropos: idempotent semiring algebra, dequantization, and tropical geometry.

The package is organized around one abstract semiring interface
(:mod:`tropos.semiring`); matrices, solvers, integrals and interval
arithmetic are each written once against it.  :mod:`tropos.dequant`
carries ordinary arithmetic onto the deformed algebra and back;
:mod:`tropos.tropical` samples amoebas and corner loci at desk scale.
"""

from .semiring import (
    BOOLEAN,
    MAXMIN,
    MAXPLUS,
    MINPLUS,
    NEG_INF,
    NONNEG,
    POS_INF,
    UNITMAXMIN,
    Semiring,
    semiring,
)
from .dequant import add_h, deformation_residual, dequantize_complex, phi_h
from .matrix import (
    ClosureReport,
    SemiringMatrix,
    cycle_mean_eigenvalue,
    mat_add,
    mat_closure,
    mat_mul,
    solve_bellman_gauss_seidel,
    solve_bellman_jacobi,
)
from .analysis import (
    GridFunction,
    integrate,
    kernel_apply,
    legendre_transform,
    measure_integrate,
    pointwise_add,
    pointwise_mul,
    pointwise_scale,
    scalar_product,
)
from .interval import Interval, IntervalSemiring, interval_bellman_solve
from .tropical import (
    ComplexCurveSpec,
    PointCloud,
    TropicalPolynomial,
    amoeba_contains,
    amoeba_sample,
    convergence_experiment,
    corner_locus_sample,
    hausdorff_distance,
    trop_eval,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BOOLEAN",
    "MAXMIN",
    "MAXPLUS",
    "MINPLUS",
    "NEG_INF",
    "NONNEG",
    "POS_INF",
    "UNITMAXMIN",
    "Semiring",
    "semiring",
    "add_h",
    "deformation_residual",
    "dequantize_complex",
    "phi_h",
    "ClosureReport",
    "SemiringMatrix",
    "cycle_mean_eigenvalue",
    "mat_add",
    "mat_closure",
    "mat_mul",
    "solve_bellman_gauss_seidel",
    "solve_bellman_jacobi",
    "GridFunction",
    "integrate",
    "kernel_apply",
    "legendre_transform",
    "measure_integrate",
    "pointwise_add",
    "pointwise_mul",
    "pointwise_scale",
    "scalar_product",
    "Interval",
    "IntervalSemiring",
    "interval_bellman_solve",
    "ComplexCurveSpec",
    "PointCloud",
    "TropicalPolynomial",
    "amoeba_contains",
    "amoeba_sample",
    "convergence_experiment",
    "corner_locus_sample",
    "hausdorff_distance",
    "trop_eval",
    "errors",
    "__version__",
]

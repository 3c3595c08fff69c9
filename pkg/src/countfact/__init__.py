"""Explicit factorizations of the prefix-sum counting matrix, their exact
MaxSE/MeanSE error norms, matching lower bounds, and a seeded simulator of
the Gaussian mechanism built on them."""

from .sequences import (
    CONSTANTS,
    EULER_GAMMA,
    CoefficientTable,
    NamedConstants,
    coefficient_table,
    column_norms_sq,
    inverse_coeffs,
    landau_alpha,
    wallis_coeffs,
)
from .structmat import (
    CirculantSpectrum,
    LowerTriangularToeplitz,
    circulant_extension_spectrum,
    circulant_first_column,
    circulant_sqrt,
    counting_matrix,
    dft,
    ltt_multiply,
    spectrum_to_dense,
)
from .factorizations import (
    DENSE_BUDGET,
    GROUP_ALGEBRA,
    METHODS,
    NSR,
    SQRT,
    Factorization,
    factorize,
    group_algebra_factorization,
    nsr_factorization,
    nsr_row_norms_sq,
    sqrt_factorization,
    verify_reconstruction,
)
from .metrics import (
    MAXSE,
    MEANSE,
    METRICS,
    ErrorReport,
    closed_form_maxse_group_algebra,
    closed_form_maxse_sqrt,
    error_report,
    max_col_norm,
    max_row_norm,
    maxse,
    meanse,
    predicted_residual,
    residual_offset,
)
from .bounds import (
    BoundReport,
    bound_report,
    cosecant_average,
    log_product_average,
    mathias_lower_bound,
    nuclear_lower_bound,
)
from .mechanism import (
    MechanismConfig,
    SimulationResult,
    estimate_errors,
    exact_prefix_sums,
    run_mechanism_once,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "EULER_GAMMA",
    "CoefficientTable",
    "NamedConstants",
    "coefficient_table",
    "column_norms_sq",
    "inverse_coeffs",
    "landau_alpha",
    "wallis_coeffs",
    "CirculantSpectrum",
    "LowerTriangularToeplitz",
    "circulant_extension_spectrum",
    "circulant_first_column",
    "circulant_sqrt",
    "counting_matrix",
    "dft",
    "ltt_multiply",
    "spectrum_to_dense",
    "DENSE_BUDGET",
    "GROUP_ALGEBRA",
    "METHODS",
    "NSR",
    "SQRT",
    "Factorization",
    "factorize",
    "group_algebra_factorization",
    "nsr_factorization",
    "nsr_row_norms_sq",
    "sqrt_factorization",
    "verify_reconstruction",
    "MAXSE",
    "MEANSE",
    "METRICS",
    "ErrorReport",
    "closed_form_maxse_group_algebra",
    "closed_form_maxse_sqrt",
    "error_report",
    "max_col_norm",
    "max_row_norm",
    "maxse",
    "meanse",
    "predicted_residual",
    "residual_offset",
    "BoundReport",
    "bound_report",
    "cosecant_average",
    "log_product_average",
    "mathias_lower_bound",
    "nuclear_lower_bound",
    "MechanismConfig",
    "SimulationResult",
    "estimate_errors",
    "exact_prefix_sums",
    "run_mechanism_once",
]

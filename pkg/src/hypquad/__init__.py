"""hypquad: quadratic transformations of the Gauss hypergeometric function,
machine-checked via Frobenius series and exact rational recurrences."""

from .core import (
    DomainError,
    HypParams,
    InvalidParams,
    SeriesControl,
    SeriesResult,
    gauss_2f1,
    pochhammer,
)
from .frobenius import (
    Branch,
    ClosedFormCase,
    CoeffSeq,
    IndicialRoots,
    OdeSpec,
    PoleInCoefficients,
    ResonantExponent,
    TransformCase,
    closed_form_coeffs,
    indicial_roots,
    ode_from_case,
    ode_residual,
    recurrence_coeffs,
    series_eval,
    series_max_term,
    split_even_odd,
)
from .transforms import (
    ConnectionConstants,
    IdentityReport,
    IllConditioned,
    Sample,
    check_identity,
    fit_connection_constants,
    lhs_eval,
    map_x_to_z,
    map_z_to_x,
    rhs_eval,
    rhs_parameter_sets,
    sample_grid,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ClosedFormCase",
    "CoeffSeq",
    "ConnectionConstants",
    "DomainError",
    "HypParams",
    "IdentityReport",
    "IllConditioned",
    "IndicialRoots",
    "InvalidParams",
    "OdeSpec",
    "PoleInCoefficients",
    "ResonantExponent",
    "Sample",
    "SeriesControl",
    "SeriesResult",
    "TransformCase",
    "check_identity",
    "closed_form_coeffs",
    "fit_connection_constants",
    "gauss_2f1",
    "indicial_roots",
    "lhs_eval",
    "map_x_to_z",
    "map_z_to_x",
    "ode_from_case",
    "ode_residual",
    "pochhammer",
    "recurrence_coeffs",
    "rhs_eval",
    "rhs_parameter_sets",
    "sample_grid",
    "series_eval",
    "series_max_term",
    "split_even_odd",
]

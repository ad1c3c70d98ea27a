"""Calculus for real-analytic functions of a quaternionic variable: a
first-order differential built from the slice decomposition, staircase path
integration with convergence studies, branch-tracked integration of ln, and
a verification suite for the identities these constructions satisfy.
"""

from .differential import (conjugate_quotient, differential,
                           differential_reference, sym_product_sum)
from .errors import (DegenerateSliceError, DomainError, MissingReferenceError,
                     QintError, SliceEscapeError, StepTooCoarseError,
                     UnsupportedFunctionError, ZeroDivisorError)
from .functions import (AnalyticFunction, Monomial, NamedFunction, PowerSeries,
                        Scaled, antiderivative, parse_function)
from .integrate import (IntegrationReport, convergence_study, endpoint_reference,
                        integrate, integrate_slice_quadrature,
                        integrate_with_branch_tracking)
from .paths import Line, Path, PolyLine, SliceCircle, parse_path
from .quaternion import I, J, K, ONE, ZERO, Quaternion
from .slices import (DeltaSplit, EPS_AXIS, SliceForm, SlicePoint, UnitImaginary,
                     decompose_delta, eval_derivative, eval_function,
                     perp_quotient, slice_form, slice_point)
from .suite import catalog_functions, catalog_paths, run_suite
from .verify import (CheckReport, Tolerances, by_parts_residual,
                     inverse_ftc_residual, tolerances_from_env,
                     verify_antiderivative_map, verify_ftc_forward,
                     verify_ftc_inverse, verify_integration_by_parts)

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction", "CheckReport", "DegenerateSliceError", "DeltaSplit",
    "DomainError", "EPS_AXIS", "I", "IntegrationReport", "J", "K", "Line",
    "MissingReferenceError", "Monomial", "NamedFunction", "ONE", "Path",
    "PolyLine", "PowerSeries", "QintError", "Quaternion", "Scaled",
    "SliceCircle", "SliceEscapeError", "SliceForm", "SlicePoint",
    "StepTooCoarseError", "Tolerances", "UnitImaginary",
    "UnsupportedFunctionError", "ZERO", "ZeroDivisorError", "antiderivative",
    "by_parts_residual", "catalog_functions", "catalog_paths",
    "conjugate_quotient", "convergence_study", "decompose_delta",
    "differential", "differential_reference", "endpoint_reference",
    "eval_derivative", "eval_function", "integrate",
    "integrate_slice_quadrature", "integrate_with_branch_tracking",
    "inverse_ftc_residual", "parse_function", "parse_path", "perp_quotient",
    "run_suite", "slice_form", "slice_point", "sym_product_sum",
    "tolerances_from_env", "verify_antiderivative_map", "verify_ftc_forward",
    "verify_ftc_inverse", "verify_integration_by_parts",
]

"""
Core modules for the Pascalian toolkit
ConfigManager는 src.config에 의존하므로 src.core.config_manager에서 직접 import
"""
from .constants import (
    ENUMERATION_CAP,
    SOLVER_DEGREE_CAP,
    SOLVER_MAX_ITERATIONS,
    RESIDUAL_TOL,
    IMAG_TOL,
    VIETA_TOL_PER_DEGREE,
    ANNULUS_TOL,
    BOUNDARY_TOL,
    BOUNDARY_SAMPLES,
)
from .errors import (
    PascalianError,
    DomainError,
    ResourceError,
    RemainderError,
    ZeroPolynomialError,
    NumericError,
)
from .error_handler import ErrorHandler

__all__ = [
    "ErrorHandler",
    "PascalianError",
    "DomainError",
    "ResourceError",
    "RemainderError",
    "ZeroPolynomialError",
    "NumericError",
    # Constants
    "ENUMERATION_CAP",
    "SOLVER_DEGREE_CAP",
    "SOLVER_MAX_ITERATIONS",
    "RESIDUAL_TOL",
    "IMAG_TOL",
    "VIETA_TOL_PER_DEGREE",
    "ANNULUS_TOL",
    "BOUNDARY_TOL",
    "BOUNDARY_SAMPLES",
]

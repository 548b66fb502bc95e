"""
Service modules for the Pascalian toolkit
"""
from .combinatorics_service import CombinatoricsService
from .polynomial_service import PolynomialService
from .curve_service import CurveService
from .root_service import RootService
from .algebra_service import AlgebraService

__all__ = [
    "CombinatoricsService",
    "PolynomialService",
    "CurveService",
    "RootService",
    "AlgebraService",
]

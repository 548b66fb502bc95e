"""
Data models for the Pascalian toolkit
"""
from .combinatorics import Tableau, Walk, PascalianEntry
from .polynomial import IntPoly, RationalPoint, ONE, ONE_PLUS_Z
from .series import SeriesZ
from .roots import RootSet, AnnulusReport, VietaReport
from .curve import CurveSpec, Approximants, GammaReport, ConvergenceReport
from .algebra import FactorizationWitness, ModPCertificate, SquareCriterionReport, ConjectureRow
from .run_config import RunConfig, Tolerances

__all__ = [
    "Tableau",
    "Walk",
    "PascalianEntry",
    "IntPoly",
    "RationalPoint",
    "ONE",
    "ONE_PLUS_Z",
    "SeriesZ",
    "RootSet",
    "AnnulusReport",
    "VietaReport",
    "CurveSpec",
    "Approximants",
    "GammaReport",
    "ConvergenceReport",
    "FactorizationWitness",
    "ModPCertificate",
    "SquareCriterionReport",
    "ConjectureRow",
    "RunConfig",
    "Tolerances",
]

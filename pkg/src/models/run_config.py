"""
Validated run configuration shared by the CLI and the services
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core import constants


class Tolerances(BaseModel):
    """근/곡선 검사에 쓰이는 허용 오차 (모두 양수)"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    residual: float = Field(constants.RESIDUAL_TOL, gt=0)
    imag: float = Field(constants.IMAG_TOL, gt=0)
    vieta_per_degree: float = Field(constants.VIETA_TOL_PER_DEGREE, gt=0)
    annulus: float = Field(constants.ANNULUS_TOL, gt=0)
    boundary: float = Field(constants.BOUNDARY_TOL, gt=0)
    max_iterations: int = Field(constants.SOLVER_MAX_ITERATIONS, ge=1)

    def vieta(self, n: int) -> float:
        return self.vieta_per_degree * max(n, 1)


class RunConfig(BaseModel):
    """CLI 한 번 실행의 전체 설정"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Optional[str] = None
    output_format: Literal["csv", "json", "svg"] = "csv"
    out: Optional[Path] = None
    enumeration_cap: int = Field(constants.ENUMERATION_CAP, ge=1)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    boundary_samples: int = Field(constants.BOUNDARY_SAMPLES, ge=16)
    max_workers: int = Field(constants.MAX_WORKERS, ge=1)
    seed: Optional[int] = None  # 예약됨: 근 계산기는 결정적

    def meta(self) -> dict:
        """JSON 출력의 meta 블록"""
        from .. import __version__

        return {
            "version": __version__,
            "command": self.command,
            "tolerances": self.tolerances.model_dump(),
            "enumeration_cap": self.enumeration_cap,
            "boundary_samples": self.boundary_samples,
        }

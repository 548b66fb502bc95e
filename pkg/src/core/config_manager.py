"""
Config Manager for unified configuration management
constants → config.json → 환경 변수 → CLI 플래그 순서로 설정을 병합
"""
import os
from pathlib import Path
from typing import Dict, Any, Optional

from pydantic import ValidationError

from ..config import get_config_path, get_data_dir, get_log_dir, load_config as _load_config, save_config as _save_config
from ..models.run_config import RunConfig, Tolerances
from .constants import ENV_ENUMERATION_CAP, ENV_TOL_RESIDUAL, ENV_TOL_IMAG
from .errors import DomainError

_TOLERANCE_KEYS = set(Tolerances.model_fields)


class ConfigManager:
    """
    설정 관리를 통합한 클래스
    config.json 읽기/쓰기와 RunConfig 생성을 캡슐화
    """

    def __init__(self):
        """ConfigManager 초기화"""
        self._config: Optional[Dict[str, Any]] = None

    @property
    def data_dir(self) -> Path:
        """사용자 데이터 폴더"""
        return get_data_dir()

    @property
    def config_path(self) -> Path:
        """설정 파일 경로"""
        return get_config_path()

    @property
    def log_dir(self) -> Path:
        """로그 폴더"""
        return get_log_dir()

    def load(self) -> Dict[str, Any]:
        """
        설정을 로드합니다.

        Returns:
            설정 딕셔너리 (복사본)
        """
        if self._config is None:
            self._config = _load_config()
        return dict(self._config)

    def save(self, config: Optional[Dict[str, Any]] = None) -> None:
        """
        설정을 저장합니다.

        Args:
            config: 저장할 설정 (None이면 현재 설정 저장)
        """
        if config is not None:
            self._config = dict(config)
        if self._config is not None:
            _save_config(self._config)

    def get(self, key: str, default: Any = None) -> Any:
        if self._config is None:
            self.load()
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        if self._config is None:
            self.load()
        self._config[key] = value

    def _env_overrides(self) -> Dict[str, Any]:
        """환경 변수에서 읽은 설정 (PASCALIAN_CAP 등)"""
        overrides: Dict[str, Any] = {}
        tolerances: Dict[str, Any] = {}
        raw_cap = os.getenv(ENV_ENUMERATION_CAP)
        if raw_cap:
            try:
                overrides["enumeration_cap"] = int(raw_cap)
            except ValueError:
                raise DomainError(f"{ENV_ENUMERATION_CAP} must be an integer, got {raw_cap!r}") from None
        for env_key, tol_key in ((ENV_TOL_RESIDUAL, "residual"), (ENV_TOL_IMAG, "imag")):
            raw = os.getenv(env_key)
            if raw:
                try:
                    tolerances[tol_key] = float(raw)
                except ValueError:
                    raise DomainError(f"{env_key} must be a number, got {raw!r}") from None
        if tolerances:
            overrides["tolerances"] = tolerances
        return overrides

    def build_run_config(self, **cli_overrides: Any) -> RunConfig:
        """
        모든 설정 원천을 병합해 검증된 RunConfig를 만듭니다.

        Args:
            cli_overrides: CLI 플래그 값 (None인 값은 무시). 허용 오차 키
                (residual, imag, vieta_per_degree, annulus, boundary, max_iterations)는
                tolerances 아래로 들어갑니다.

        Returns:
            RunConfig

        Raises:
            DomainError: 알 수 없는 키이거나 값이 유효하지 않은 경우
        """
        merged: Dict[str, Any] = {}
        tolerances: Dict[str, Any] = {}

        for layer in (self.load(), self._env_overrides(), cli_overrides):
            for key, value in layer.items():
                if value is None:
                    continue
                if key == "tolerances":
                    tolerances.update({k: v for k, v in dict(value).items() if v is not None})
                elif key in _TOLERANCE_KEYS:
                    tolerances[key] = value
                else:
                    merged[key] = value

        if tolerances:
            merged["tolerances"] = tolerances
        try:
            return RunConfig(**merged)
        except ValidationError as e:
            raise DomainError(f"invalid configuration: {e}") from e


# 전역 인스턴스
_default_config_manager: Optional[ConfigManager] = None


def get_default_config_manager() -> ConfigManager:
    """
    전역 ConfigManager 인스턴스를 반환합니다.

    Returns:
        전역 ConfigManager 인스턴스
    """
    global _default_config_manager
    if _default_config_manager is None:
        _default_config_manager = ConfigManager()
    return _default_config_manager


def set_default_config_manager(manager: Optional[ConfigManager]) -> None:
    """
    전역 ConfigManager 인스턴스를 설정합니다 (None이면 다음 호출에서 새로 생성).

    Args:
        manager: ConfigManager 인스턴스
    """
    global _default_config_manager
    _default_config_manager = manager

"""
Configuration management for the Pascalian toolkit
"""
import os
import json
from pathlib import Path
from typing import Any, Dict

import appdirs
from dotenv import load_dotenv

from .core.constants import APP_NAME, APP_AUTHOR, CONFIG_FILE, ENV_CONFIG_DIR

# 프로젝트 루트 (.env 탐색 기준)
application_path = Path(__file__).parent.parent

# .env 파일이 있으면 환경 변수로 로드 (기존 환경 변수는 덮어쓰지 않음)
load_dotenv(application_path / ".env", override=False)


def get_data_dir() -> Path:
    """
    설정/로그를 저장할 사용자 데이터 폴더를 반환합니다.
    PASCALIAN_CONFIG_DIR 환경 변수가 있으면 그 경로를 우선 사용합니다.
    """
    override = os.getenv(ENV_CONFIG_DIR)
    if override:
        return Path(override)
    return Path(appdirs.user_data_dir(APP_NAME, APP_AUTHOR))


def get_config_path() -> Path:
    """config.json 경로"""
    return get_data_dir() / CONFIG_FILE


def get_log_dir() -> Path:
    """에러 로그와 타이밍 로그를 저장할 폴더"""
    override = os.getenv(ENV_CONFIG_DIR)
    if override:
        return Path(override) / "logs"
    return Path(appdirs.user_log_dir(APP_NAME, APP_AUTHOR))


def load_config() -> Dict[str, Any]:
    """config.json에서 설정 로드 (파일이 없거나 깨져 있으면 빈 설정)"""
    config_path = get_config_path()
    if not config_path.exists():
        return {}
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        print(f"✗ Failed to load config from {config_path}: {e}", flush=True)
        return {}
    if not isinstance(config, dict):
        print(f"⚠ Ignoring non-object config in {config_path}", flush=True)
        return {}
    return config


def save_config(config: Dict[str, Any]) -> str:
    """설정을 config.json에 저장하고 저장 경로를 반환"""
    config_path = get_config_path()
    config_path.parent.mkdir(parents=True, exist_ok=True)
    with open(config_path, "w", encoding="utf-8") as f:
        json.dump(config, f, indent=2, ensure_ascii=False, sort_keys=True)
    print(f"✓ Configuration saved to: {config_path}", flush=True)
    return str(config_path)

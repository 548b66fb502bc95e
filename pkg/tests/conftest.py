"""
Shared pytest setup: repository root on sys.path and an isolated config directory
"""
import os
import sys
import tempfile
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

# src.config 를 import 하기 전에 사용자 데이터 폴더를 격리
os.environ["PASCALIAN_CONFIG_DIR"] = tempfile.mkdtemp(prefix="pascalian-tests-")
for _key in ("PASCALIAN_CAP", "PASCALIAN_TOL_RESIDUAL", "PASCALIAN_TOL_IMAG"):
    os.environ.pop(_key, None)


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """테스트 하나 전용 설정 폴더와 새 ConfigManager"""
    from src.core.config_manager import set_default_config_manager

    directory = tmp_path / "pascalian"
    monkeypatch.setenv("PASCALIAN_CONFIG_DIR", str(directory))
    set_default_config_manager(None)
    yield directory
    set_default_config_manager(None)


@pytest.fixture(scope="session")
def root_service():
    from src.services.root_service import RootService

    return RootService()

"""
Verification step timing utilities for the Pascalian toolkit
"""
import time
import json
import threading
from datetime import datetime
from pathlib import Path
from typing import Optional

from ..core.constants import TIMING_LOG_DIR, TIMING_LOG_PREFIX
from .logging import log_error


# 스텝별 타이밍 기록을 위한 전역 변수
_timing_data: dict = {}
_timing_lock = threading.Lock()


def log_step_start(step_name: str) -> float:
    """
    검증 스텝 시작 시간을 기록합니다.

    Args:
        step_name: 스텝 이름 (예: "recursions", "gf", "roots")

    Returns:
        시작 시간 (perf_counter 값)
    """
    start_time = time.perf_counter()
    with _timing_lock:
        _timing_data.setdefault(step_name, []).append({
            "start_time": start_time,
            "started_at": datetime.now().strftime("%Y-%m-%d %H:%M:%S.%f")[:-3],
            "end_time": None,
            "duration_seconds": None,
        })
    return start_time


def log_step_end(step_name: str, start_time: Optional[float] = None) -> float:
    """
    검증 스텝 완료 시간을 기록합니다.

    Args:
        step_name: 스텝 이름
        start_time: 시작 시간 (None이면 가장 최근의 미완료 항목)

    Returns:
        소요 시간 (초)
    """
    end_time = time.perf_counter()
    with _timing_lock:
        entries = _timing_data.get(step_name, [])
        for entry in reversed(entries):
            if entry["end_time"] is None:
                if start_time is None or entry["start_time"] == start_time:
                    entry["end_time"] = end_time
                    entry["duration_seconds"] = end_time - entry["start_time"]
                    return entry["duration_seconds"]
    return 0.0


def get_timing_summary() -> dict:
    """
    스텝별 가장 최근 완료 기록의 요약을 반환합니다.

    Returns:
        {step_name: {"duration_seconds", "started_at", "count"}}
    """
    with _timing_lock:
        summary = {}
        for step_name, entries in _timing_data.items():
            completed = [e for e in entries if e["duration_seconds"] is not None]
            if completed:
                summary[step_name] = {
                    "duration_seconds": completed[-1]["duration_seconds"],
                    "started_at": completed[-1]["started_at"],
                    "count": len(completed),
                }
        return summary


def save_timing_log(log_dir: Optional[Path] = None) -> Optional[Path]:
    """
    타이밍 데이터를 JSON 파일로 저장합니다.

    Args:
        log_dir: 저장 폴더 (None이면 사용자 로그 폴더 아래 logs/)

    Returns:
        저장된 파일 경로 (실패 시 None)
    """
    try:
        if log_dir is None:
            from ..config import get_log_dir
            log_dir = get_log_dir() / TIMING_LOG_DIR
        log_dir.mkdir(parents=True, exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = log_dir / f"{TIMING_LOG_PREFIX}{timestamp}.json"

        with _timing_lock:
            stats = {}
            for step_name, entries in _timing_data.items():
                durations = [e["duration_seconds"] for e in entries if e["duration_seconds"] is not None]
                if durations:
                    stats[step_name] = {
                        "count": len(durations),
                        "total_seconds": sum(durations),
                        "avg_seconds": sum(durations) / len(durations),
                        "min_seconds": min(durations),
                        "max_seconds": max(durations),
                    }
            output_data = {
                "timestamp": datetime.now().isoformat(),
                "steps": {k: list(v) for k, v in _timing_data.items()},
                "statistics": stats,
            }

        with open(log_file, "w", encoding="utf-8") as f:
            json.dump(output_data, f, ensure_ascii=False, indent=2)
        return log_file
    except Exception as e:
        log_error(f"Failed to save timing log: {e}", context="save_timing_log", exception=e)
        return None


def reset_timing() -> None:
    """기록된 타이밍 데이터를 모두 지웁니다."""
    with _timing_lock:
        _timing_data.clear()

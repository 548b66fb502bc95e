"""
Export Service
CSV / JSON 직렬화 (결정적 출력: 유효숫자 15자리, LF 줄바꿈, meta 블록)
"""
import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from ..core.constants import CSV_SIGNIFICANT_DIGITS
from ..models.roots import RootSet


def format_float(value: float) -> str:
    """유효숫자 15자리, '.' 소수점, -0 은 0 으로"""
    return f"{float(value) + 0.0:.{CSV_SIGNIFICANT_DIGITS}g}"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def _json_safe(value: Any) -> Any:
    """NaN/inf 는 null 로, 튜플은 리스트로"""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, complex):
        return [_json_safe(value.real), _json_safe(value.imag)]
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return value


def to_csv(rows: Iterable[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(col)) for col in columns])
    return buffer.getvalue()


def to_json(data: Any, meta: Optional[Dict[str, Any]] = None) -> str:
    payload = {"meta": meta or {}, "data": data}
    return json.dumps(_json_safe(payload), indent=2, ensure_ascii=False) + "\n"


def write_output(text: str, out: Optional[Path]) -> Optional[Path]:
    """out 이 주어지면 파일로 저장하고 경로를 반환 (LF 고정)"""
    if out is None:
        return None
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return out


ROOT_COLUMNS = ("n", "index", "re", "im", "norm", "residual", "class")


def root_rows(rs: RootSet, classes: Sequence[str]) -> List[Dict[str, Any]]:
    """근 하나당 한 행 (CSV 와 JSON 이 같은 열을 씁니다)"""
    return [
        {
            "n": rs.n,
            "index": i,
            "re": z.real,
            "im": z.imag,
            "norm": abs(z),
            "residual": rs.residuals[i],
            "class": classes[i],
        }
        for i, z in enumerate(rs.roots)
    ]

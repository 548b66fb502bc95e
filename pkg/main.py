"""
Pascalian toolkit - Entry Point
"""
import sys
from pathlib import Path

# 현재 디렉토리를 sys.path에 추가
current_dir = Path(__file__).parent
if str(current_dir) not in sys.path:
    sys.path.insert(0, str(current_dir))

try:
    from src.cli.main import app
    if __name__ == "__main__":
        app()
except KeyboardInterrupt:
    print("\nInterrupted by user.", flush=True)
    sys.exit(130)

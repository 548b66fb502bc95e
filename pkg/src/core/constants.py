"""
Constants for the Pascalian toolkit
모든 매직 넘버와 기본 허용 오차를 중앙 집중식으로 관리
"""
import math

# 조합론 열거
ENUMERATION_CAP: int = 14  # 2^14 = 16384 개 객체까지 전수 열거
ENV_ENUMERATION_CAP: str = "PASCALIAN_CAP"

# 근 계산기 (Aberth-Ehrlich)
SOLVER_DEGREE_CAP: int = 512  # C(512,256) ~ 1e152 < float max
SOLVER_MAX_ITERATIONS: int = 200
SEED_CURVE_MIN_DEGREE: int = 8  # 이 차수부터 극한 곡선 근사점으로 초기값 설정
SEED_RADIUS: float = 0.7
SEED_PERTURBATION: float = 0.01
SEED_PERTURBATION_PHASE: float = 0.7
SEED_ANGLE_OFFSET: float = 0.4

# 다중 정밀도 다듬기 (mpmath). 근 근처에서 |P_n| 은 계수 규모의 약 2^(-n/2) 배라
# 작업 자릿수를 n 에 비례해 늘립니다.
REFINE_GUARD_DIGITS: int = 25
REFINE_DIGITS_PER_DEGREE: float = 0.16
REFINE_STEP_BITS: int = 70  # 상대 보정이 2^-70 이하이면 그 근은 고정

# 허용 오차
RESIDUAL_TOL: float = 1e-10
IMAG_TOL: float = 1e-8
VIETA_TOL_PER_DEGREE: float = 1e-6
ANNULUS_TOL: float = 1e-9
BOUNDARY_TOL: float = 1e-9
CURVE_IDENTITY_TOL: float = 1e-12
SYMMETRY_TOL: float = 1e-8

ENV_TOL_RESIDUAL: str = "PASCALIAN_TOL_RESIDUAL"
ENV_TOL_IMAG: str = "PASCALIAN_TOL_IMAG"

# 곡선 샘플링
BOUNDARY_SAMPLES: int = 4096
BISECTION_STEPS: int = 60

# 환형 영역 경계
ANNULUS_INNER: float = math.sqrt(2.0) - 1.0
ANNULUS_OUTER: float = 1.0
RECIPROCAL_ANNULUS_OUTER: float = 1.0 + math.sqrt(2.0)
LIMIT_K: float = 0.5
LIMIT_DISK_RADIUS: float = math.sqrt(2.0)

# 모듈러 인증서
DEFAULT_SCAN_PRIMES: tuple = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# 병렬 처리
MAX_WORKERS: int = 4

# 출력
CSV_SIGNIFICANT_DIGITS: int = 15
SVG_SIZE_INCHES: float = 8.0
SVG_DPI: int = 100  # 8in * 100dpi = 800px 고정 뷰포트

# 파일/디렉토리 이름
APP_NAME: str = "pascalian"
APP_AUTHOR: str = "pascalian"
CONFIG_FILE: str = "config.json"
ERROR_LOG_FILE: str = "error_log.txt"
TIMING_LOG_DIR: str = "logs"
TIMING_LOG_PREFIX: str = "verification_timing_"
ENV_CONFIG_DIR: str = "PASCALIAN_CONFIG_DIR"

# 검증 스위트 이름
SUITE_RECURSIONS: str = "recursions"
SUITE_GF: str = "gf"
SUITE_FACTOR: str = "factor"
SUITE_GCD: str = "gcd"
SUITE_ROOTS: str = "roots"
SUITE_ALGEBRA: str = "algebra"
SUITE_ALL: str = "all"
SUITE_NAMES: tuple = (SUITE_RECURSIONS, SUITE_GF, SUITE_FACTOR, SUITE_GCD, SUITE_ROOTS, SUITE_ALGEBRA)

# 근 분류 레이블
ROOT_CLASS_TRIVIAL: str = "trivial"
ROOT_CLASS_REAL: str = "real"
ROOT_CLASS_IMAGINARY: str = "imaginary"
ROOT_CLASS_GENERIC: str = "generic"

# 확장 점화식은 모든 k 에 대해 검사하므로 비용이 n^3 으로 늘어남
EXTENDED_RECURSION_N_MAX: int = 40

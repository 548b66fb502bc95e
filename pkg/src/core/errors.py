"""
Exception types shared by every Pascalian service
"""
from typing import Any, Optional, Sequence


class PascalianError(Exception):
    """모든 도메인 예외의 기반 클래스"""


class DomainError(PascalianError, ValueError):
    """인자가 연산의 정의역을 벗어난 경우 (k 범위, 홀짝, 소수 조건 등)"""


class ResourceError(PascalianError):
    """열거 상한 또는 근 계산기 차수 상한을 초과한 경우"""

    def __init__(self, message: str, requested: int, cap: int):
        super().__init__(message)
        self.requested = requested
        self.cap = cap


class RemainderError(PascalianError, ArithmeticError):
    """정확한 나눗셈이 0이 아닌 나머지를 남긴 경우"""

    def __init__(self, message: str, remainder: Sequence[Any]):
        super().__init__(message)
        self.remainder = tuple(remainder)


class ZeroPolynomialError(PascalianError, ZeroDivisionError):
    """영 다항식으로 나누려는 경우"""


class NumericError(PascalianError, ArithmeticError):
    """근 계산기가 최대 반복 안에 수렴하지 못한 경우"""

    def __init__(self, message: str, worst_residual: float, iterations: int, n: Optional[int] = None):
        super().__init__(message)
        self.worst_residual = worst_residual
        self.iterations = iterations
        self.n = n

"""
Witnesses and certificates produced by the exact algebra checks
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .polynomial import IntPoly


@dataclass(frozen=True)
class FactorizationWitness:
    """홀수 n에 대해 P_n(z) = (1+z)·q_n(z^2) 를 확인한 증거"""
    n: int
    linear: IntPoly
    even_part: IntPoly
    checked: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "linear": self.linear.to_list(),
            "even_part": self.even_part.to_list(),
            "checked": self.checked,
        }


@dataclass(frozen=True)
class ModPCertificate:
    """F_p 위 기약성 판정. irreducible_mod_p가 참이면 유리수체 위에서도 기약"""
    p: int
    target: str
    degree: int
    irreducible_mod_p: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "target": self.target,
            "degree": self.degree,
            "irreducible_mod_p": self.irreducible_mod_p,
        }


@dataclass(frozen=True)
class SquareCriterionReport:
    """
    q(z^2) 기약성 판정 보고. reducibility_excluded는 q_n 자체의 기약성을 가정한 결론입니다.
    짝수 n의 P_n 계수 쌍은 그 가정 밖의 참고 정보로만 기록합니다.
    """
    n: int
    constant: int
    leading: int
    constant_is_square: bool
    leading_is_square: bool
    reducibility_excluded: bool
    note: str
    p_constant_is_square: Optional[bool] = None
    p_leading_is_square: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "constant": self.constant,
            "leading": self.leading,
            "constant_is_square": self.constant_is_square,
            "leading_is_square": self.leading_is_square,
            "reducibility_excluded": self.reducibility_excluded,
            "note": self.note,
            "p_constant_is_square": self.p_constant_is_square,
            "p_leading_is_square": self.p_leading_is_square,
        }


@dataclass(frozen=True)
class ConjectureRow:
    """짝수 n 하나에 대한 기약성 인증 결과 (certifying_prime이 None이면 인증서 없음)"""
    n: int
    certifying_prime: Optional[int]
    primes_tried: Tuple[int, ...]

    @property
    def certified(self) -> bool:
        return self.certifying_prime is not None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "certifying_prime": self.certifying_prime,
            "primes_tried": list(self.primes_tried),
        }

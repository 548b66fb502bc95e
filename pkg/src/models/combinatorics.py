"""
Two-row standard domino tableaux, diagonal lattice walks and triangle entries
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from ..core.errors import DomainError


@dataclass(frozen=True)
class Tableau:
    """
    두 줄짜리 표준 도미노 타블로.
    첫 번째 줄에 가로로 놓인 도미노들의 레이블 집합만으로 타블로 전체가 결정되므로
    그 집합(subset)을 정규 인코딩으로 사용합니다. 모양과 부분 타블로 열은 필요할 때 재구성합니다.
    """
    n: int
    subset: FrozenSet[int]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"domino count must be nonnegative, got {self.n}")
        subset = frozenset(self.subset)
        bad = [s for s in subset if not 1 <= s <= self.n]
        if bad:
            raise DomainError(f"labels {sorted(bad)} outside 1..{self.n}")
        object.__setattr__(self, "subset", subset)

    @classmethod
    def of(cls, n: int, labels: Iterable[int]) -> "Tableau":
        return cls(n, frozenset(labels))

    @property
    def sorted_subset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.subset))

    def extend(self, horizontal_in_row1: bool) -> "Tableau":
        """도미노 n+1을 덧붙인 타블로 (가로-첫줄 여부로 위치가 유일하게 결정됨)"""
        labels = self.subset | {self.n + 1} if horizontal_in_row1 else self.subset
        return Tableau(self.n + 1, labels)

    def label(self) -> str:
        return "{" + ",".join(str(s) for s in self.sorted_subset) + "}"


@dataclass(frozen=True)
class Walk:
    """
    오른쪽 대각 격자 보행. steps[0]이 첫 번째 스텝이며 True가 위(+1), False가 아래(-1).
    """
    steps: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(bool(s) for s in self.steps))

    @classmethod
    def from_string(cls, text: str) -> "Walk":
        """'UDDU' 또는 '1001' 형식의 문자열에서 보행을 만듭니다."""
        mapping = {"U": True, "1": True, "D": False, "0": False}
        try:
            return cls(tuple(mapping[c] for c in text.strip().upper()))
        except KeyError as e:
            raise DomainError(f"invalid walk character {e.args[0]!r} in {text!r}") from None

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Walk":
        """비트 i (0부터)가 스텝 i+1의 방향인 정수 마스크에서 보행을 만듭니다."""
        return cls(tuple(bool((mask >> i) & 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def up_count(self) -> int:
        return sum(self.steps)

    def prefix_heights(self) -> Tuple[int, ...]:
        """각 스텝 이후의 높이 (빈 접두사는 제외)"""
        heights = []
        level = 0
        for up in self.steps:
            level += 1 if up else -1
            heights.append(level)
        return tuple(heights)

    def bits(self) -> str:
        return "".join("1" if s else "0" for s in self.steps)

    def __str__(self) -> str:
        return "".join("U" if s else "D" for s in self.steps)


@dataclass(frozen=True)
class PascalianEntry:
    """정렬된 파스칼 삼각형의 (n, k) 항목"""
    n: int
    k: int
    value: int

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "value": self.value}

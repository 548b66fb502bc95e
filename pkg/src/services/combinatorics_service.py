"""
Combinatorics Service
두 줄 표준 도미노 타블로, 대각 격자 보행, 파스칼리안 수와 전단사 φ
"""
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.constants import ENUMERATION_CAP
from ..core.errors import DomainError, ResourceError
from ..models.combinatorics import PascalianEntry, Tableau, Walk


def pascalian_number(n: int, k: int) -> int:
    """
    <n k> = C(n, floor((n-k)/2)).

    Raises:
        DomainError: n < 0 이거나 k가 [0, n] 밖인 경우
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"k must lie in [0, {n}], got {k}")
    return comb(n, (n - k) // 2)


def central_binomial(n: int) -> int:
    """<n 0> = C(n, floor(n/2))"""
    return pascalian_number(n, 0)


def triangle_row(n: int) -> List[int]:
    """정렬된 파스칼 삼각형의 n번째 행 (k = 0..n)"""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return [pascalian_number(n, k) for k in range(n + 1)]


def triangle_entries(n: int) -> List[PascalianEntry]:
    return [PascalianEntry(n, k, v) for k, v in enumerate(triangle_row(n))]


def walk_height(walk: Walk) -> int:
    """접두사 높이의 최댓값 (빈 접두사가 0을 기여하므로 항상 >= 0)"""
    return max((0,) + walk.prefix_heights())


def shape_of(tableau: Tableau) -> Tuple[int, int]:
    """삽입 규칙 재생으로 얻은 최종 모양 (λ1, λ2)"""
    return partial_shapes(tableau)[-1] if tableau.n else (0, 0)


def partial_shapes(tableau: Tableau) -> List[Tuple[int, int]]:
    """
    부분 타블로 T_1..T_n 의 모양.

    도미노 i+1 의 위치는 유일합니다:
      - i+1 이 subset 에 있으면 첫 줄에 가로로,
      - 아니고 두 줄 길이가 같으면 세로로,
      - 아니면 둘째 줄에 가로로.
    """
    shapes = []
    row1 = row2 = 0
    for label in range(1, tableau.n + 1):
        if label in tableau.subset:
            row1 += 2
        elif row1 == row2:
            row1 += 1
            row2 += 1
        else:
            row2 += 2
        shapes.append((row1, row2))
    return shapes


def tableau_rows(tableau: Tableau) -> Tuple[List[int], List[int]]:
    """칸 단위 레이블 배치 (row1, row2)"""
    row1: List[int] = []
    row2: List[int] = []
    for label in range(1, tableau.n + 1):
        if label in tableau.subset:
            row1.extend((label, label))
        elif len(row1) == len(row2):
            row1.append(label)
            row2.append(label)
        else:
            row2.extend((label, label))
    return row1, row2


def phi(tableau: Tableau) -> Walk:
    """φ(T): 스텝 n+1-s 는 s ∈ S_T 일 때 위, 아니면 아래"""
    n = tableau.n
    return Walk(tuple((n + 1 - t) in tableau.subset for t in range(1, n + 1)))


def phi_inverse(walk: Walk) -> Tableau:
    """φ의 역사상: 위 스텝 t 는 레이블 n+1-t 를 첫 줄 가로 도미노로 만듦"""
    n = walk.n
    return Tableau(n, frozenset(n + 1 - t for t, up in enumerate(walk.steps, start=1) if up))


class CombinatoricsService:
    """
    열거 상한을 갖는 조합론 서비스
    상한은 RunConfig.enumeration_cap (PASCALIAN_CAP 환경 변수로 재정의 가능)
    """

    def __init__(self, enumeration_cap: Optional[int] = None):
        self.enumeration_cap = enumeration_cap or ENUMERATION_CAP

    def _check_cap(self, n: int) -> None:
        if n < 0:
            raise DomainError(f"n must be nonnegative, got {n}")
        if n > self.enumeration_cap:
            raise ResourceError(
                f"n={n} exceeds the enumeration cap {self.enumeration_cap} (set PASCALIAN_CAP to raise it)",
                requested=n,
                cap=self.enumeration_cap,
            )

    def enumerate_tableaux(self, n: int) -> List[Tableau]:
        """
        B_n 전체 (2^n 개)를 도미노 덧붙이기로 만들고 subset 사전순으로 정렬해 반환합니다.

        Raises:
            ResourceError: n이 열거 상한을 넘는 경우
        """
        self._check_cap(n)
        level = [Tableau(0, frozenset())]
        for _ in range(n):
            level = [t.extend(flag) for t in level for flag in (False, True)]
        return sorted(level, key=lambda t: t.sorted_subset)

    def enumerate_walks(self, n: int) -> List[Walk]:
        """D_n 전체 (2^n 개), 비트 마스크 순서"""
        self._check_cap(n)
        return [Walk.from_mask(n, mask) for mask in range(1 << n)]

    def height_histogram(self, n: int) -> List[int]:
        """높이 k 인 n-스텝 보행의 개수 (k = 0..n)"""
        histogram = [0] * (n + 1)
        for walk in self.enumerate_walks(n):
            histogram[walk_height(walk)] += 1
        return histogram

    def up_step_histogram(self, n: int) -> List[int]:
        """위 스텝이 k 개인 보행의 개수"""
        histogram = [0] * (n + 1)
        for walk in self.enumerate_walks(n):
            histogram[walk.up_count] += 1
        return histogram

    def shape_histogram(self, n: int) -> List[int]:
        """모양 (n+k, n-k) 인 타블로의 개수"""
        histogram = [0] * (n + 1)
        for tableau in self.enumerate_tableaux(n):
            row1, row2 = shape_of(tableau)
            histogram[(row1 - row2) // 2] += 1
        return histogram

    def bijection_rows(self, n: int) -> List[Dict[str, object]]:
        """
        타블로마다 (subset, shape, walk, height, checks) 한 행.
        checks는 φ의 세 가지 성질을 타블로 단위로 확인한 결과입니다.
        """
        rows = []
        for tableau in self.enumerate_tableaux(n):
            row1, row2 = shape_of(tableau)
            walk = phi(tableau)
            height = walk_height(walk)
            k = (row1 - row2) // 2
            checks = {
                "up_steps": walk.up_count == len(tableau.subset),
                "equal_rows": (row1 == row2) == (height == 0),
                "shape_height": height == k,
                "inverse": phi_inverse(walk) == tableau,
            }
            rows.append({
                "subset": tableau.label(),
                "shape": (row1, row2),
                "walk": str(walk),
                "height": height,
                "checks": checks,
                "ok": all(checks.values()),
            })
        return rows

    def check_bijection(self, n: int) -> bool:
        """φ가 B_n 에서 D_n 으로의 전단사이고 세 성질이 모든 타블로에서 성립하는지"""
        rows = self.bijection_rows(n)
        walks = {row["walk"] for row in rows}
        return len(walks) == len(rows) == 1 << n and all(row["ok"] for row in rows)

    def subsets_of_size(self, n: int, k: int) -> List[Tableau]:
        """|S_T| = k 인 타블로 (C(n,k) 개)"""
        self._check_cap(n)
        return [Tableau(n, frozenset(c)) for c in combinations(range(1, n + 1), k)]


def squares_sum(row: Sequence[int]) -> int:
    return sum(v * v for v in row)

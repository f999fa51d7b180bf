"""가중치 성분의 선형 독립성에 의한 비대각화 판정

W = ((w_11, w_12),(w_21, w_22)) 에서 0 이 아닌 {w_11, w_12, w_22} 가 선형 독립이고
{w_12, w_21} 이 선형 종속이면 W dx 는 동치 변환으로도 대각화되지 않습니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..errors import PreconditionViolated
from .entries import GalleryEntry
from .weights import MatrixWeight

logger = logging.getLogger(__name__)


@dataclass
class StructureCheck:
    """structure_check 결과

    Attributes:
        independent: 0 이 아닌 대각/우상단 성분들이 선형 독립
        dependent: w_12, w_21 이 선형 종속
        ranks: 각 성분 집합의 계수
    """
    independent: bool
    dependent: bool
    ranks: Dict[str, int] = field(default_factory=dict)

    @property
    def non_diagonalizable(self) -> bool:
        return self.independent and self.dependent


def _entry_vectors(weight: MatrixWeight) -> np.ndarray:
    """각 성분 w_ij 를 (스칼라 가중치, 로그 분기, x 거듭제곱) 기저의 계수 벡터로"""
    blocks: Dict[Tuple, Dict[int, np.ndarray]] = {}
    for term in weight.terms:
        powers = blocks.setdefault((term.weight, term.log), {})
        for k, coeff in enumerate(term.kernel.coeffs):
            key = k + term.shift
            powers[key] = powers.get(key, np.zeros((weight.dim, weight.dim), dtype=complex)) + coeff
    columns: List[np.ndarray] = [c for powers in blocks.values() for _, c in sorted(powers.items())]
    # (기저 원소 수, m, m) → 성분별 벡터 (m, m, 기저 원소 수)
    return np.moveaxis(np.array(columns), 0, -1)


def _rank(vectors: List[np.ndarray]) -> int:
    if not vectors:
        return 0
    arr = np.array(vectors)
    return int(np.linalg.matrix_rank(arr, tol=1e-12 * max(1.0, float(np.abs(arr).max()))))


def structure_check(entry: GalleryEntry) -> StructureCheck:
    """2×2 가중치 성분의 독립/종속 구조를 기호적으로 검사

    Raises:
        PreconditionViolated: 가중치 표현이 없거나 2×2 가 아닐 때
    """
    if entry.weight is None or entry.weight.dim != 2:
        raise PreconditionViolated(f"{entry.name}: 2×2 가중치 표현이 필요합니다")
    V = _entry_vectors(entry.weight)
    upper = [V[i, j] for i, j in ((0, 0), (0, 1), (1, 1)) if np.any(V[i, j])]
    off = [V[0, 1], V[1, 0]]
    ranks = {"upper": _rank(upper), "offdiag": _rank(off)}
    independent = len(upper) >= 2 and ranks["upper"] == len(upper)
    dependent = bool(np.any(V[0, 1])) and ranks["offdiag"] <= 1
    logger.debug(f"{entry.name}: 성분 계수 {ranks}")
    return StructureCheck(independent, dependent, ranks)

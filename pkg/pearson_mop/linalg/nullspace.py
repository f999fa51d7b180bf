"""행/열 평형화 후 SVD 로 구하는 영공간"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)


@dataclass
class NullspaceResult:
    """영공간 기저와 판정 근거

    Attributes:
        basis: 열이 영공간 기저인 행렬 (원래 척도)
        singular_values: 평형화된 행렬의 특이값
        nullity: 영공간 차원
        gap: 유지된 마지막 특이값 / 버려진 첫 특이값 (판정 여유)
    """
    basis: np.ndarray
    singular_values: np.ndarray
    nullity: int
    gap: Optional[float]


def equilibrated_nullspace(A: np.ndarray, rtol: float) -> NullspaceResult:
    """s ≤ rtol·s_max 인 특이값을 영으로 보는 A 의 영공간"""
    A = np.asarray(A, dtype=complex)
    rows, cols = A.shape
    r = np.linalg.norm(A, axis=1)
    A1 = A / np.where(r > 0, r, 1.0)[:, None]
    c = np.linalg.norm(A1, axis=0)
    c = np.where(c > 0, c, 1.0)
    As = A1 / c[None, :]
    _, s, Vh = scipy.linalg.svd(As, full_matrices=True)
    s_max = float(s[0]) if s.size else 0.0
    kept = int(np.sum(s > rtol * s_max)) if s_max > 0 else 0
    nullity = cols - kept
    gap = None
    if 0 < kept < s.size:
        gap = float(s[kept - 1] / max(s[kept], 1e-300))
    elif 0 < kept and nullity > 0:
        gap = float("inf")
    Y = np.conj(Vh[kept:, :]).T
    basis = Y / c[:, None]
    logger.debug(f"영공간: {rows}×{cols}, 영차원 {nullity}, 간격 {gap}")
    return NullspaceResult(basis=basis, singular_values=s, nullity=nullity, gap=gap)

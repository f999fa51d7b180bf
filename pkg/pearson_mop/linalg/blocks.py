"""블록 Hankel 조립과 블록 행 선형계 풀이

블록 행 X = (X_0, …, X_{p−1}) 에 대해 X·H = R 을 풉니다.
전치된 mp×mp 스칼라 선형계를 LU 분해(scipy.linalg)로 풀고,
조건수는 블록 대각 척도 조정 후 추정합니다.
"""

import logging
from typing import Sequence

import numpy as np
import scipy.linalg

from ..errors import DimensionMismatch, SingularSystem
from .matrices import CMatrix, Tolerance, norm

logger = logging.getLogger(__name__)


def block_hankel(moments: Sequence[CMatrix], rows: int, cols: int = None, offset: int = 0) -> np.ndarray:
    """(i, j) 블록이 μ_{i+j+offset} 인 rows×cols 블록 행렬"""
    cols = rows if cols is None else cols
    m = np.asarray(moments[0]).shape[0]
    H = np.zeros((rows * m, cols * m), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            H[i * m:(i + 1) * m, j * m:(j + 1) * m] = moments[i + j + offset]
    return H


def split_block_row(X: np.ndarray, m: int) -> list:
    """m × pm 행렬을 m×m 블록 목록으로"""
    return [X[:, j * m:(j + 1) * m] for j in range(X.shape[1] // m)]


def join_block_row(blocks: Sequence[CMatrix]) -> np.ndarray:
    return np.hstack([np.asarray(b, dtype=complex) for b in blocks])


def block_scaling(H: np.ndarray, m: int, tol: Tolerance) -> np.ndarray:
    """블록 대각 척도 d_i = ‖H_ii‖^{-1/2} (스칼라 열벡터 길이 pm)"""
    p = H.shape[0] // m
    d = np.empty(p * m)
    for i in range(p):
        block = H[i * m:(i + 1) * m, i * m:(i + 1) * m]
        d[i * m:(i + 1) * m] = 1.0 / np.sqrt(max(norm(block), tol.abs))
    return d


def scaled_condition(H: np.ndarray, m: int, tol: Tolerance) -> float:
    """블록 척도 조정된 H 의 2-노름 조건수"""
    if not np.all(np.isfinite(H)):
        return float("inf")
    d = block_scaling(H, m, tol)
    Hs = H * d[:, None] * d[None, :]
    if norm(Hs) == 0.0:
        return float("inf")
    return float(np.linalg.cond(Hs))


def solve_block_row(H: np.ndarray, rhs, tol: Tolerance) -> list:
    """X·H = rhs 를 만족하는 블록 행 X

    Args:
        H: pm×pm 블록 행렬 (ndarray)
        rhs: m×m 블록 p 개의 목록 또는 m×pm 배열
        tol: 허용오차

    Returns:
        m×m 블록 p 개의 목록

    Raises:
        SingularSystem: 척도 조정된 조건수가 tol.cond_max 를 넘을 때
    """
    H = np.asarray(H, dtype=complex)
    R = join_block_row(rhs) if isinstance(rhs, (list, tuple)) else np.asarray(rhs, dtype=complex)
    m = R.shape[0]
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] % m:
        raise DimensionMismatch(f"블록 행렬 형태가 잘못되었습니다: {H.shape}, 블록 크기 {m}")
    if R.shape[1] != H.shape[0]:
        raise DimensionMismatch(f"우변 블록 수 불일치: {R.shape[1] // m} != {H.shape[0] // m}")
    p = H.shape[0] // m

    d = block_scaling(H, m, tol)
    Hs = H * d[:, None] * d[None, :]
    cond = scaled_condition(H, m, tol)
    if not np.isfinite(cond) or cond > tol.cond_max:
        logger.debug(f"블록 선형계 특이 판정: 블록 수 {p}, 조건수 {cond:.3e}")
        raise SingularSystem(cond, p)

    # X H = R  ⇔  (X D^{-1})(D H D) = R D
    lu = scipy.linalg.lu_factor(Hs.T, check_finite=False)
    Y = scipy.linalg.lu_solve(lu, (R * d[None, :]).T, check_finite=False).T
    X = Y * d[None, :]

    residual = norm(X @ H - R)
    if residual > 10 * tol.bound(norm(R)):
        logger.warning(f"블록 선형계 잔차가 큽니다: {residual:.3e} (조건수 {cond:.3e})")
    return split_block_row(X, m)

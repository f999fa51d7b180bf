"""밀집 복소 행렬 술어와 허용오차

Tolerance 는 모든 수치 술어에 명시적으로 전달됩니다.
행렬은 numpy complex128 ndarray 로 표현합니다.
"""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from ..errors import DimensionMismatch, NonHermitianInput
from ..models import PsdVerdict

logger = logging.getLogger(__name__)

CMatrix = np.ndarray


@dataclass(frozen=True)
class Tolerance:
    """수치 허용오차 묶음

    Attributes:
        rel: 상대 허용오차
        abs: 절대 허용오차 하한
        cond_max: 신뢰 가능한 풀이의 조건수 상한
        zero_rel: 상쇄된 브래킷을 0 으로 판정하는 상대 임계값
        null_rtol: 영공간 판정 상대 특이값 임계값
    """
    rel: float = 1e-9
    abs: float = 1e-12
    cond_max: float = 1e10
    zero_rel: float = 1e-8
    null_rtol: float = 1e-10

    def __post_init__(self):
        if not self.rel > 0:
            raise ValueError(f"rel 은 양수여야 합니다: {self.rel}")
        if not self.abs > 0:
            raise ValueError(f"abs 는 양수여야 합니다: {self.abs}")
        if not self.cond_max > 1:
            raise ValueError(f"cond_max 는 1 보다 커야 합니다: {self.cond_max}")
        if not self.zero_rel > 0 or not self.null_rtol > 0:
            raise ValueError("zero_rel, null_rtol 은 양수여야 합니다")

    @classmethod
    def from_settings(cls, settings=None) -> "Tolerance":
        """환경 설정에서 허용오차를 만듭니다"""
        if settings is None:
            from ..config.env_config import get_settings
            settings = get_settings()
        return cls(
            rel=settings.tol_rel,
            abs=settings.tol_abs,
            cond_max=settings.tol_cond_max,
            zero_rel=settings.tol_zero_rel,
            null_rtol=settings.null_rtol,
        )

    def loosened(self, factor: float) -> "Tolerance":
        """rel 을 factor 배 완화한 사본"""
        return replace(self, rel=self.rel * factor)

    def bound(self, scale: float) -> float:
        """크기 scale 에 대한 허용 오차 abs + rel·scale"""
        return self.abs + self.rel * scale

    def as_dict(self) -> dict:
        return {"rel": self.rel, "abs": self.abs, "cond_max": self.cond_max,
                "zero_rel": self.zero_rel, "null_rtol": self.null_rtol}


def resolve_tol(tol: Optional[Tolerance]) -> Tolerance:
    """tol 이 None 이면 설정 기반 기본값"""
    return tol if tol is not None else Tolerance.from_settings()


def as_cmatrix(A, dim: Optional[int] = None) -> CMatrix:
    """정방 복소 행렬로 변환하고 차원을 검증합니다"""
    M = np.array(A, dtype=complex)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise DimensionMismatch(f"정방 행렬이 아닙니다: shape={M.shape}")
    if dim is not None and M.shape[0] != dim:
        raise DimensionMismatch(f"차원 불일치: {M.shape[0]} != {dim}")
    return M


def adjoint(A: CMatrix) -> CMatrix:
    """켤레 전치"""
    return np.conj(np.asarray(A)).T


def norm(A) -> float:
    """프로베니우스 노름"""
    return float(np.linalg.norm(A))


def commutator(A: CMatrix, B: CMatrix) -> CMatrix:
    return A @ B - B @ A


def is_hermitian(A: CMatrix, tol: Tolerance) -> bool:
    return norm(A - adjoint(A)) <= tol.bound(norm(A))


def commutes(A: CMatrix, B: CMatrix, tol: Tolerance) -> bool:
    return norm(commutator(A, B)) <= tol.bound(norm(A) * norm(B))


def offdiag_norm(A: CMatrix) -> float:
    return norm(A - np.diag(np.diag(A)))


def is_diagonal(A: CMatrix, tol: Tolerance) -> bool:
    return offdiag_norm(A) <= tol.bound(norm(A))


def condition(A: CMatrix) -> float:
    """2-노름 조건수 (0 행렬이면 inf)"""
    if not np.all(np.isfinite(A)) or norm(A) == 0.0:
        return float("inf")
    return float(np.linalg.cond(A))


def is_nonsingular(A: CMatrix, tol: Tolerance) -> bool:
    """조건수 ≤ cond_max 이고 0 이 아닌 행렬"""
    return norm(A) > tol.abs and condition(A) <= tol.cond_max


def solve_right(R: CMatrix, M: CMatrix) -> CMatrix:
    """X·M = R 의 X (우측 역행렬 곱 R·M^{-1})"""
    return np.linalg.solve(M.T, R.T).T


def solve_left(M: CMatrix, R: CMatrix) -> CMatrix:
    """M·X = R 의 X"""
    return np.linalg.solve(M, R)


def psd_check(A: CMatrix, tol: Tolerance) -> PsdVerdict:
    """에르미트 여부와 양정치성 판정

    대각 척도 조정(합동 변환)은 관성을 보존하므로 고유값 판정은
    척도 조정된 행렬에서 수행합니다.
    """
    A = np.asarray(A, dtype=complex)
    if not is_hermitian(A, tol):
        return PsdVerdict.NON_HERMITIAN
    H = (A + adjoint(A)) / 2
    d = np.real(np.diag(H))
    if np.any(d <= tol.abs):
        return PsdVerdict.HERMITIAN_INDEFINITE
    s = 1.0 / np.sqrt(d)
    scaled = H * s[:, None] * s[None, :]
    if float(np.min(np.linalg.eigvalsh(scaled))) > tol.abs:
        return PsdVerdict.POSITIVE_DEFINITE
    return PsdVerdict.HERMITIAN_INDEFINITE


def _cluster(values: np.ndarray, gap: float) -> List[List[int]]:
    groups: List[List[int]] = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _refine(mats: Sequence[CMatrix], basis: np.ndarray, tol: Tolerance) -> np.ndarray:
    if basis.shape[1] == 1 or not mats:
        return basis
    A = adjoint(basis) @ mats[0] @ basis
    A = (A + adjoint(A)) / 2
    w, v = np.linalg.eigh(A)
    scale = max(float(np.max(np.abs(w))), 1.0)
    blocks = [_refine(mats[1:], basis @ v[:, idx], tol)
              for idx in _cluster(w, tol.zero_rel * scale)]
    return np.hstack(blocks)


def simultaneous_unitary_diagonalizer(As: Sequence[CMatrix], tol: Tolerance) -> Optional[CMatrix]:
    """교환하는 에르미트 행렬들을 동시에 대각화하는 유니터리 T

    첫 행렬의 고유공간을 나머지 행렬로 차례로 세분합니다.

    Returns:
        모든 T·A·T* 가 대각이 되는 T, 교환하지 않으면 None

    Raises:
        NonHermitianInput: 에르미트가 아닌 입력
    """
    mats = [as_cmatrix(A) for A in As]
    if not mats:
        raise DimensionMismatch("행렬 목록이 비어 있습니다")
    m = mats[0].shape[0]
    for i, A in enumerate(mats):
        if A.shape[0] != m:
            raise DimensionMismatch(f"{i}번째 행렬 차원 불일치")
        if not is_hermitian(A, tol):
            raise NonHermitianInput(f"{i}번째 행렬이 에르미트가 아닙니다")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not commutes(mats[i], mats[j], tol):
                logger.debug(f"교환하지 않는 쌍 ({i}, {j})")
                return None
    V = _refine(mats, np.eye(m, dtype=complex), tol)
    T = adjoint(V)
    for A in mats:
        image = T @ A @ adjoint(T)
        if offdiag_norm(image) > tol.bound(norm(A)) * 10:
            logger.warning(f"동시 대각화 검증 실패: 비대각 노름 {offdiag_norm(image):.3e}")
            return None
    return T


def cholesky_lower(A: CMatrix) -> CMatrix:
    """에르미트 양정치 행렬의 하삼각 Cholesky 인자 L (A = L L*)"""
    return scipy.linalg.cholesky((A + adjoint(A)) / 2, lower=True)

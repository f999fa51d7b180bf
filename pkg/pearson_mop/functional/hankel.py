"""블록 Hankel 모멘트 행렬 Δ_n 과 정칙성/에르미트성/양정치성 프로파일"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..linalg import Tolerance, block_hankel, is_hermitian, psd_check, resolve_tol, scaled_condition
from ..models import PsdVerdict
from .functional import Functional

logger = logging.getLogger(__name__)


def delta(u: Functional, k: int) -> np.ndarray:
    """Δ_k: μ_0..μ_{2k} 의 (k+1)×(k+1) 블록 Hankel 행렬"""
    return block_hankel(u.moments(2 * k + 1), k + 1)


@dataclass
class HankelProfile:
    """Δ_0..Δ_n 과 차수별 판정

    Attributes:
        order: n
        matrices: Δ_0..Δ_n
        nonsingular, hermitian, positive_definite: 차수별 플래그
        conditions: 척도 조정된 조건수
    """
    order: int
    matrices: List[np.ndarray] = field(default_factory=list)
    nonsingular: List[bool] = field(default_factory=list)
    hermitian: List[bool] = field(default_factory=list)
    positive_definite: List[bool] = field(default_factory=list)
    conditions: List[float] = field(default_factory=list)

    @property
    def quasi_definite(self) -> bool:
        return all(self.nonsingular)

    @property
    def is_positive_definite(self) -> bool:
        return all(self.positive_definite)

    def first_singular(self) -> Optional[int]:
        for k, ok in enumerate(self.nonsingular):
            if not ok:
                return k
        return None


def hankel_profile(u: Functional, n: int, tol: Optional[Tolerance] = None) -> HankelProfile:
    """Δ_0..Δ_n 을 조립하고 각 차수에 판정을 붙입니다

    Raises:
        RecurrenceBlocked: μ_{2n} 까지 생성할 수 없을 때
    """
    tol = resolve_tol(tol)
    u.moment(2 * n)
    profile = HankelProfile(order=n)
    for k in range(n + 1):
        D = delta(u, k)
        cond = scaled_condition(D, u.dim, tol)
        verdict = psd_check(D, tol)
        profile.matrices.append(D)
        profile.conditions.append(cond)
        profile.nonsingular.append(bool(np.isfinite(cond) and cond <= tol.cond_max))
        profile.hermitian.append(verdict is not PsdVerdict.NON_HERMITIAN)
        profile.positive_definite.append(verdict is PsdVerdict.POSITIVE_DEFINITE)
    logger.debug(f"Hankel 프로파일 {u.name}: 정칙 {profile.nonsingular}, 양정치 {profile.positive_definite}")
    return profile

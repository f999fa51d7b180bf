"""우측 ℂ^{(m,m)} 가군 M_{p,q}(u) 의 기저와 순환성 판정

(Φ, Ψ) 의 각 열 (v_0..v_p, w_0..w_q) 은 같은 스칼라 선형계
Σ_i n μ_{n+i−1} v_i + Σ_j μ_{n+j} w_j = 0 (0 ≤ n ≤ N_cert) 를 만족합니다.
영공간 K 의 차원이 d 이면 가군의 계수(rank)는 ceil(d/m) 입니다.
"""

import logging
from dataclasses import dataclass, field
from math import ceil
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config.env_config import get_settings
from ..errors import RecurrenceBlocked
from ..functional import Functional, hankel_profile, pearson_residual
from ..linalg import MatrixPolynomial, Tolerance, equilibrated_nullspace, poly_det_adj, resolve_tol
from ..models import CyclicityKind, CyclicityVerdict

logger = logging.getLogger(__name__)

Pair = Tuple[MatrixPolynomial, MatrixPolynomial]


def column_system(u: Functional, p: int, q: int, horizon: int) -> np.ndarray:
    """m(N+1) × m(p+q+2) 열벡터 선형계"""
    m = u.dim
    A = np.zeros((m * (horizon + 1), m * (p + q + 2)), dtype=complex)
    for n in range(horizon + 1):
        rows = slice(n * m, (n + 1) * m)
        if n > 0:
            for i in range(p + 1):
                A[rows, i * m:(i + 1) * m] = n * u.moment(n + i - 1)
        for j in range(q + 1):
            c = p + 1 + j
            A[rows, c * m:(c + 1) * m] = u.moment(n + j)
    return A


def _pair_from_columns(Z: np.ndarray, m: int, p: int, q: int) -> Pair:
    """m(p+q+2) × m 블록 열을 (Φ, Ψ) 로"""
    phi = [Z[i * m:(i + 1) * m, :] for i in range(p + 1)]
    psi = [Z[(p + 1 + j) * m:(p + 2 + j) * m, :] for j in range(q + 1)]
    return (MatrixPolynomial.from_coefficients(phi, dim=m),
            MatrixPolynomial.from_coefficients(psi, dim=m))


def _columns_from_pair(Phi: MatrixPolynomial, Psi: Optional[MatrixPolynomial], p: int, q: int) -> np.ndarray:
    blocks = list(Phi.padded(p + 1)[:p + 1])
    if Psi is not None:
        blocks += list(Psi.padded(q + 1)[:q + 1])
    return np.vstack(blocks)


@dataclass
class ModuleBasis:
    """M_{p,q}(u) 의 생성원

    Attributes:
        generators: (Φ, Ψ) 쌍 목록
        rank: 최소 생성원 개수 ceil(d/m)
        kernel: 열벡터 영공간 기저 (m(p+q+2) × d)
        horizon: 인증에 사용한 방정식 수 N_cert
        gap: 특이값 간격
        certificate: 생성원별 독립 재계산 잔차 (최대 상대값)
    """
    p: int
    q: int
    dim: int
    generators: List[Pair] = field(default_factory=list)
    rank: int = 0
    kernel: Optional[np.ndarray] = None
    horizon: int = 0
    gap: Optional[float] = None
    certificate: List[float] = field(default_factory=list)

    @property
    def nullity(self) -> int:
        return 0 if self.kernel is None else self.kernel.shape[1]

    def contains(self, Phi: MatrixPolynomial, Psi: Optional[MatrixPolynomial] = None,
                 rtol: float = 1e-7) -> bool:
        """(Φ, Ψ) 의 모든 열이 영공간에 속하는지 (Ψ 생략 시 Φ 성분만 비교)"""
        if Phi.degree is not None and Phi.degree > self.p:
            return False
        Z = _columns_from_pair(Phi, Psi, self.p, self.q)
        if self.kernel is None or self.nullity == 0:
            return bool(np.linalg.norm(Z) == 0.0)
        K = self.kernel if Psi is not None else self.kernel[: (self.p + 1) * self.dim, :]
        Q, _ = np.linalg.qr(K)
        residual = Z - Q @ (np.conj(Q).T @ Z)
        return bool(np.linalg.norm(residual) <= rtol * max(np.linalg.norm(Z), 1e-300))


def module_basis(u: Functional, p: int, q: int, horizon: Optional[int] = None,
                 tol: Optional[Tolerance] = None) -> ModuleBasis:
    """M_{p,q}(u) 의 우측 가군 기저 (빈 기저도 유효한 답)"""
    tol = resolve_tol(tol)
    m = u.dim
    if horizon is None:
        horizon = get_settings().cert_horizon(m, p, q)
    A = column_system(u, p, q, horizon)
    ns = equilibrated_nullspace(A, tol.null_rtol)
    basis = ModuleBasis(p=p, q=q, dim=m, horizon=horizon, gap=ns.gap, kernel=ns.basis)
    d = ns.nullity
    basis.rank = ceil(d / m)
    for g in range(basis.rank):
        cols = ns.basis[:, g * m:(g + 1) * m]
        Z = np.zeros((A.shape[1], m), dtype=complex)
        Z[:, :cols.shape[1]] = cols
        Phi, Psi = _pair_from_columns(Z, m, p, q)
        basis.generators.append((Phi, Psi))
        basis.certificate.append(pearson_residual(u, Phi, Psi, horizon).max_relative)
    logger.info(f"M_{{{p},{q}}}({u.name}): 영차원 {d}, rank {basis.rank}, 간격 {ns.gap}")
    return basis


def det_is_zero(Phi: MatrixPolynomial, tol: Tolerance) -> bool:
    """det Φ ≡ 0 (계수 상대 크기 기준)"""
    det, _ = poly_det_adj(Phi)
    scale = max(Phi.norm(), tol.abs) ** Phi.dim
    return det.is_zero() or det.norm() <= tol.zero_rel * scale


def cyclicity_check(u: Functional, horizon: Optional[int] = None,
                    tol: Optional[Tolerance] = None) -> CyclicityVerdict:
    """Δ_0..Δ_2 정칙이면 M_{2,1}(u) 는 순환 가군이어야 함"""
    tol = resolve_tol(tol)
    details: Dict[str, Any] = {}
    try:
        profile = hankel_profile(u, 2, tol)
        quasi = profile.quasi_definite
        details["hankel_nonsingular"] = profile.nonsingular
    except RecurrenceBlocked as e:
        quasi = False
        details["blocked"] = str(e)
    basis = module_basis(u, 2, 1, horizon, tol)
    details.update({"nullity": basis.nullity, "horizon": basis.horizon, "gap": basis.gap})
    if not quasi:
        return CyclicityVerdict(CyclicityKind.INCONCLUSIVE, rank=basis.rank, details=details)
    if basis.rank == 0:
        return CyclicityVerdict(CyclicityKind.EMPTY, rank=0, details=details)
    if basis.rank >= 2:
        logger.warning(f"Δ_0..Δ_2 정칙인데 M_{{2,1}} rank {basis.rank}: 순환성 위반")
        return CyclicityVerdict(CyclicityKind.NOT_CYCLIC, rank=basis.rank, details=details)
    Phi, Psi = basis.generators[0]
    if det_is_zero(Phi, tol):
        return CyclicityVerdict(CyclicityKind.CYCLIC_DEGENERATE, generator=(Phi, Psi), rank=1, details=details)
    return CyclicityVerdict(CyclicityKind.CYCLIC, generator=(Phi, Psi), rank=1, details=details)

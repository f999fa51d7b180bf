"""스칼라 아이디얼 생성원 α 와 범함수의 class s

D(uαI) = uΨ 를 만족하는 최소 차수 α 를 차수 d = 0, 1, … 순으로 찾습니다.
미지수는 α_0..α_d (스칼라) 와 vec(ψ_j) 이며, vec(μψ) = (I ⊗ μ) vec(ψ) 를 씁니다.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..config.env_config import get_settings
from ..errors import NoGeneratorFound
from ..functional import Functional, PearsonSpec, pearson_residual
from ..linalg import MatrixPolynomial, Tolerance, equilibrated_nullspace, poly_det_adj, poly_mul, resolve_tol

logger = logging.getLogger(__name__)


@dataclass
class ClassReport:
    """scalar_ideal 결과

    Attributes:
        alpha: 모닉 스칼라 생성원 (dim 1)
        Psi: D(uαI) = uΨ 의 Ψ
        s: class = max(deg α − 2, deg Ψ − 1)
        certified_to: 인증 방정식 수
        residual: 독립 재계산 상대 잔차
        gap: 특이값 간격
    """
    alpha: MatrixPolynomial
    Psi: MatrixPolynomial
    s: int
    certified_to: int
    residual: float
    gap: Optional[float] = None

    @property
    def alpha_coeffs(self) -> np.ndarray:
        return self.alpha.to_scalar()


def class_of(alpha: MatrixPolynomial, Psi: MatrixPolynomial) -> int:
    da = alpha.degree if alpha.degree is not None else 0
    dp = Psi.degree if Psi.degree is not None else -1
    return max(da - 2, dp - 1)


def seed_from_pearson(spec: PearsonSpec) -> Tuple[MatrixPolynomial, MatrixPolynomial]:
    """Ω = adj Φ 로 얻는 후보 α₀ = det Φ, Ψ₀ = Φ(adj Φ)′ + Ψ adj Φ"""
    det, adj = poly_det_adj(spec.Phi)
    Psi0 = poly_mul(spec.Phi, adj.derivative()) + poly_mul(spec.Psi, adj)
    return det, Psi0


def _ideal_system(u: Functional, d: int, q: int, horizon: int) -> np.ndarray:
    m = u.dim
    rows = m * m * (horizon + 1)
    A = np.zeros((rows, d + 1 + m * m * (q + 1)), dtype=complex)
    eye = np.eye(m)
    for n in range(horizon + 1):
        r = slice(n * m * m, (n + 1) * m * m)
        if n > 0:
            for i in range(d + 1):
                A[r, i] = n * u.moment(n + i - 1).reshape(-1, order="F")
        for j in range(q + 1):
            c0 = d + 1 + j * m * m
            A[r, c0:c0 + m * m] = np.kron(eye, u.moment(n + j))
    return A


def scalar_ideal(u: Functional, known: Optional[PearsonSpec] = None, d_max: Optional[int] = None,
                 horizon: Optional[int] = None, tol: Optional[Tolerance] = None) -> ClassReport:
    """최소 차수 모닉 α 와 Ψ, class s

    Raises:
        NoGeneratorFound: d_max 이하에서 인증을 만족하는 α 가 없을 때
    """
    tol = resolve_tol(tol)
    m = u.dim
    if known is not None:
        alpha0, Psi0 = seed_from_pearson(known)
        d_max = alpha0.degree if d_max is None else min(d_max, alpha0.degree)
        q = max(Psi0.degree or 0, (alpha0.degree or 0) - 1)
    else:
        d_max = 2 * m if d_max is None else d_max
        q = d_max + 1
    if horizon is None:
        horizon = get_settings().cert_horizon(m, d_max, q)

    for d in range(d_max + 1):
        A = _ideal_system(u, d, q, horizon)
        ns = equilibrated_nullspace(A, tol.null_rtol)
        if ns.nullity == 0:
            continue
        for k in range(ns.nullity):
            z = ns.basis[:, k]
            lead = z[d]
            if abs(lead) <= tol.zero_rel * np.max(np.abs(z[: d + 1])):
                continue
            z = z / lead
            alpha = MatrixPolynomial.from_scalar(z[: d + 1], dim=1)
            psi = [z[d + 1 + j * m * m: d + 1 + (j + 1) * m * m].reshape((m, m), order="F") for j in range(q + 1)]
            Psi = MatrixPolynomial.from_coefficients(psi, dim=m)
            Psi = Psi.trimmed(tol.zero_rel * max(Psi.norm(), 1.0))
            alphaI = MatrixPolynomial.from_scalar(alpha.to_scalar(), dim=m)
            residual = pearson_residual(u, alphaI, Psi, horizon).max_relative
            report = ClassReport(alpha=alpha, Psi=Psi, s=class_of(alpha, Psi),
                                 certified_to=horizon, residual=residual, gap=ns.gap)
            logger.info(f"{u.name}: 생성원 차수 {d}, deg Ψ = {Psi.degree}, class s = {report.s}")
            return report
    raise NoGeneratorFound(d_max)

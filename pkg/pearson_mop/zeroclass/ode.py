"""영류 MOP 의 2계 미분방정식, 구조 관계, 계수 점화식 풀이

(L1) αP″_n + E_nV_{n−1}ΨV_{n−1}^{-1}E_n^{-1}P′_n − nE_nM_{n−1}E_n^{-1}P_n = 0
(L2) αQ″_n + ΨQ′_n − nM_{n−1}Q_n = 0, Q_n = (E_nV_{n−1})^{-1}P_n
(R)  P″_nΦ* + P′_nΨ* + Λ_nP_n = 0, Λ_n = −nM_{n−1}*  (u, uΦ 에르미트일 때)
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..config.env_config import get_settings
from ..errors import HermiticityRequired, OdeSolveBlocked, PreconditionViolated
from ..functional import Functional, is_hermitian_functional, right_multiply
from ..linalg import (
    CMatrix, MatrixPolynomial, Tolerance, adjoint, is_nonsingular, norm, poly_mul, resolve_tol,
    solve_left, solve_right,
)
from ..mop import MonicSegment
from .spec import Ladders, ZeroClassSpec

logger = logging.getLogger(__name__)


@dataclass
class OdeTriple:
    """A2·y″ + A1·y′ + A0·y = 0 (side="left") 또는 y″A2 + y′A1 + A0·y = 0 (side="right")

    Attributes:
        second, first: 행렬 다항식 계수
        zeroth: 상수 행렬 (항상 왼쪽에서 곱함)
        residual: 다항식 잔차 / ‖P_n 계수‖
    """
    second: MatrixPolynomial
    first: MatrixPolynomial
    zeroth: CMatrix
    side: str = "left"
    residual: float = 0.0
    extras: dict = field(default_factory=dict)

    def apply(self, y: MatrixPolynomial) -> MatrixPolynomial:
        y1, y2 = y.derivative(), y.derivative(2)
        if self.side == "left":
            return poly_mul(self.second, y2) + poly_mul(self.first, y1) + y.lmul(self.zeroth)
        return poly_mul(y2, self.second) + poly_mul(y1, self.first) + y.lmul(self.zeroth)


@dataclass
class ZeroClassOde:
    """ode_coefficients 결과"""
    n: int
    left: OdeTriple
    normalized: OdeTriple
    right: Optional[OdeTriple] = None
    kappa: Optional[CMatrix] = None
    right_skipped: str = ""


def _residual(triple: OdeTriple, y: MatrixPolynomial) -> float:
    return triple.apply(y).norm() / max(y.norm(), 1e-300)


def kappa(spec: ZeroClassSpec, seg: MonicSegment, n: int, ladders: Optional[Ladders] = None) -> CMatrix:
    """κ_n = (E_nV_{n−1})^{-1}, n = 0 에서는 E_0^{-1}"""
    L = ladders or Ladders.of(spec)
    V = L.V(n - 1) if n >= 1 else np.eye(spec.dim, dtype=complex)
    return np.linalg.inv(seg.E[n] @ V)


def right_ode(u: Functional, Phi: MatrixPolynomial, Psi: MatrixPolynomial, seg: MonicSegment, n: int,
              horizon: Optional[int] = None, tol: Optional[Tolerance] = None) -> OdeTriple:
    """P″_nΦ* + P′_nΨ* + Λ_nP_n = 0 의 계수와 잔차

    Raises:
        HermiticityRequired: u 또는 uΦ 가 에르미트가 아닐 때
    """
    tol = resolve_tol(tol)
    if Phi.degree is not None and Phi.degree > 2 or Psi.degree is not None and Psi.degree > 1:
        raise PreconditionViolated("우측 ODE 에는 deg Φ ≤ 2, deg Ψ ≤ 1 이 필요합니다")
    horizon = get_settings().test_horizon(n) if horizon is None else horizon
    if not is_hermitian_functional(u, horizon, tol):
        raise HermiticityRequired(f"{u.name} 이 μ_{horizon} 까지 에르미트가 아닙니다")
    if not is_hermitian_functional(right_multiply(u, Phi), horizon, tol):
        raise HermiticityRequired(f"{u.name}·Φ 가 에르미트가 아닙니다")
    M = Psi.coeff(1) + (n - 1) * Phi.coeff(2)
    Lam = -n * adjoint(M)
    triple = OdeTriple(Phi.adjoint(), Psi.adjoint(), Lam, side="right")
    P = seg.polys[n]
    triple.residual = _residual(triple, P)
    # 단항 정규화에서 Λ_nE_n = E_nΛ_n* 이어야 함
    E = seg.E[n]
    triple.extras["lambda_hermitian"] = norm(Lam @ E - E @ adjoint(Lam)) / max(norm(Lam @ E), 1e-300)
    return triple


def ode_coefficients(spec: ZeroClassSpec, seg: MonicSegment, n: int, right: Optional[bool] = None,
                     tol: Optional[Tolerance] = None) -> ZeroClassOde:
    """(L1), (L2), (R) 의 계수와 잔차

    Args:
        right: None 이면 가정이 성립할 때만 (R) 계산, True 이면 가정 실패 시 예외, False 이면 생략

    Raises:
        HermiticityRequired: right=True 이고 u 또는 uαI 가 에르미트가 아닐 때
    """
    tol = resolve_tol(tol)
    if n >= seg.length:
        raise PreconditionViolated(f"P_{n} 이 구간(길이 {seg.length})에 없습니다")
    L = Ladders.of(spec, tol)
    m = spec.dim
    E = seg.E[n]
    Psi = spec.Psi
    alphaI = MatrixPolynomial.from_scalar(spec.alpha, dim=m)
    P = seg.polys[n]

    if n >= 1:
        EV = E @ L.V(n - 1)
        first = Psi.lmul(EV).rmul(np.linalg.inv(EV))
        zeroth = -n * solve_right(E @ L.M(n - 1), E)
    else:
        first = Psi
        zeroth = np.zeros((m, m), dtype=complex)
    left = OdeTriple(alphaI, first, zeroth, side="left")
    left.residual = _residual(left, P)

    k = kappa(spec, seg, n, L)
    normalized = OdeTriple(alphaI, Psi, -n * L.M(n - 1), side="left")
    normalized.residual = _residual(normalized, P.lmul(k))
    result = ZeroClassOde(n=n, left=left, normalized=normalized, kappa=k)

    if right is not False:
        try:
            result.right = right_ode(seg.functional, alphaI, Psi, seg, n, tol=tol)
        except HermiticityRequired as e:
            if right:
                raise
            result.right_skipped = str(e)
    logger.debug(f"{spec.name} n={n}: L1 {left.residual:.2e}, L2 {normalized.residual:.2e}")
    return result


def ode_solve(spec: ZeroClassSpec, n: int, leading, tol: Optional[Tolerance] = None) -> MatrixPolynomial:
    """αy″ + Ψy′ − nM_{n−1}y = 0 의 다항식 해 (c_n = leading)

    (n−k)M_{k+n−1}c_k = (k+1)[N_kc_{k+1} + (k+2)α_0c_{k+2}] 를 k = n−1..0 으로 후진대입

    Raises:
        OdeSolveBlocked: M_{k+n−1} 특이
    """
    tol = resolve_tol(tol)
    m = spec.dim
    leading = np.asarray(leading, dtype=complex).reshape(m, m)
    zero = np.zeros((m, m), dtype=complex)
    c: List[CMatrix] = [zero] * (n + 3)
    c[n] = leading
    a0 = spec.alpha[0]
    for k in range(n - 1, -1, -1):
        M = spec.M(k + n - 1)
        if not is_nonsingular(M, tol):
            raise OdeSolveBlocked(k)
        rhs = (k + 1) * (spec.N(k) @ c[k + 1] + (k + 2) * a0 * c[k + 2])
        c[k] = solve_left(M, rhs) / (n - k)
    return MatrixPolynomial.from_coefficients(c[: n + 1], dim=m)


@dataclass
class StructureRelation:
    """αP′_n = nα_2P_{n+1} + η_nP_n + θ_nP_{n−1}"""
    n: int
    eta: CMatrix
    theta: CMatrix
    residual: float


def structure_relation(spec: ZeroClassSpec, seg: MonicSegment, n: int) -> StructureRelation:
    """η_n = nα_1 + [(n−1)π_n − nπ_{n+1}]α_2, θ_n = −E_nM_{n−1}E_{n−1}^{-1}"""
    if n + 1 >= seg.length:
        raise PreconditionViolated(f"구조 관계에는 P_{n + 1} 이 필요합니다 (구간 길이 {seg.length})")
    m = spec.dim
    a0, a1, a2 = spec.alpha
    eta = n * a1 * np.eye(m) + ((n - 1) * seg.pi[n] - n * seg.pi[n + 1]) * a2
    if n >= 1:
        theta = -solve_right(seg.E[n] @ spec.M(n - 1), seg.E[n - 1])
    else:
        theta = np.zeros((m, m), dtype=complex)
    alphaI = MatrixPolynomial.from_scalar(spec.alpha, dim=m)
    P = seg.polys[n]
    lhs = poly_mul(alphaI, P.derivative())
    rhs = seg.polys[n + 1] * (n * a2) + P.lmul(eta) + seg.P(n - 1).lmul(theta)
    residual = (lhs - rhs).norm() / max(P.norm(), 1e-300)
    return StructureRelation(n, eta, theta, residual)


@dataclass
class SigmaConsistency:
    """Σ_n = nE_nM_{n−1}E_n^{-1} 와 nα_2Σ_n^{(+)} + θ_nΣ_n^{(−)} 비교"""
    n: int
    direct: CMatrix
    assembled: CMatrix
    sigma_plus: CMatrix
    sigma_minus: CMatrix

    @property
    def residual(self) -> float:
        return norm(self.direct - self.assembled) / max(norm(self.direct), 1e-300)


def sigma_consistency(spec: ZeroClassSpec, seg: MonicSegment, n: int,
                      tol: Optional[Tolerance] = None) -> SigmaConsistency:
    """Σ_n^{(+)} = (n+1)E_nM_{2n−1}^{-1}M_{n−1}E_n^{-1},
    Σ_n^{(−)} = −nE_{n−1}M_{2n−1}^{-1}M_{n−2}E_n^{-1}"""
    tol = resolve_tol(tol)
    if not 1 <= n < seg.length:
        raise PreconditionViolated(f"Σ_n 비교에는 1 ≤ n ≤ N 이 필요합니다: n={n}")
    E, Ep = seg.E[n], seg.E[n - 1]
    M2 = spec.M(2 * n - 1)
    if not is_nonsingular(M2, tol):
        raise PreconditionViolated(f"M_{2 * n - 1} 가 특이합니다")
    plus = (n + 1) * solve_right(E @ np.linalg.solve(M2, spec.M(n - 1)), E)
    minus = -n * solve_right(Ep @ np.linalg.solve(M2, spec.M(n - 2)), E)
    theta = -solve_right(E @ spec.M(n - 1), Ep)
    assembled = n * spec.alpha[2] * plus + theta @ minus
    direct = n * solve_right(E @ spec.M(n - 1), E)
    return SigmaConsistency(n, direct, assembled, plus, minus)

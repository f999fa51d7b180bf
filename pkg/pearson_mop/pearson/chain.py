"""틸드 Pearson 쌍과 도함수 사슬

ψ_1 = I 로 정규화한 (Φ, Ψ) 에 대해 ũ = uΦ 는
D(ũΦ̃) = ũΨ̃, ΨΦ̃ + ΦΦ̃′ = ΦΨ̃ 를 만족하는 P_{2,1} 범함수입니다.
φ̃_2 = φ_2, ψ̃_1 = I + 2φ_2 로 고정하고 나머지 φ̃_0, φ̃_1, ψ̃_0 를
계수별 선형계로 풉니다.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional

import numpy as np
import scipy.linalg

from ..errors import ChainBroken, RecurrenceBlocked, SingularSystem, TildeBlocked
from ..functional import (
    Functional, PearsonResidual, PearsonSpec, hankel_profile, right_multiply, spec_residual,
)
from ..linalg import MatrixPolynomial, Tolerance, is_nonsingular, norm, poly_mul, resolve_tol
from ..mop import compute_segment, shifted_bracket

logger = logging.getLogger(__name__)


@dataclass
class TildeResult:
    """tilde_pearson 결과

    Attributes:
        spec: ũ 의 Pearson 쌍 (μ_0 = μ̃_0)
        functional: ũ = uΦψ_1^{-1} (spec 부착)
        normalized: ψ_1 = I 로 정규화한 u 의 쌍
        identity_residual: ‖ΨΦ̃ + ΦΦ̃′ − ΦΨ̃‖
        residual: ũ 모멘트에 대한 Pearson 잔차
    """
    spec: PearsonSpec
    functional: Functional
    normalized: PearsonSpec
    identity_residual: float
    residual: PearsonResidual


def _tilde_identity(Phi: MatrixPolynomial, Psi: MatrixPolynomial,
                    Pt: MatrixPolynomial, St: MatrixPolynomial) -> MatrixPolynomial:
    return poly_mul(Psi, Pt) + poly_mul(Phi, Pt.derivative()) - poly_mul(Phi, St)


def tilde_pearson(spec: PearsonSpec, u: Functional, tol: Optional[Tolerance] = None,
                  horizon: int = 10) -> TildeResult:
    """ũ = uΦ 에 대한 (Φ̃, Ψ̃)

    Raises:
        TildeBlocked: ψ_1 또는 ψ_1 + φ_2 가 특이하거나 Δ_0..Δ_3 이 특이할 때
    """
    tol = resolve_tol(tol)
    spec.require_p21()
    m = spec.dim
    psi1 = spec.psi(1)
    if not is_nonsingular(psi1, tol):
        raise TildeBlocked("ψ_1 이 특이합니다")
    if not is_nonsingular(psi1 + spec.phi(2), tol):
        raise TildeBlocked("ψ_1 + φ_2 가 특이합니다")
    try:
        profile = hankel_profile(u, 3, tol)
    except (RecurrenceBlocked, SingularSystem) as e:
        raise TildeBlocked(f"Δ_0..Δ_3 를 만들 수 없습니다: {e}") from e
    if not profile.quasi_definite:
        raise TildeBlocked(f"Δ_{profile.first_singular()} 가 특이합니다")

    inv = np.linalg.inv(psi1)
    Phi = spec.Phi.rmul(inv)
    Psi = spec.Psi.rmul(inv)
    phi2 = Phi.coeff(2)
    eye = np.eye(m, dtype=complex)

    def build(z: np.ndarray) -> tuple:
        f0, f1, s0 = (z[k * m * m:(k + 1) * m * m].reshape(m, m) for k in range(3))
        Pt = MatrixPolynomial.from_coefficients([f0, f1, phi2], dim=m)
        St = MatrixPolynomial.from_coefficients([s0, eye + 2 * phi2], dim=m)
        return Pt, St

    def affine(z: np.ndarray) -> np.ndarray:
        Pt, St = build(z)
        return _tilde_identity(Phi, Psi, Pt, St).padded(4)[:4].reshape(-1)

    size = 3 * m * m
    c = affine(np.zeros(size, dtype=complex))
    L = np.column_stack([affine(np.eye(size, dtype=complex)[k]) - c for k in range(size)])
    z, *_ = scipy.linalg.lstsq(L, -c)
    Pt, St = build(z)
    # 풀이 잡음으로 생긴 끝 계수 제거
    Pt = Pt.trimmed(tol.zero_rel * max(Pt.norm(), 1.0))
    St = St.trimmed(tol.zero_rel * max(St.norm(), 1.0))
    ident = _tilde_identity(Phi, Psi, Pt, St).norm()
    if ident > 1e-8 * max(Phi.norm() * Psi.norm(), 1.0):
        logger.warning(f"틸드 항등식 잔차가 큽니다: {ident:.3e}")

    tilde_u = right_multiply(u, Phi, name=f"({u.name})~")
    try:
        tilde_spec = PearsonSpec(Pt, St, tilde_u.moment(0))
    except ValueError as e:
        raise TildeBlocked(f"det Φ̃ ≡ 0: {e}") from e
    tilde_u = tilde_u.with_pearson(tilde_spec)
    residual = spec_residual(tilde_u, tilde_spec, horizon)
    logger.info(f"틸드 Pearson 쌍: 항등식 잔차 {ident:.3e}, 모멘트 잔차 {residual.max_relative:.3e}")
    return TildeResult(spec=tilde_spec, functional=tilde_u, normalized=PearsonSpec(Phi, Psi, spec.mu0),
                       identity_residual=ident, residual=residual)


@dataclass
class ChainLink:
    """도함수 사슬의 한 단계 (u^{(j)}, spec^{(j)})"""
    level: int
    functional: Functional
    spec: PearsonSpec
    orthogonality: float = 0.0


@dataclass
class DerivativeChain:
    links: List[ChainLink] = field(default_factory=list)
    degree: int = 0

    @property
    def depth(self) -> int:
        return len(self.links) - 1

    @property
    def max_orthogonality(self) -> float:
        return max((l.orthogonality for l in self.links), default=0.0)


def _derivative_orthogonality(seg, level: int, v: Functional) -> float:
    """Q_k = P^{(j)}_{k+j}·k!/(k+j)! 의 v 에 대한 직교 잔차"""
    worst = 0.0
    for n in range(level, seg.length):
        k = n - level
        Q = seg.polys[n].derivative(level) * (factorial(k) / factorial(n))
        diag, _ = shifted_bracket(Q, v, k)
        scale = max(norm(diag), 1e-300)
        for i in range(k):
            value, _ = shifted_bracket(Q, v, i)
            worst = max(worst, norm(value) / scale)
    return worst


def derivative_chain(spec: PearsonSpec, u: Functional, depth: int, degree: Optional[int] = None,
                     tol: Optional[Tolerance] = None) -> DerivativeChain:
    """u^{(j+1)} = u^{(j)}Φ^{(j)} 를 depth 단계까지 만들고 j 계 도함수 직교성을 검증

    Raises:
        ChainBroken: j 단계의 가정이 깨질 때
    """
    tol = resolve_tol(tol)
    degree = depth + 4 if degree is None else degree
    chain = DerivativeChain(links=[ChainLink(0, u, spec)], degree=degree)
    current_u, current_spec = u, spec
    for j in range(depth):
        try:
            result = tilde_pearson(current_spec, current_u, tol)
        except TildeBlocked as e:
            raise ChainBroken(j, str(e)) from e
        current_u, current_spec = result.functional, result.spec
        chain.links.append(ChainLink(j + 1, current_u, current_spec))

    try:
        seg = compute_segment(u, degree, tol, blocked_as_horizon=False)
    except RecurrenceBlocked as e:
        raise ChainBroken(0, str(e)) from e
    for link in chain.links[1:]:
        link.orthogonality = _derivative_orthogonality(seg, link.level, link.functional)
    logger.info(f"도함수 사슬 depth {depth}: 최대 직교 잔차 {chain.max_orthogonality:.3e}")
    return chain

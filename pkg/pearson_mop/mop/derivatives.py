"""도함수 구간과 P_{2,1} 사다리 관계

ũ = uΦ 에 대해 Q_{k−1} = P′_k / k 는 M_{k−1} = ψ_1 + (k−1)φ_2 가 정칙일 때
모닉 MOP 가 되며 ⟨x^{k−1}P′_k, ũ⟩ = −E_k M_{k−1} 입니다.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from ..errors import DerivativeNotOrthogonal, LadderBlocked, PreconditionViolated
from ..functional import Functional, PearsonSpec, require_pearson, right_multiply
from ..linalg import (
    CMatrix, MatrixPolynomial, Tolerance, is_nonsingular, norm, resolve_tol, solve_right,
    stack_polys,
)
from .segment import MonicSegment, _fill_recurrence, shifted_bracket

logger = logging.getLogger(__name__)


@dataclass
class DerivativeSegment:
    """ũ = uΦ 위의 모닉 도함수 구간

    Attributes:
        segment: Q_0..Q_{N−1} (Q_{k−1} = P′_k/k) 와 Ẽ, π̃, β̃, γ̃
        E_raw: ⟨x^{k−1}P′_k, ũ⟩ = −E_k M_{k−1} (k = 1..N)
        bracket_residuals: k 별 ‖⟨x^{k−1}P′_k, ũ⟩ + E_kM_{k−1}‖ / ‖E_kM_{k−1}‖
        orthogonality: ũ 에 대한 Q 구간 직교성 잔차
    """
    segment: MonicSegment
    E_raw: List[CMatrix] = field(default_factory=list)
    bracket_residuals: List[float] = field(default_factory=list)
    orthogonality: float = 0.0
    functional: Optional[Functional] = field(default=None, repr=False)


def derivative_segment(seg: MonicSegment, spec: Optional[PearsonSpec] = None,
                       tol: Optional[Tolerance] = None) -> DerivativeSegment:
    """(1/k)P′_k 구간을 ũ = uΦ 위에서 구성하고 직교성을 직접 검증

    Raises:
        DerivativeNotOrthogonal: ψ_1 + (k−1)φ_2 가 특이한 k
    """
    tol = resolve_tol(tol)
    u = seg.functional
    spec = spec or require_pearson(u)
    spec.require_p21()
    m = seg.dim
    for k in range(1, seg.length):
        if not is_nonsingular(spec.M(k - 1), tol):
            raise DerivativeNotOrthogonal(k)

    tilde = right_multiply(u, spec.Phi, name=f"({u.name})Φ")
    polys, E, pi, E_raw, residuals = [], [], [], [], []
    for k in range(1, seg.length):
        dP = seg.polys[k].derivative()
        expected = -seg.E[k] @ spec.M(k - 1)
        value, _ = shifted_bracket(dP, tilde, k - 1)
        residuals.append(norm(value + seg.E[k] @ spec.M(k - 1)) / max(norm(expected), tol.abs))
        E_raw.append(expected)
        polys.append(dP / k)
        E.append(expected / k)
        pi.append(((k - 1) / k) * seg.pi[k] if k >= 2 else np.zeros((m, m), dtype=complex))

    dseg = MonicSegment(dim=m, polys=polys, E=E, pi=pi, requested=seg.N - 1, functional=tilde)
    _fill_recurrence(dseg)
    ortho = dseg.orthogonality_residual(tilde) if dseg.length > 1 else 0.0
    if ortho > 1e-6:
        logger.warning(f"도함수 구간 직교성 잔차가 큽니다: {ortho:.3e}")
    return DerivativeSegment(segment=dseg, E_raw=E_raw, bracket_residuals=residuals,
                             orthogonality=ortho, functional=tilde)


@dataclass
class LadderCoefficients:
    """P_n = P′_{n+1}/(n+1) + a_nP′_n + b_nP′_{n−1} 의 계수

    eta, theta 는 영류 구조 관계식에서 채웁니다.
    """
    a: List[CMatrix] = field(default_factory=list)
    b: List[CMatrix] = field(default_factory=list)
    residuals: List[float] = field(default_factory=list)
    gamma_minus_b_nonsingular: List[bool] = field(default_factory=list)
    eta: List[CMatrix] = field(default_factory=list)
    theta: List[CMatrix] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def _ladder_residual(seg: MonicSegment, n: int, a: CMatrix, b: CMatrix) -> float:
    P = seg.polys
    rhs = P[n + 1].derivative() / (n + 1) + P[n].derivative().lmul(a)
    if n >= 1:
        rhs = rhs + P[n - 1].derivative().lmul(b)
    return (P[n] - rhs).norm() / max(P[n].norm(), 1.0)


def ladder_coefficients(seg: MonicSegment, dseg: DerivativeSegment,
                        tol: Optional[Tolerance] = None) -> LadderCoefficients:
    """a_n = β_n − β̃_{n−1}, b_n = γ_n − (n/(n−1))γ̃_{n−1} (n = 1..N−1)"""
    tol = resolve_tol(tol)
    d = dseg.segment
    m = seg.dim
    zero = np.zeros((m, m), dtype=complex)
    out = LadderCoefficients(a=[zero], b=[zero], residuals=[_ladder_residual(seg, 0, zero, zero)],
                             gamma_minus_b_nonsingular=[True])
    for n in range(1, seg.length - 1):
        a = seg.beta[n] - d.beta[n - 1]
        b = seg.gamma[n] - (n / (n - 1)) * d.gamma[n - 1] if n >= 2 else zero
        out.a.append(a)
        out.b.append(b)
        out.residuals.append(_ladder_residual(seg, n, a, b))
        out.gamma_minus_b_nonsingular.append(is_nonsingular(seg.gamma[n] - b, tol))
    logger.debug(f"사다리 계수 최대 잔차 {out.max_residual:.3e}")
    return out


def ladder_relations(seg: MonicSegment, spec: PearsonSpec, n: int,
                     tol: Optional[Tolerance] = None) -> Tuple[MatrixPolynomial, MatrixPolynomial]:
    """P′_{n−1}, P′_{n+1} 의 닫힌 형태 우변

    P′_{n−1} = E_{n−1}M_{n−2}M_{2n−1}^{-1}E_n^{-1}{(x + π_n/n)P′_n − nP_n}
    P′_{n+1} = (n+1)E_n{(φ_2M_{2n−1}^{-1}E_n^{-1}x − (1/n)M_{2n−2}M_{2n−1}^{-1}E_n^{-1}π_n
               + (1/(n+1))E_n^{-1}π_{n+1})P′_n + M_{n−1}M_{2n−1}^{-1}E_n^{-1}P_n}

    Raises:
        LadderBlocked: M_{2n−1} 특이
    """
    tol = resolve_tol(tol)
    spec.require_p21()
    if n < 1 or n + 1 > seg.N:
        raise PreconditionViolated(f"1 ≤ n ≤ N−1 이 필요합니다 (n={n}, N={seg.N})")
    M = spec.M
    if not is_nonsingular(M(2 * n - 1), tol):
        raise LadderBlocked(2 * n - 1)
    En = seg.E[n]
    Minv = np.linalg.inv(M(2 * n - 1))
    Einv = np.linalg.inv(En)
    Pn = seg.polys[n]
    dPn = Pn.derivative()

    inner_minus = dPn.shift(1) + dPn.lmul(seg.pi[n] / n) - n * Pn
    minus = inner_minus.lmul(seg.E[n - 1] @ M(n - 2) @ Minv @ Einv)

    A = spec.phi(2) @ Minv @ Einv
    B = -(1 / n) * M(2 * n - 2) @ Minv @ Einv @ seg.pi[n] + (1 / (n + 1)) * Einv @ seg.pi[n + 1]
    plus = dPn.shift(1).lmul(A) + dPn.lmul(B) + Pn.lmul(M(n - 1) @ Minv @ Einv)
    plus = plus.lmul((n + 1) * En)
    return minus, plus


@dataclass
class FittedLadder:
    """Pearson 데이터 없이 최소제곱으로 맞춘 a_n, b_n 과 잔차"""
    a: List[CMatrix] = field(default_factory=list)
    b: List[CMatrix] = field(default_factory=list)
    residuals: List[float] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def first_failure(self, threshold: float) -> Optional[int]:
        for n, r in enumerate(self.residuals):
            if r >= threshold:
                return n
        return None


def fit_ladder(seg: MonicSegment) -> FittedLadder:
    """P_n − P′_{n+1}/(n+1) = a_nP′_n + b_nP′_{n−1} 의 최소제곱 적합 (n = 0..N−1)

    잔차가 0 이 아니면 도함수들이 어떤 범함수에 대해서도 직교할 수 없음을 뜻합니다.
    """
    m = seg.dim
    zero = np.zeros((m, m), dtype=complex)
    out = FittedLadder()
    for n in range(seg.length - 1):
        P = seg.polys
        target = P[n] - P[n + 1].derivative() / (n + 1)
        basis = [P[n].derivative()] + ([P[n - 1].derivative()] if n >= 1 else [])
        basis = [q for q in basis if not q.is_zero()]
        length = n + 1
        T = np.hstack(list(target.padded(length)[:length]))
        if not basis:
            out.a.append(zero)
            out.b.append(zero)
            out.residuals.append(norm(T) / max(P[n].norm(), 1.0))
            continue
        B = np.vstack([np.hstack(list(c)) for c in stack_polys(basis, length)])
        X, *_ = scipy.linalg.lstsq(B.T, T.T)
        X = X.T
        out.a.append(X[:, :m])
        out.b.append(X[:, m:2 * m] if len(basis) > 1 else zero)
        out.residuals.append(norm(X @ B - T) / max(P[n].norm(), 1.0))
    return out

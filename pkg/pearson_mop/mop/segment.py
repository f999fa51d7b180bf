"""모닉 MOP 구간 계산과 3항 점화식

P_k = x^k I + Σ_{i<k} π_i^{(k)} x^i 의 계수 행은
(π_0, …, π_{k−1}) Δ_{k−1} = −(μ_k, …, μ_{2k−1}) 를 풀어 얻습니다.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import InvalidRecurrence, RecurrenceBlocked, SingularSystem
from ..functional import Functional, bracket, delta, from_moments
from ..linalg import (
    CMatrix, MatrixPolynomial, Tolerance, as_cmatrix, is_nonsingular, norm, resolve_tol,
    solve_block_row, solve_right,
)

logger = logging.getLogger(__name__)


@dataclass
class MonicSegment:
    """모닉 MOP 구간 P_0..P_N

    Attributes:
        polys: P_0..P_N (deg P_k = k, 최고차 계수 I)
        E: E_k = ⟨x^k P_k, u⟩
        pi: π_k (P_k 의 x^{k−1} 계수, π_0 = 0)
        beta: β_k = π_k − π_{k+1} (k ≤ N−1)
        gamma: γ_k = E_k E_{k−1}^{-1} (1 ≤ k ≤ N, gamma[0] 은 0 행렬)
        horizon_flag: Δ_{N+1} 이 특이하거나 모멘트를 더 만들 수 없어 구간이 최대임
        extra: Δ_{N+1} 이 특이할 때 ℙ_N 에 직교하는 유일한 모닉 P_{N+1}
        blocked_moment: 생성할 수 없었던 첫 모멘트 인덱스
    """
    dim: int
    polys: List[MatrixPolynomial]
    E: List[CMatrix]
    pi: List[CMatrix]
    beta: List[CMatrix] = field(default_factory=list)
    gamma: List[CMatrix] = field(default_factory=list)
    horizon_flag: bool = False
    extra: Optional[MatrixPolynomial] = None
    blocked_moment: Optional[int] = None
    requested: int = 0
    functional: Optional[Functional] = field(default=None, repr=False)

    @property
    def N(self) -> int:
        return len(self.polys) - 1

    @property
    def length(self) -> int:
        return len(self.polys)

    def P(self, k: int) -> MatrixPolynomial:
        """P_k, P_{−1} = 0"""
        if k < 0:
            return MatrixPolynomial.zero(self.dim)
        return self.polys[k]

    def orthogonality_residual(self, u: Optional[Functional] = None) -> float:
        """max_{j<k≤N} ‖⟨x^j P_k, u⟩‖ / ‖E_k‖"""
        u = u or self.functional
        worst = 0.0
        for k in range(1, self.length):
            scale = max(norm(self.E[k]), 1e-300)
            for j in range(k):
                worst = max(worst, norm(bracket(self.polys[k].shift(j), u)) / scale)
        return worst


def _monic_from_row(row: Sequence[CMatrix], k: int, m: int) -> MatrixPolynomial:
    coeffs = list(row) + [np.eye(m, dtype=complex)]
    return MatrixPolynomial.from_coefficients(coeffs, dim=m)


def _is_singular_norm(E: CMatrix, scale: float, tol: Tolerance) -> bool:
    """E_k 의 최소 특이값이 tol.rel·‖μ_{2k}‖ 이하이면 특이"""
    smin = float(np.linalg.svd(E, compute_uv=False)[-1])
    return smin <= tol.rel * max(scale, tol.abs) or not is_nonsingular(E, tol)


def compute_segment(u: Functional, N: int, tol: Optional[Tolerance] = None,
                    blocked_as_horizon: bool = True) -> MonicSegment:
    """유일한 모닉 구간 P_0..P_N

    Δ_k 가 특이하면 거기서 멈추고 horizon_flag 와 extra 다항식을 기록합니다.
    SingularSystem 은 오류가 아니라 구간 종료로 처리됩니다.

    Raises:
        RecurrenceBlocked: blocked_as_horizon=False 이고 모멘트 생성이 막혔을 때
    """
    tol = resolve_tol(tol)
    m = u.dim
    seg = MonicSegment(dim=m, polys=[], E=[], pi=[], requested=N, functional=u)

    def fetch(n: int) -> bool:
        try:
            u.moment(n)
            return True
        except RecurrenceBlocked:
            if not blocked_as_horizon:
                raise
            seg.horizon_flag = True
            seg.blocked_moment = n
            logger.warning(f"모멘트 μ_{n} 생성 불가로 구간이 P_{len(seg.polys) - 1} 에서 끝납니다")
            return False

    if not fetch(0):
        return seg
    for k in range(N + 1):
        if k == 0:
            P = MatrixPolynomial.identity(m)
            row: List[CMatrix] = []
        else:
            if not fetch(2 * k - 1):
                break
            mus = u.moments(2 * k)
            rhs = [-mus[k + j] for j in range(k)]
            try:
                row = solve_block_row(delta(u, k - 1), rhs, tol)
            except SingularSystem:
                seg.horizon_flag = True
                logger.warning(f"Δ_{k - 1} 특이: 구간이 P_{k - 1} 에서 끝납니다")
                break
            P = _monic_from_row(row, k, m)
        if not fetch(2 * k):
            # P_k 는 결정되었지만 E_k 를 알 수 없음
            break
        mus = u.moments(2 * k + 1)
        E = mus[2 * k] + sum((row[i] @ mus[i + k] for i in range(k)), np.zeros((m, m), dtype=complex))
        if _is_singular_norm(E, norm(mus[2 * k]), tol):
            seg.horizon_flag = True
            seg.extra = P
            logger.info(f"Δ_{k} 특이: 최대 구간 P_0..P_{k - 1}, 추가 다항식 P_{k}")
            break
        seg.polys.append(P)
        seg.E.append(E)
        seg.pi.append(row[k - 1] if k >= 1 else np.zeros((m, m), dtype=complex))

    _fill_recurrence(seg)
    logger.debug(f"구간 계산 완료: {u.name}, N={seg.N}, horizon={seg.horizon_flag}")
    return seg


def _fill_recurrence(seg: MonicSegment) -> None:
    n = seg.length
    seg.beta = [seg.pi[k] - seg.pi[k + 1] for k in range(n - 1)]
    seg.gamma = [np.zeros((seg.dim, seg.dim), dtype=complex)]
    seg.gamma += [solve_right(seg.E[k], seg.E[k - 1]) for k in range(1, n)]


def recurrence_coefficients(seg: MonicSegment) -> Tuple[List[CMatrix], List[CMatrix]]:
    """(β_k, γ_k): β_k = π_k − π_{k+1}, γ_k = E_k E_{k−1}^{-1}"""
    if seg.length < 2:
        raise InvalidRecurrence("점화식 계수에는 길이 2 이상의 구간이 필요합니다")
    if not seg.beta:
        _fill_recurrence(seg)
    residual = max(recurrence_residuals(seg), default=0.0)
    if residual > 1e-6:
        logger.warning(f"3항 점화식 잔차가 큽니다: {residual:.3e}")
    return seg.beta, seg.gamma


def recurrence_residuals(seg: MonicSegment) -> List[float]:
    """‖xP_k − P_{k+1} − β_kP_k − γ_kP_{k−1}‖ / ‖P_k‖, k ≤ N−1"""
    out = []
    for k in range(seg.length - 1):
        P = seg.P(k)
        r = P.shift(1) - seg.P(k + 1) - P.lmul(seg.beta[k]) - seg.P(k - 1).lmul(seg.gamma[k])
        out.append(r.norm() / max(P.norm(), 1.0))
    return out


def favard_roundtrip(beta: Sequence, gamma: Sequence, mu0, tol: Optional[Tolerance] = None,
                     name: str = "favard") -> Functional:
    """점화식 계수에서 모멘트 μ_0..μ_{2N} 재구성

    x^n I = Σ_j c_{n,j} P_j 로 전개하면 μ_n = c_{n,0} μ_0.
    gamma[0] 은 무시하며 γ_1..γ_N 은 정칙이어야 합니다.

    Raises:
        InvalidRecurrence: 특이 γ_k
    """
    tol = resolve_tol(tol)
    mu0 = as_cmatrix(mu0)
    m = mu0.shape[0]
    N = len(gamma) - 1
    betas = [as_cmatrix(b, m) for b in beta]
    gammas = [as_cmatrix(g, m) for g in gamma]
    for k in range(1, N + 1):
        if not is_nonsingular(gammas[k], tol):
            raise InvalidRecurrence(f"γ_{k} 가 특이합니다")
    size = 2 * N + 2
    zero = np.zeros((m, m), dtype=complex)

    def b(j: int) -> CMatrix:
        return betas[j] if j < len(betas) else zero

    def g(j: int) -> CMatrix:
        return gammas[j] if 1 <= j <= N else zero

    c = [zero.copy() for _ in range(size + 1)]
    c[0] = np.eye(m, dtype=complex)
    moments = [mu0]
    for n in range(1, 2 * N + 1):
        nxt = [zero.copy() for _ in range(size + 1)]
        for j in range(min(n, size) + 1):
            acc = c[j] @ b(j)
            if j >= 1:
                acc = acc + c[j - 1]
            if j + 1 <= size:
                acc = acc + c[j + 1] @ g(j + 1)
            nxt[j] = acc
        c = nxt
        moments.append(c[0] @ mu0)
    return from_moments(moments, name=name)


def shifted_bracket(P: MatrixPolynomial, v: Functional, k: int) -> Tuple[CMatrix, float]:
    """⟨x^k P, v⟩ 와 항 노름의 합 (상쇄 판정용 척도)"""
    out = np.zeros((v.dim, v.dim), dtype=complex)
    scale = 0.0
    for i, p in enumerate(P.coeffs):
        term = p @ v.moment(i + k)
        out += term
        scale += norm(term)
    return out, scale


def quasi_orthogonality_order(seg: MonicSegment, v: Functional, pmax: int,
                              tol: Optional[Tolerance] = None) -> Optional[int]:
    """⟨x^k P_n, v⟩ = 0 (k ≤ n−p−1) 를 만족하는 최소 p ≤ pmax

    Returns:
        차수 p, 없으면 None (준직교가 아님)
    """
    tol = resolve_tol(tol)
    vanishing = []
    for n in range(seg.length):
        row = []
        for k in range(n):
            value, scale = shifted_bracket(seg.polys[n], v, k)
            row.append(norm(value) <= tol.zero_rel * scale + tol.abs)
        vanishing.append(row)
    for p in range(pmax + 1):
        if all(all(row[: max(n - p, 0)]) for n, row in enumerate(vanishing)):
            return p
    return None

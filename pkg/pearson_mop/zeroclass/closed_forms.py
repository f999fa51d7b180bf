"""영류의 닫힌 형태 E_n, π_n, Π_n 과 존재 판정

E_n = (−1)^n n! E_0 α(X_0)M_0M_1^{-1} ⋯ α(X_{n−1})M_{2n−2}V_{n−1}^{-1},
π_n = nE_0^{(n−1)}N_{n−1}M_{2n−2}^{-1}(E_0^{(n−1)})^{-1},
E_0^{(j)} = E_0 Π_{i<j} α(X_i)M_{2i}M_{2i+1}^{-1}.
곱의 순서는 표시된 그대로이며 Hankel 계산과 교차검증합니다.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional, Tuple

import numpy as np

from ..errors import ClosedFormBlocked
from ..linalg import CMatrix, Tolerance, is_nonsingular, norm, resolve_tol, solve_right
from ..models import ExistenceKind, ExistenceVerdict
from ..mop import MonicSegment, compute_segment
from .spec import Ladders, ZeroClassSpec

logger = logging.getLogger(__name__)


def _ladders(spec: ZeroClassSpec, ladders: Optional[Ladders], tol: Optional[Tolerance]) -> Ladders:
    return ladders if ladders is not None else Ladders.of(spec, tol)


def _require(L: Ladders, A: CMatrix, index: int, factor: str) -> CMatrix:
    if not is_nonsingular(A, L.tol):
        raise ClosedFormBlocked(index, factor)
    return A


def shifted_E0(spec: ZeroClassSpec, j: int, ladders: Optional[Ladders] = None,
               tol: Optional[Tolerance] = None) -> CMatrix:
    """E_0^{(j)}: u^{(j)} = uα^j 의 μ_0"""
    L = _ladders(spec, ladders, tol)
    out = spec.mu0.copy()
    for i in range(j):
        factor = L.alphaeval(i) @ L.M(2 * i)
        out = solve_right(out @ factor, L.require_M(2 * i + 1))
    return out


def closed_form_E(spec: ZeroClassSpec, n: int, ladders: Optional[Ladders] = None,
                  tol: Optional[Tolerance] = None) -> CMatrix:
    """E_n 의 닫힌 형태

    Raises:
        ClosedFormBlocked: 특이 사다리 인자
    """
    L = _ladders(spec, ladders, tol)
    if n == 0:
        return spec.mu0.copy()
    out = spec.mu0.copy()
    for j in range(n - 1):
        out = out @ _require(L, L.alphaeval(j), j, "α(X)") @ L.M(2 * j)
        out = solve_right(out, L.require_M(2 * j + 1))
    out = out @ _require(L, L.alphaeval(n - 1), n - 1, "α(X)") @ L.M(2 * n - 2)
    out = out @ L.V_inv(n - 1)
    return (-1) ** n * factorial(n) * out


def closed_form_pi(spec: ZeroClassSpec, n: int, ladders: Optional[Ladders] = None,
                   tol: Optional[Tolerance] = None) -> CMatrix:
    """π_n (P_n 의 x^{n−1} 계수), π_0 = 0"""
    L = _ladders(spec, ladders, tol)
    if n == 0:
        return np.zeros((spec.dim, spec.dim), dtype=complex)
    E0 = shifted_E0(spec, n - 1, L)
    inner = solve_right(L.N(n - 1), L.require_M(2 * n - 2))
    return n * solve_right(E0 @ inner, _require(L, E0, n - 1, "E_0^{(j)}"))


def closed_form_ratios(spec: ZeroClassSpec, n: int, ladders: Optional[Ladders] = None,
                       tol: Optional[Tolerance] = None) -> Tuple[CMatrix, CMatrix]:
    """(Π_n, E_n^{-1}E_{n+1})

    Π_n = nV_{n−1}M_{2n−2}^{-1}N_{n−1}V_{n−1}^{-1},
    E_n^{-1}E_{n+1} = −(n+1)V_{n−1}M_{2n−1}^{-1}α(X_n)M_{2n}V_n^{-1}.
    n = 0 에서는 Π_0 = 0, E_0^{-1}E_1 = −α(X_0)M_1^{-1} 입니다.
    """
    L = _ladders(spec, ladders, tol)
    m = spec.dim
    A = _require(L, L.alphaeval(n), n, "α(X)")
    if n == 0:
        return np.zeros((m, m), dtype=complex), -solve_right(A, L.require_M(1))
    V = L.V(n - 1)
    Vinv = L.V_inv(n - 1)
    Pi = n * V @ np.linalg.solve(L.require_M(2 * n - 2), L.N(n - 1)) @ Vinv
    ratio = -(n + 1) * V @ np.linalg.solve(L.require_M(2 * n - 1), A @ L.M(2 * n)) @ L.V_inv(n)
    return Pi, ratio


@dataclass
class ClosedFormComparison:
    """닫힌 형태와 Hankel 구간의 상대 오차 (n 별)"""
    E: List[float] = field(default_factory=list)
    pi: List[float] = field(default_factory=list)
    Pi: List[float] = field(default_factory=list)
    ratio: List[float] = field(default_factory=list)

    @property
    def worst(self) -> float:
        return max(self.E + self.pi + self.Pi + self.ratio, default=0.0)


def _rel(a: CMatrix, b: CMatrix) -> float:
    return norm(a - b) / max(norm(b), norm(a), 1e-300)


def compare_with_segment(spec: ZeroClassSpec, seg: MonicSegment, tol: Optional[Tolerance] = None,
                         rtol: float = 1e-8) -> ClosedFormComparison:
    """닫힌 형태를 Hankel 구간과 비교 (불일치 시 Hankel 값이 기준)"""
    L = Ladders.of(spec, tol)
    out = ClosedFormComparison()
    for n in range(seg.length):
        E = seg.E[n]
        out.E.append(_rel(closed_form_E(spec, n, L), E))
        out.pi.append(_rel(closed_form_pi(spec, n, L), seg.pi[n]) if n else 0.0)
        if n + 1 < seg.length:
            Pi, ratio = closed_form_ratios(spec, n, L)
            out.Pi.append(_rel(Pi, np.linalg.solve(E, seg.pi[n] @ E)) if n else 0.0)
            out.ratio.append(_rel(ratio, np.linalg.solve(E, seg.E[n + 1])))
    if out.worst > rtol:
        logger.warning(f"닫힌 형태와 Hankel 불일치 {out.worst:.3e}: Hankel 값을 기준으로 사용합니다")
    return out


def existence_check(spec: ZeroClassSpec, n_max: int, tol: Optional[Tolerance] = None,
                    cross_validate: bool = True) -> ExistenceVerdict:
    """M_k (k ≤ 2n_max−1) 와 α(X_j) (j ≤ n_max−1) 의 정칙성으로 최대 구간 판정

    P_0..P_n 은 M_0..M_{2n−1} 과 α(X_0)..α(X_{n−1}) 이 모두 정칙일 때 존재합니다.
    """
    tol = resolve_tol(tol)
    L = Ladders.of(spec, tol)
    if not is_nonsingular(spec.mu0, tol):
        verdict = ExistenceVerdict(ExistenceKind.BLOCKED_AT, -1, ("mu0", 0), "μ_0 가 특이합니다")
        logger.info(f"{spec.name}: μ_0 특이")
        return verdict

    verdict = ExistenceVerdict(ExistenceKind.QUASI_DEFINITE_TO, n_max)
    for n in range(1, n_max + 1):
        blocked = None
        if not L.M_nonsingular(2 * n - 2):
            blocked = ("M", 2 * n - 2)
        elif not L.alphaeval_nonsingular(n - 1):
            blocked = ("alpha", n - 1)
        elif not L.M_nonsingular(2 * n - 1):
            blocked = ("M", 2 * n - 1)
        if blocked is not None:
            label = f"M_{blocked[1]}" if blocked[0] == "M" else f"α(−N_{blocked[1]}M_{2 * blocked[1]}^{{-1}})"
            verdict = ExistenceVerdict(ExistenceKind.BLOCKED_AT, n - 1, blocked,
                                       f"{label} 가 특이하여 최대 구간은 P_0..P_{n - 1} 입니다")
            break

    if cross_validate:
        seg = compute_segment(spec.functional(tol), n_max, tol)
        verdict.hankel_length = seg.N
        verdict.hankel_agrees = seg.N == verdict.max_segment
        if not verdict.hankel_agrees:
            logger.warning(f"{spec.name}: 존재 판정 {verdict.max_segment} 와 Hankel 구간 {seg.N} 불일치")
    logger.info(f"{spec.name}: {verdict.kind.value} (최대 구간 {verdict.max_segment})")
    return verdict

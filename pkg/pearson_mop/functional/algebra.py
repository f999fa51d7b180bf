"""범함수 대수: uQ, Qu, Du, u*, 변수변환, 합동/동치, 브래킷

규약: ⟨P, u⟩ = Σ p_i μ_i (계수가 모멘트의 왼쪽),
uQ 의 모멘트는 Σ_k μ_{n+k} q_k, Qu 의 모멘트는 Σ_k q_k μ_{n+k}.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Tuple

import numpy as np

from ..errors import DimensionMismatch, InvalidTransform, PreconditionViolated
from ..linalg import (
    CMatrix, MatrixPolynomial, Tolerance, adjoint as madjoint, as_cmatrix, cholesky_lower,
    is_hermitian, is_nonsingular, norm, psd_check, resolve_tol,
)
from ..models import PsdVerdict
from .functional import Functional, derived
from .pearson_spec import PearsonSpec

logger = logging.getLogger(__name__)


def _check_dim(u: Functional, Q: MatrixPolynomial) -> None:
    if Q.dim != u.dim:
        raise DimensionMismatch(f"범함수 차원 {u.dim} 과 다항식 차원 {Q.dim} 불일치")


def moment(u: Functional, n: int) -> CMatrix:
    """μ_n = ⟨x^n I, u⟩"""
    return u.moment(n)


def right_multiply(u: Functional, Q: MatrixPolynomial, name: Optional[str] = None) -> Functional:
    """uQ: ν_n = Σ_k μ_{n+k}·q_k"""
    _check_dim(u, Q)
    coeffs = Q.coeffs

    def rule(n: int) -> CMatrix:
        out = np.zeros((u.dim, u.dim), dtype=complex)
        for k, q in enumerate(coeffs):
            out += u.moment(n + k) @ q
        return out

    return derived(rule, u.dim, name or f"({u.name})·Q")


def left_multiply(u: Functional, Q: MatrixPolynomial, name: Optional[str] = None) -> Functional:
    """Qu: ν_n = Σ_k q_k·μ_{n+k}"""
    _check_dim(u, Q)
    coeffs = Q.coeffs

    def rule(n: int) -> CMatrix:
        out = np.zeros((u.dim, u.dim), dtype=complex)
        for k, q in enumerate(coeffs):
            out += q @ u.moment(n + k)
        return out

    return derived(rule, u.dim, name or f"Q·({u.name})")


def derivative(u: Functional) -> Functional:
    """Du: ν_n = −n·μ_{n−1}, ν_0 = 0"""

    def rule(n: int) -> CMatrix:
        if n == 0:
            return np.zeros((u.dim, u.dim), dtype=complex)
        return -n * u.moment(n - 1)

    return derived(rule, u.dim, f"D({u.name})")


def adjoint(u: Functional) -> Functional:
    """u*: ν_n = μ_n*"""
    return derived(lambda n: madjoint(u.moment(n)), u.dim, f"({u.name})*")


def change_of_variable(u: Functional, a: complex, b: complex = 0.0) -> Functional:
    """u_t, t(x) = ax + b: ν_n = Σ_{k≤n} C(n,k) a^k b^{n−k} μ_k"""
    if a == 0:
        raise InvalidTransform("변수변환 t(x) = ax + b 의 a 는 0 이 될 수 없습니다")
    a, b = complex(a), complex(b)

    def rule(n: int) -> CMatrix:
        out = np.zeros((u.dim, u.dim), dtype=complex)
        for k in range(n + 1):
            out += comb(n, k) * a ** k * b ** (n - k) * u.moment(k)
        return out

    return derived(rule, u.dim, f"({u.name})∘({a}x+{b})")


def equivalence(u: Functional, T, S, tol: Optional[Tolerance] = None) -> Functional:
    """TuS: ν_n = T·μ_n·S

    u 에 Pearson 데이터가 있으면 (S^{-1}ΦS, S^{-1}ΨS) 로 옮겨 붙입니다.
    """
    tol = resolve_tol(tol)
    T = as_cmatrix(T, u.dim)
    S = as_cmatrix(S, u.dim)
    if not is_nonsingular(T, tol) or not is_nonsingular(S, tol):
        raise InvalidTransform("동치 변환 행렬 T, S 는 정칙이어야 합니다")
    v = derived(lambda n: T @ u.moment(n) @ S, u.dim, f"T({u.name})S")
    if u.pearson is not None:
        v = v.with_pearson(u.pearson.conjugated(S).with_mu0(T @ u.moment(0) @ S))
    return v


def congruence(u: Functional, T, tol: Optional[Tolerance] = None) -> Functional:
    """TuT*"""
    T = as_cmatrix(T, u.dim)
    return equivalence(u, T, madjoint(T), tol)


def normalize(u: Functional, tol: Optional[Tolerance] = None) -> Tuple[Functional, CMatrix]:
    """μ_0 = LL* 일 때 û = L^{-1}u(L^{-1})* (ν_0 = I) 와 L

    Raises:
        PreconditionViolated: μ_0 가 에르미트 양정치가 아닐 때
    """
    tol = resolve_tol(tol)
    mu0 = u.moment(0)
    if psd_check(mu0, tol) is not PsdVerdict.POSITIVE_DEFINITE:
        raise PreconditionViolated("정규화에는 양정치 에르미트 μ_0 가 필요합니다")
    L = cholesky_lower(mu0)
    return congruence(u, np.linalg.inv(L), tol), L


def bracket(P: MatrixPolynomial, u: Functional) -> CMatrix:
    """⟨P, u⟩ = Σ_i p_i·μ_i"""
    _check_dim(u, P)
    out = np.zeros((u.dim, u.dim), dtype=complex)
    for i, p in enumerate(P.coeffs):
        out += p @ u.moment(i)
    return out


def inner(P: MatrixPolynomial, Q: MatrixPolynomial, u: Functional) -> CMatrix:
    """⟨P, Q⟩_u = ⟨P, uQ*⟩ = Σ_{i,j} p_i μ_{i+j} q_j*"""
    _check_dim(u, P)
    _check_dim(u, Q)
    out = np.zeros((u.dim, u.dim), dtype=complex)
    for i, p in enumerate(P.coeffs):
        for j, q in enumerate(Q.coeffs):
            out += p @ u.moment(i + j) @ madjoint(q)
    return out


def is_hermitian_functional(u: Functional, horizon: int, tol: Optional[Tolerance] = None) -> bool:
    """μ_0..μ_horizon 이 모두 에르미트인지"""
    tol = resolve_tol(tol)
    return all(is_hermitian(u.moment(n), tol) for n in range(horizon + 1))


@dataclass
class PearsonResidual:
    """D(uΦ) = uΨ 의 모멘트별 잔차

    r_n = n Σ_i μ_{n+i−1}φ_i + Σ_j μ_{n+j}ψ_j, 상대값은 항 노름의 합으로 나눈 값
    """
    absolute: List[float] = field(default_factory=list)
    relative: List[float] = field(default_factory=list)

    @property
    def max_relative(self) -> float:
        return max(self.relative, default=0.0)

    @property
    def max_absolute(self) -> float:
        return max(self.absolute, default=0.0)

    @property
    def horizon(self) -> int:
        return len(self.absolute) - 1


def pearson_residual(u: Functional, Phi: MatrixPolynomial, Psi: MatrixPolynomial,
                     horizon: int) -> PearsonResidual:
    """n = 0..horizon 에서 일반 차수 (p, q) Pearson 방정식의 잔차"""
    _check_dim(u, Phi)
    _check_dim(u, Psi)
    result = PearsonResidual()
    for n in range(horizon + 1):
        r = np.zeros((u.dim, u.dim), dtype=complex)
        scale = 0.0
        if n > 0:
            for i, phi in enumerate(Phi.coeffs):
                term = n * u.moment(n + i - 1) @ phi
                r += term
                scale += norm(term)
        for j, psi in enumerate(Psi.coeffs):
            term = u.moment(n + j) @ psi
            r += term
            scale += norm(term)
        result.absolute.append(norm(r))
        result.relative.append(norm(r) / scale if scale > 0 else norm(r))
    return result


def spec_residual(u: Functional, spec: PearsonSpec, horizon: int) -> PearsonResidual:
    return pearson_residual(u, spec.Phi, spec.Psi, horizon)


def moments_close(u: Functional, v: Functional, horizon: int, rtol: float = 1e-8) -> Tuple[bool, float]:
    """μ_n(u), μ_n(v) 의 최대 상대 오차 비교 (n ≤ horizon)"""
    if u.dim != v.dim:
        raise DimensionMismatch(f"범함수 차원 불일치: {u.dim} != {v.dim}")
    worst = 0.0
    for n in range(horizon + 1):
        a, b = u.moment(n), v.moment(n)
        # 상쇄로 0 이 된 모멘트는 이웃 모멘트 크기로 비교
        scale = max(norm(a), norm(b), norm(u.moment(n - 1)) if n else 0.0)
        if scale == 0.0:
            continue
        worst = max(worst, norm(a - b) / scale)
    return worst <= rtol, worst


def require_pearson(u: Functional) -> PearsonSpec:
    if u.pearson is None:
        raise PreconditionViolated(f"범함수 {u.name} 에 Pearson 데이터가 없습니다")
    return u.pearson

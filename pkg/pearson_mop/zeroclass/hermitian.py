"""에르미트 영류: 실수성 장애, 유니터리 대각화, 이중근 양정치성 가드"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from ..config.env_config import get_settings
from ..errors import HypothesisViolated, PreconditionViolated, RecurrenceBlocked
from ..functional import Functional, delta, normalize
from ..linalg import (
    CMatrix, Tolerance, adjoint, commutator, commutes, is_diagonal, is_hermitian, norm, offdiag_norm,
    psd_check, resolve_tol, simultaneous_unitary_diagonalizer,
)
from ..models import DiagonalizabilityKind, DiagonalizabilityReport, GuardKind, GuardReport, PsdVerdict
from .canonical import _is_double_root
from .spec import ZeroClassSpec

logger = logging.getLogger(__name__)


def alpha_reality(alpha) -> Tuple[float, float, float]:
    """A_0 = Im(ᾱ_0α_1), A_1 = 2Im(ᾱ_0α_2), A_2 = Im(ᾱ_1α_2)

    모두 0 이면 α 는 상수 인자를 제외하고 실계수입니다.
    """
    a0, a1, a2 = (complex(a) for a in alpha)
    return ((a0.conjugate() * a1).imag, 2 * (a0.conjugate() * a2).imag, (a1.conjugate() * a2).imag)


def hermiticity_obstruction(u: Functional, spec: ZeroClassSpec, n: int,
                            tol: Optional[Tolerance] = None) -> CMatrix:
    """ψ_0*μ_{n+1}ψ_1 − ψ_1*μ_{n+1}ψ_0 − 2i·n(n+1)(A_0μ_{n−1} + A_1μ_n + A_2μ_{n+1})

    Raises:
        HypothesisViolated: μ_{n−2}..μ_{n+2} 중 에르미트가 아닌 모멘트가 있을 때
    """
    tol = resolve_tol(tol)
    bad = [k for k in range(max(n - 2, 0), n + 3) if not is_hermitian(u.moment(k), tol)]
    if bad:
        raise HypothesisViolated(bad)
    p0, p1 = spec.psi0, spec.psi1
    mu = u.moment(n + 1)
    lhs = adjoint(p0) @ mu @ p1 - adjoint(p1) @ mu @ p0
    A0, A1, A2 = alpha_reality(spec.alpha)
    rhs = A1 * u.moment(n) + A2 * mu
    if n >= 1:
        rhs = rhs + A0 * u.moment(n - 1)
    return lhs - 2j * n * (n + 1) * rhs


def commutator_obstruction(u: Functional, spec: ZeroClassSpec, n: int,
                           tol: Optional[Tolerance] = None) -> CMatrix:
    """μ_0 = I 일 때의 형태: ψ_1*[μ_{n+1}, μ_1]ψ_1 − 2i·n(n+1)(A_0μ_{n−1} + A_1μ_n + A_2μ_{n+1})"""
    tol = resolve_tol(tol)
    if norm(u.moment(0) - np.eye(u.dim)) > tol.bound(1.0) or not is_hermitian(u.moment(1), tol):
        raise PreconditionViolated("교환자 형태에는 μ_0 = I 와 에르미트 μ_1 이 필요합니다")
    bad = [k for k in range(max(n - 2, 0), n + 3) if not is_hermitian(u.moment(k), tol)]
    if bad:
        raise HypothesisViolated(bad)
    p1 = spec.psi1
    lhs = adjoint(p1) @ commutator(u.moment(n + 1), u.moment(1)) @ p1
    A0, A1, A2 = alpha_reality(spec.alpha)
    rhs = A1 * u.moment(n) + A2 * u.moment(n + 1)
    if n >= 1:
        rhs = rhs + A0 * u.moment(n - 1)
    return lhs - 2j * n * (n + 1) * rhs


def _first_noncommuting(moments: List[CMatrix], tol: Tolerance) -> Optional[Tuple[int, int, float]]:
    for i in range(len(moments)):
        for j in range(i):
            if not commutes(moments[i], moments[j], tol):
                return i, j, norm(commutator(moments[i], moments[j]))
    return None


def _verify_diagonal(T: CMatrix, moments: List[CMatrix], tol: Tolerance) -> Optional[int]:
    for n, mu in enumerate(moments):
        if not is_diagonal(T @ mu @ adjoint(T), tol.loosened(10.0)):
            return n
    return None


def diagonalizability_report(u: Functional, spec: Optional[ZeroClassSpec] = None,
                             horizon: Optional[int] = None,
                             tol: Optional[Tolerance] = None) -> DiagonalizabilityReport:
    """유니터리 대각화 가능성

    μ_0 > 0 이면 합동으로 μ_0 = I 로 정규화한 뒤 (i) [μ_2, μ_1] = 0 또는 (ii) Δ_2 > 0 을 확인하고
    μ_1, μ_2 의 동시 대각화 T 를 구해 n ≤ horizon 의 모든 Tμ_nT* 가 대각인지 검증합니다.
    μ_0 가 양정치가 아니면 모멘트들의 교환성으로 직접 판정합니다.
    """
    tol = resolve_tol(tol)
    horizon = get_settings().test_horizon(2) if horizon is None else horizon
    report = DiagonalizabilityReport(DiagonalizabilityKind.INCONCLUSIVE, horizon=horizon)
    try:
        moments = u.moments(max(horizon, 5) + 1)
    except RecurrenceBlocked as e:
        report.conditions.append(f"모멘트 생성 실패: {e}")
        return report
    nonherm = [k for k in range(6) if not is_hermitian(moments[k], tol)]
    report.conditions.append(f"μ_n 에르미트 (n ≤ 5): {not nonherm}")
    if nonherm:
        report.witness = f"비에르미트 모멘트 {nonherm}"
        return report
    if spec is not None:
        report.conditions.append(f"α 실수성 A = {alpha_reality(spec.alpha)}")

    pd0 = psd_check(moments[0], tol) is PsdVerdict.POSITIVE_DEFINITE
    report.conditions.append(f"Δ_0 > 0: {pd0}")
    if not pd0:
        pd2 = psd_check(delta(u, 2), tol) is PsdVerdict.POSITIVE_DEFINITE
        report.conditions.append(f"Δ_2 > 0: {pd2}")
        hit = _first_noncommuting(moments[: horizon + 1], tol)
        if hit is not None:
            i, j, size = hit
            report.kind = DiagonalizabilityKind.NOT_DIAGONALIZABLE
            report.witness = f"[μ_{i}, μ_{j}] ≠ 0"
            report.witness_norm = size
            return report
        T = simultaneous_unitary_diagonalizer(moments[: horizon + 1], tol)
        if T is not None:
            report.kind = DiagonalizabilityKind.UNITARILY_DIAGONALIZABLE
            report.unitary = T
            report.congruence = T
        return report

    v, L = normalize(u, tol)
    hat = v.moments(horizon + 1)
    c21 = commutes(hat[2], hat[1], tol)
    pd2 = psd_check(delta(v, 2), tol) is PsdVerdict.POSITIVE_DEFINITE
    report.conditions.append(f"[μ_2, μ_1] = 0: {c21}")
    report.conditions.append(f"Δ_2 > 0: {pd2}")
    if not c21:
        report.kind = DiagonalizabilityKind.NOT_DIAGONALIZABLE
        report.witness = "[μ_2, μ_1] ≠ 0"
        report.witness_norm = norm(commutator(hat[2], hat[1]))
        if pd2:
            logger.warning(f"{u.name}: Δ_2 > 0 인데 [μ_2, μ_1] ≠ 0 (α 비실수 또는 수치 불일치)")
        return report

    T = simultaneous_unitary_diagonalizer([hat[1], hat[2]], tol)
    if T is None:
        return report
    failed = _verify_diagonal(T, hat, tol)
    if failed is not None:
        report.kind = DiagonalizabilityKind.NOT_DIAGONALIZABLE
        report.witness = f"Tμ_{failed}T* 비대각"
        report.witness_norm = offdiag_norm(T @ hat[failed] @ adjoint(T))
        return report
    report.kind = DiagonalizabilityKind.UNITARILY_DIAGONALIZABLE
    report.unitary = T
    report.congruence = T @ np.linalg.inv(L)
    logger.info(f"{u.name}: 유니터리 대각화 가능 (μ_n, n ≤ {horizon} 검증)")
    return report


def bessel_positivity_guard(spec: ZeroClassSpec, u: Optional[Functional] = None,
                            tol: Optional[Tolerance] = None) -> GuardReport:
    """이중근 α 를 갖는 영류 범함수는 양정치일 수 없음을 확인

    Raises:
        PreconditionViolated: α 가 이중근을 갖지 않을 때
    """
    tol = resolve_tol(tol)
    if spec.alpha_degree != 2 or not _is_double_root(spec.alpha, tol):
        raise PreconditionViolated(f"α = {spec.alpha} 는 이중근을 갖지 않습니다")
    u = u if u is not None else spec.functional(tol)
    details = {"alpha": [str(a) for a in spec.alpha]}
    try:
        verdicts = [psd_check(delta(u, k), tol) for k in range(3)]
    except RecurrenceBlocked as e:
        details["blocked"] = str(e)
        return GuardReport(GuardKind.CONSISTENT, details)
    details["hankel"] = [v.value for v in verdicts]
    if all(v is PsdVerdict.POSITIVE_DEFINITE for v in verdicts):
        logger.error(f"{u.name}: 이중근 α 인데 Δ_2 가 양정치입니다")
        return GuardReport(GuardKind.VIOLATION, details)
    return GuardReport(GuardKind.CONSISTENT, details)

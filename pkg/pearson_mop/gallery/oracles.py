"""가중치 적분 모멘트 오라클

Pearson 점화식과 독립적인 기준값을 주기 위해 고전 스칼라 가중치의
모멘트를 닫힌 형태(scipy.special)나 적응 구적(scipy.integrate)으로 계산합니다.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import scipy.linalg
from scipy import integrate, special

from ..config.env_config import get_settings
from ..errors import InvalidParameter
from ..linalg import CMatrix, Tolerance, as_cmatrix, commutes

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * np.pi


def _require_index(k: int) -> None:
    if k < 0:
        raise InvalidParameter(f"모멘트 인덱스는 음수가 될 수 없습니다: {k}")


def _require_exponent(name: str, value: float) -> None:
    if not value > -1:
        raise InvalidParameter(f"{name} > −1 이 필요합니다: {name} = {value}")


def gaussian_moments(k: int) -> float:
    """∫ x^k e^{−x²} dx (ℝ)"""
    _require_index(k)
    if k % 2:
        return 0.0
    return float(special.gamma((k + 1) / 2))


def gamma_moments(r: float, k: int) -> float:
    """∫₀^∞ x^{r+k} e^{−x} dx = Γ(r+k+1)"""
    _require_exponent("r", r)
    _require_index(k)
    return float(special.gamma(r + k + 1))


def gamma_log_moments(r: float, k: int) -> float:
    """∫₀^∞ x^{r+k} e^{−x} ln x dx = Γ(r+k+1)·ψ(r+k+1)"""
    _require_exponent("r", r)
    _require_index(k)
    z = r + k + 1
    return float(special.gamma(z) * special.digamma(z))


def jacobi_moments(r: float, s: float, k: int) -> float:
    """∫_{−1}^{1} x^k (1+x)^r (1−x)^s dx

    k//2 + 1 점 Gauss–Jacobi 규칙은 차수 k 다항식에 대해 정확합니다.
    """
    _require_exponent("r", r)
    _require_exponent("s", s)
    _require_index(k)
    nodes, weights = special.roots_jacobi(k // 2 + 1, s, r)
    return float(np.sum(weights * nodes ** k))


LOG_BRANCHES = {"1+x": "alg-loga", "1-x": "alg-logb"}


def jacobi_log_moments(r: float, s: float, k: int, branch: str) -> float:
    """∫_{−1}^{1} x^k (1+x)^r (1−x)^s ln(1±x) dx (QAWS 구적)"""
    _require_exponent("r", r)
    _require_exponent("s", s)
    _require_index(k)
    if branch not in LOG_BRANCHES:
        raise InvalidParameter(f"지원하지 않는 로그 분기입니다: {branch}")
    settings = get_settings()
    value, err = integrate.quad(lambda x: x ** k, -1.0, 1.0, weight=LOG_BRANCHES[branch],
                                wvar=(r, s), epsabs=1e-14, epsrel=settings.quad_epsrel, limit=200)
    logger.debug(f"Jacobi 로그 모멘트 k={k} ({branch}): {value:.12e} ± {err:.1e}")
    return float(value)


@dataclass(frozen=True)
class CircleParams:
    """단위원 위 Bessel 형 가중치

    r 이 주어지면 x^r e^{B/x}, A 가 주어지면 Σ (A)_k^{-1}B^k x^{−(k+1)} 입니다.
    """
    B: np.ndarray
    r: Optional[int] = None
    A: Optional[np.ndarray] = None

    def __post_init__(self):
        if (self.r is None) == (self.A is None):
            raise InvalidParameter("r 과 A 중 정확히 하나를 지정해야 합니다")
        B = as_cmatrix(self.B)
        object.__setattr__(self, "B", B)
        if self.r is not None:
            if int(self.r) != self.r or self.r < -1:
                raise InvalidParameter(f"r 은 −1 이상의 정수여야 합니다: {self.r}")
            object.__setattr__(self, "r", int(self.r))
            return
        A = as_cmatrix(self.A, B.shape[0])
        if not commutes(A, B, Tolerance()):
            raise InvalidParameter("A 와 B 는 교환해야 합니다")
        for lam in np.linalg.eigvals(A):
            if abs(lam.imag) < 1e-12 and lam.real < 0.5 and abs(lam.real - round(lam.real)) < 1e-12:
                raise InvalidParameter(f"A 의 고유값 {lam} 이 0 이하 정수입니다")
        object.__setattr__(self, "A", A)

    @property
    def dim(self) -> int:
        return self.B.shape[0]


def pochhammer(A: CMatrix, n: int) -> CMatrix:
    """(A)_n = A(A+I)⋯(A+(n−1)I), (A)_0 = I"""
    A = as_cmatrix(A)
    eye = np.eye(A.shape[0], dtype=complex)
    out = eye.copy()
    for j in range(n):
        out = out @ (A + j * eye)
    return out


def circle_bessel_moments(params: CircleParams, n: int) -> CMatrix:
    """∮ x^n W(x) dx, 단위원 양의 방향 (x^{−1} 계수 추출)

    x^r e^{B/x} 에서는 정수 n 이면 음수도 허용되며 n + r + 1 < 0 이면 0 입니다.
    """
    m = params.dim
    if params.r is not None:
        k = n + params.r + 1
        if k < 0:
            return np.zeros((m, m), dtype=complex)
        return TWO_PI_I * np.linalg.matrix_power(params.B, k) / special.factorial(k, exact=True)
    _require_index(n)
    return TWO_PI_I * np.linalg.solve(pochhammer(params.A, n), np.linalg.matrix_power(params.B, n))


# 행렬 지수 가중치족: (지수 X(x), 구간)
_FAMILY_EXPONENTS: Dict[str, Tuple[Callable[[float, CMatrix, CMatrix], CMatrix], float, float]] = {
    "hermite": (lambda x, A, B: A * x - B * (x * x), -np.inf, np.inf),
    "laguerre": (lambda x, A, B: A * np.log(x) - B * x, 0.0, np.inf),
    "jacobi": (lambda x, A, B: A * np.log1p(x) + B * np.log1p(-x), -1.0, 1.0),
}


def _check_family(kind: str, A: CMatrix, B: CMatrix) -> None:
    if kind not in _FAMILY_EXPONENTS:
        raise InvalidParameter(f"알 수 없는 가중치족입니다: {kind}")
    if not commutes(A, B, Tolerance()):
        raise InvalidParameter("A 와 B 는 교환해야 합니다")
    eig_a = np.linalg.eigvals(A).real
    eig_b = np.linalg.eigvals(B).real
    if kind == "hermite" and np.min(eig_b) <= 0:
        raise InvalidParameter("e^{Ax−Bx²} 에는 Re spec(B) > 0 이 필요합니다")
    if kind == "laguerre" and (np.min(eig_a) <= -1 or np.min(eig_b) <= 0):
        raise InvalidParameter("x^A e^{−Bx} 에는 Re spec(A) > −1, Re spec(B) > 0 이 필요합니다")
    if kind == "jacobi" and (np.min(eig_a) <= -1 or np.min(eig_b) <= -1):
        raise InvalidParameter("(1+x)^A(1−x)^B 에는 Re spec(A), Re spec(B) > −1 이 필요합니다")


def matrix_family_mu0(kind: str, A, B) -> CMatrix:
    """교환하는 A, B 에 대한 행렬 지수 가중치의 μ_0 = ∫ expm(X(x)) dx

    Args:
        kind: "hermite" (e^{Ax}e^{−Bx²}), "laguerre" (x^A e^{−Bx}), "jacobi" ((1+x)^A(1−x)^B)
    """
    A = as_cmatrix(A)
    B = as_cmatrix(B, A.shape[0])
    _check_family(kind, A, B)
    exponent, lo, hi = _FAMILY_EXPONENTS[kind]
    m = A.shape[0]
    settings = get_settings()

    def integrand(x: float) -> np.ndarray:
        return scipy.linalg.expm(exponent(x, A, B)).reshape(-1)

    value, err = integrate.quad_vec(integrand, lo, hi, epsrel=settings.quad_epsrel, epsabs=1e-13)
    logger.debug(f"{kind} 가중치족 μ_0 구적 오차 추정 {err:.1e}")
    return np.asarray(value, dtype=complex).reshape(m, m)

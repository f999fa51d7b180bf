"""스칼라 고전 가중치 × 행렬 다항식 핵

행렬 가중치 W(x) = Σ_t w_t(x)·x^{s_t}·K_t(x)·(로그 인자) 의 모멘트를
스칼라 모멘트 오라클의 선형결합으로 정확하게 계산합니다.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import special

from ..errors import DimensionMismatch, InvalidParameter
from ..functional import Functional, PearsonSpec, from_oracle
from ..linalg import CMatrix, MatrixPolynomial, poly_mul
from .oracles import (
    CircleParams, circle_bessel_moments, gamma_log_moments, gamma_moments, gaussian_moments,
    jacobi_log_moments, jacobi_moments,
)

logger = logging.getLogger(__name__)


class ScalarWeight(ABC):
    """고전 스칼라 가중치 w 와 그 Pearson 데이터 D(αw) = wβ

    리스코프 치환 원칙: 모든 가중치는 moment/log_moment 계약을 동일하게 따름
    """

    name: str = "weight"

    @abstractmethod
    def moment(self, k: int) -> complex:
        """∫ x^k w(x) dx"""

    def log_moment(self, k: int, branch: str) -> complex:
        """∫ x^k w(x) ln(branch) dx"""
        raise InvalidParameter(f"{self.name} 가중치는 로그 분기 {branch} 를 지원하지 않습니다")

    @property
    @abstractmethod
    def alpha(self) -> Tuple[complex, complex, complex]:
        """α = α_0 + α_1x + α_2x²"""

    @property
    @abstractmethod
    def beta(self) -> Tuple[complex, complex]:
        """β = β_0 + β_1x"""


@dataclass(frozen=True)
class GaussianWeight(ScalarWeight):
    """e^{−σ(x−c)²}, x ∈ ℝ"""
    sigma: float = 1.0
    center: float = 0.0
    name: str = "gaussian"

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidParameter(f"σ > 0 이 필요합니다: {self.sigma}")

    def moment(self, k: int) -> complex:
        # x = c + y, ∫ y^j e^{−σy²} dy = σ^{−(j+1)/2}·∫ t^j e^{−t²} dt
        total = 0.0
        for j in range(0, k + 1, 2):
            total += (special.comb(k, j, exact=True) * self.center ** (k - j)
                      * self.sigma ** (-(j + 1) / 2) * gaussian_moments(j))
        return total

    @property
    def alpha(self):
        return (1.0, 0.0, 0.0)

    @property
    def beta(self):
        return (2 * self.sigma * self.center, -2 * self.sigma)


@dataclass(frozen=True)
class GammaWeight(ScalarWeight):
    """x^r e^{−x}, x ∈ (0, ∞)"""
    r: float = 0.0
    name: str = "gamma"

    def __post_init__(self):
        if not self.r > -1:
            raise InvalidParameter(f"r > −1 이 필요합니다: {self.r}")

    def moment(self, k: int) -> complex:
        return gamma_moments(self.r, k)

    def log_moment(self, k: int, branch: str) -> complex:
        if branch != "x":
            return super().log_moment(k, branch)
        return gamma_log_moments(self.r, k)

    @property
    def alpha(self):
        return (0.0, 1.0, 0.0)

    @property
    def beta(self):
        return (self.r + 1, -1.0)


@dataclass(frozen=True)
class JacobiWeight(ScalarWeight):
    """(1+x)^r (1−x)^s, x ∈ (−1, 1)"""
    r: float = 0.0
    s: float = 0.0
    name: str = "jacobi"

    def __post_init__(self):
        if not (self.r > -1 and self.s > -1):
            raise InvalidParameter(f"r, s > −1 이 필요합니다: r={self.r}, s={self.s}")

    def moment(self, k: int) -> complex:
        return jacobi_moments(self.r, self.s, k)

    def log_moment(self, k: int, branch: str) -> complex:
        return jacobi_log_moments(self.r, self.s, k, branch)

    @property
    def alpha(self):
        return (1.0, 0.0, -1.0)

    @property
    def beta(self):
        return (self.r - self.s, -(self.r + self.s + 2))


@dataclass(frozen=True)
class CircleWeight(ScalarWeight):
    """x^r e^{B/x}, 단위원 (스칼라 B)"""
    r: int = 0
    B: complex = 1.0
    name: str = "circle"

    def __post_init__(self):
        CircleParams(B=self.B, r=self.r)

    def moment(self, k: int) -> complex:
        return complex(circle_bessel_moments(CircleParams(B=self.B, r=self.r), k)[0, 0])

    @property
    def alpha(self):
        return (0.0, 0.0, 1.0)

    @property
    def beta(self):
        return (-self.B, self.r + 2)


def entrywise(table: Sequence[Sequence[Sequence[complex]]]) -> MatrixPolynomial:
    """성분별 스칼라 계수표 [[c_ij]] 로 행렬 다항식을 만듭니다

    table[i][j] 는 성분 (i, j) 의 계수 (c_0, c_1, …) 입니다.
    """
    m = len(table)
    if any(len(row) != m for row in table):
        raise DimensionMismatch("정방 계수표가 필요합니다")
    length = max(len(c) for row in table for c in row)
    arr = np.zeros((max(length, 1), m, m), dtype=complex)
    for i, row in enumerate(table):
        for j, coeffs in enumerate(row):
            arr[: len(coeffs), i, j] = coeffs
    return MatrixPolynomial(arr, dim=m)


@dataclass(frozen=True)
class WeightTerm:
    """w(x)·x^shift·K(x)·ln(branch) 한 항"""
    weight: ScalarWeight
    kernel: MatrixPolynomial
    log: Optional[str] = None
    shift: int = 0


class MatrixWeight:
    """항들의 합으로 주어진 행렬 가중치와 그 모멘트 오라클"""

    def __init__(self, terms: List[WeightTerm], name: str):
        if not terms:
            raise InvalidParameter("가중치 항이 비어 있습니다")
        dims = {t.kernel.dim for t in terms}
        if len(dims) != 1:
            raise DimensionMismatch(f"핵 차원이 서로 다릅니다: {sorted(dims)}")
        self.terms = terms
        self.dim = dims.pop()
        self.name = name

    def _scalar(self, term: WeightTerm, k: int) -> complex:
        if term.log is None:
            return term.weight.moment(k)
        return term.weight.log_moment(k, term.log)

    def moment(self, n: int) -> CMatrix:
        """μ_n = Σ_t Σ_k K_{t,k}·∫x^{n+k+s_t} w_t (ln)"""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for term in self.terms:
            for k, coeff in enumerate(term.kernel.coeffs):
                if np.any(coeff):
                    out += coeff * self._scalar(term, n + k + term.shift)
        return out

    def functional(self, pearson: Optional[PearsonSpec] = None, name: Optional[str] = None) -> Functional:
        return from_oracle(self.moment, self.dim, name or self.name, pearson)

    def scaled(self, factor: MatrixPolynomial, name: str) -> "MatrixWeight":
        """각 핵을 오른쪽에서 factor 로 곱한 가중치 (uQ 의 가중치)"""
        return MatrixWeight([WeightTerm(t.weight, poly_mul(t.kernel, factor), t.log, t.shift)
                             for t in self.terms], name)

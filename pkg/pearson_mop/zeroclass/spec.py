"""영류(zero class) Pearson 방정식 D(uαI) = uΨ 와 사다리 행렬

α(x) = α_0 + α_1x + α_2x², Ψ(x) = ψ_0 + ψ_1x 일 때
M_n = ψ_1 + nα_2I, N_n = ψ_0 + nα_1I, V_n = M_n·M_{n+1}⋯M_{2n+1},
X_n = −N_nM_{2n}^{-1} 이며 α(X_n) = α_0I + α_1X_n + α_2X_n² 입니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from ..errors import ClosedFormBlocked, PreconditionViolated
from ..functional import Functional, PearsonSpec, from_pearson
from ..linalg import (
    CMatrix, MatrixPolynomial, Tolerance, as_cmatrix, is_nonsingular, resolve_tol, solve_right,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroClassSpec:
    """스칼라 α 를 갖는 Pearson 방정식의 데이터

    Attributes:
        alpha: (α_0, α_1, α_2), 모두 0 일 수 없음
        psi0, psi1: Ψ 의 계수
        mu0: μ_0 (생략하면 I)
    """
    alpha: Tuple[complex, complex, complex]
    psi0: np.ndarray
    psi1: np.ndarray
    mu0: Optional[np.ndarray] = None
    name: str = "zeroclass"

    def __post_init__(self):
        alpha = tuple(complex(a) for a in self.alpha) + (0j,) * (3 - len(self.alpha))
        if len(alpha) != 3:
            raise ValueError(f"α 는 차수 2 이하여야 합니다: {self.alpha}")
        if all(a == 0 for a in alpha):
            raise ValueError("α ≡ 0 은 허용되지 않습니다")
        psi1 = as_cmatrix(self.psi1)
        m = psi1.shape[0]
        psi0 = as_cmatrix(self.psi0, m)
        mu0 = np.eye(m, dtype=complex) if self.mu0 is None else as_cmatrix(self.mu0, m)
        for arr in (psi0, psi1, mu0):
            arr.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "psi0", psi0)
        object.__setattr__(self, "psi1", psi1)
        object.__setattr__(self, "mu0", mu0)

    @property
    def dim(self) -> int:
        return self.psi1.shape[0]

    @property
    def alpha_degree(self) -> int:
        for d in (2, 1, 0):
            if self.alpha[d] != 0:
                return d
        return 0

    def alpha_poly(self) -> MatrixPolynomial:
        """α (dim 1)"""
        return MatrixPolynomial.from_scalar(self.alpha, dim=1)

    def alpha_at(self, X) -> CMatrix:
        """α_0I + α_1X + α_2X²"""
        X = as_cmatrix(X, self.dim)
        a0, a1, a2 = self.alpha
        return a0 * np.eye(self.dim) + a1 * X + a2 * (X @ X)

    @property
    def Psi(self) -> MatrixPolynomial:
        return MatrixPolynomial.from_coefficients([self.psi0, self.psi1], dim=self.dim)

    @property
    def pearson(self) -> PearsonSpec:
        """Φ = αI 인 일반 Pearson 쌍"""
        Phi = MatrixPolynomial.from_scalar(self.alpha, dim=self.dim)
        return PearsonSpec(Phi, self.Psi, self.mu0)

    def M(self, n: int) -> CMatrix:
        return self.psi1 + n * self.alpha[2] * np.eye(self.dim)

    def N(self, n: int) -> CMatrix:
        return self.psi0 + n * self.alpha[1] * np.eye(self.dim)

    def with_mu0(self, mu0) -> "ZeroClassSpec":
        return ZeroClassSpec(self.alpha, self.psi0, self.psi1, mu0, self.name)

    def functional(self, tol: Optional[Tolerance] = None) -> Functional:
        """Pearson 점화식으로 생성되는 범함수"""
        return from_pearson(self.pearson, tol, name=self.name)

    @classmethod
    def from_pearson(cls, spec: PearsonSpec, name: str = "zeroclass", atol: float = 0.0) -> "ZeroClassSpec":
        """Φ 가 스칼라×I 인 P_{2,1} 쌍에서 변환

        Raises:
            PreconditionViolated: Φ 가 스칼라 다항식×I 가 아닐 때
        """
        spec.require_p21()
        if not spec.Phi.is_scalar_multiple_of_identity(atol):
            raise PreconditionViolated("영류에는 Φ = α(x)·I 형태가 필요합니다")
        alpha = tuple(spec.Phi.padded(3)[:3, 0, 0])
        return cls(alpha, spec.psi(0), spec.psi(1), spec.mu0, name)


@dataclass
class Ladders:
    """M_n, N_n, V_n, α(X_n) 의 지연 계산 캐시

    V_{−1} 은 정의 V_n = M_n⋯M_{2n+1} 을 n = −1 에 그대로 적용해 M_{−1} 입니다.
    """
    spec: ZeroClassSpec
    tol: Tolerance = field(default_factory=Tolerance)
    _V: Dict[int, CMatrix] = field(default_factory=dict, repr=False)
    _X: Dict[int, CMatrix] = field(default_factory=dict, repr=False)

    @classmethod
    def of(cls, spec: ZeroClassSpec, tol: Optional[Tolerance] = None) -> "Ladders":
        return cls(spec, resolve_tol(tol))

    def M(self, n: int) -> CMatrix:
        return self.spec.M(n)

    def N(self, n: int) -> CMatrix:
        return self.spec.N(n)

    def M_nonsingular(self, n: int) -> bool:
        return is_nonsingular(self.M(n), self.tol)

    def require_M(self, n: int) -> CMatrix:
        M = self.M(n)
        if not is_nonsingular(M, self.tol):
            raise ClosedFormBlocked(n, "M")
        return M

    def V(self, n: int) -> CMatrix:
        """V_n = M_n⋯M_{2n+1} (n+2 개 인자, 증가 순서)"""
        if n not in self._V:
            out = np.eye(self.spec.dim, dtype=complex)
            for k in range(n, 2 * n + 2):
                out = out @ self.M(k)
            self._V[n] = out
        return self._V[n]

    def V_inv(self, n: int) -> CMatrix:
        V = self.V(n)
        if not is_nonsingular(V, self.tol):
            raise ClosedFormBlocked(n, "V")
        return np.linalg.inv(V)

    def X(self, n: int) -> CMatrix:
        """X_n = −N_nM_{2n}^{-1} (우측 역행렬)"""
        if n not in self._X:
            self._X[n] = solve_right(-self.N(n), self.require_M(2 * n))
        return self._X[n]

    def alphaeval(self, n: int) -> CMatrix:
        """α(−N_nM_{2n}^{-1})"""
        return self.spec.alpha_at(self.X(n))

    def alphaeval_nonsingular(self, n: int) -> bool:
        return is_nonsingular(self.alphaeval(n), self.tol)

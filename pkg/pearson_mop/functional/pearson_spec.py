"""Pearson 형 방정식 D(uΦ) = uΨ 의 데이터"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import PreconditionViolated
from ..linalg import MatrixPolynomial, as_cmatrix, poly_det_adj

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PearsonSpec:
    """Pearson 쌍 (Φ, Ψ) 와 씨앗 모멘트 μ_0

    Attributes:
        Phi: Φ(x) = φ_0 + φ_1 x + φ_2 x² + …
        Psi: Ψ(x) = ψ_0 + ψ_1 x + …
        mu0: μ_0 (생략하면 I)
    """
    Phi: MatrixPolynomial
    Psi: MatrixPolynomial
    mu0: Optional[np.ndarray] = None
    det_phi: MatrixPolynomial = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.Phi.dim != self.Psi.dim:
            raise ValueError(f"Φ, Ψ 차원 불일치: {self.Phi.dim} != {self.Psi.dim}")
        mu0 = np.eye(self.Phi.dim, dtype=complex) if self.mu0 is None else as_cmatrix(self.mu0, self.Phi.dim)
        mu0.setflags(write=False)
        object.__setattr__(self, "mu0", mu0)
        det, _ = poly_det_adj(self.Phi)
        if det.is_zero():
            raise ValueError("det Φ ≡ 0 인 Pearson 쌍은 허용되지 않습니다")
        object.__setattr__(self, "det_phi", det)

    @property
    def dim(self) -> int:
        return self.Phi.dim

    @property
    def p(self) -> int:
        return self.Phi.degree or 0

    @property
    def q(self) -> int:
        return -1 if self.Psi.degree is None else self.Psi.degree

    def is_p21(self) -> bool:
        """deg Φ ≤ 2, deg Ψ ≤ 1"""
        return self.p <= 2 and self.q <= 1

    def phi(self, i: int) -> np.ndarray:
        return self.Phi.coeff(i)

    def psi(self, j: int) -> np.ndarray:
        return self.Psi.coeff(j)

    def M(self, n: int) -> np.ndarray:
        """M_n = ψ_1 + nφ_2"""
        return self.psi(1) + n * self.phi(2)

    def require_p21(self) -> None:
        if not self.is_p21():
            raise PreconditionViolated(
                f"deg Φ ≤ 2, deg Ψ ≤ 1 이 필요합니다 (deg Φ={self.p}, deg Ψ={self.q})"
            )

    def with_mu0(self, mu0) -> "PearsonSpec":
        return PearsonSpec(self.Phi, self.Psi, mu0)

    def right_scaled(self, S) -> "PearsonSpec":
        """(ΦS, ΨS): 같은 범함수의 다른 생성원"""
        return PearsonSpec(self.Phi.rmul(S), self.Psi.rmul(S), self.mu0)

    def conjugated(self, S) -> "PearsonSpec":
        """TuS 에 대한 Pearson 쌍 (S^{-1}ΦS, S^{-1}ΨS), μ_0 는 호출자가 지정"""
        S = np.asarray(S, dtype=complex)
        Sinv = np.linalg.inv(S)
        return PearsonSpec(self.Phi.lmul(Sinv).rmul(S), self.Psi.lmul(Sinv).rmul(S), None)

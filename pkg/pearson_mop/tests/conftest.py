"""공통 테스트 픽스처

Hermite, Laguerre 형 Pearson 범함수와 허용오차를 제공합니다.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.functional import PearsonSpec, from_pearson
from pearson_mop.linalg import MatrixPolynomial, Tolerance


def scalar_spec(phi, psi, mu0=None) -> PearsonSpec:
    """스칼라 계수 목록으로 만든 dim 1 Pearson 쌍"""
    return PearsonSpec(MatrixPolynomial.from_scalar(phi), MatrixPolynomial.from_scalar(psi),
                       None if mu0 is None else np.array([[mu0]]))


@pytest.fixture
def tol() -> Tolerance:
    return Tolerance()


@pytest.fixture
def hermite_spec() -> PearsonSpec:
    """Φ = 1, Ψ = −2x, μ_0 = 1"""
    return scalar_spec([1], [0, -2])


@pytest.fixture
def hermite_u(hermite_spec, tol):
    return from_pearson(hermite_spec, tol, name="hermite")


@pytest.fixture
def laguerre_spec() -> PearsonSpec:
    """Φ = x, Ψ = 1 − x, μ_n = n!"""
    return scalar_spec([0, 1], [1, -1])


@pytest.fixture
def laguerre_u(laguerre_spec, tol):
    return from_pearson(laguerre_spec, tol, name="laguerre")

#!/usr/bin/env python3
"""행렬 범함수의 모멘트 생성, 범함수 대수, Pearson 잔차, Hankel 프로파일 테스트"""

import sys
from math import factorial
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.errors import (
    InvalidTransform, MomentHorizonExceeded, PreconditionViolated, RecurrenceBlocked,
)
from pearson_mop.functional import (
    PearsonSpec, bracket, change_of_variable, congruence, derivative, equivalence, from_moments, from_oracle,
    from_pearson, hankel_profile, inner, is_hermitian_functional, left_multiply, moments_close,
    normalize, pearson_residual, right_multiply, spec_residual,
)
from pearson_mop.functional import adjoint as functional_adjoint
from pearson_mop.linalg import MatrixPolynomial
from pearson_mop.models import MomentSourceKind

from .conftest import scalar_spec


# 모멘트 생성

def test_gaussian_moments(hermite_u):
    assert [hermite_u.moment(k)[0, 0] for k in range(5)] == pytest.approx([1, 0, 0.5, 0, 0.75])


def test_laguerre_moments_are_factorials(laguerre_u):
    for n in range(10):
        assert laguerre_u.moment(n)[0, 0].real == pytest.approx(factorial(n))


def test_moment_cache_is_append_only(hermite_u):
    first = hermite_u.moment(3)
    assert hermite_u.cached_count == 4
    assert hermite_u.moment(3) is first
    with pytest.raises(ValueError):
        first[0, 0] = 5.0
    with pytest.raises(IndexError):
        hermite_u.moment(-1)


def test_matrix_pearson_recurrence(tol):
    """비가환 2×2 쌍에서 점화식이 Pearson 방정식을 정확히 만족"""
    Phi = MatrixPolynomial.from_coefficients([np.eye(2), np.array([[0, 1], [0, 0]])])
    Psi = MatrixPolynomial.from_coefficients([np.array([[0, 1], [1, 0]]), np.array([[-2, 0], [1, -3]])])
    spec = PearsonSpec(Phi, Psi, np.array([[2, 1], [1, 1]]))
    u = from_pearson(spec, tol)
    assert spec_residual(u, spec, 10).max_relative < 1e-12


def test_recurrence_blocked(tol):
    """M_1 = ψ_1 + φ_2 = 0 이면 μ_2 를 만들 수 없음"""
    u = from_pearson(scalar_spec([0, 0, 1], [1, -1]), tol)
    u.moment(1)
    with pytest.raises(RecurrenceBlocked) as info:
        u.moment(2)
    assert info.value.k == 1


def test_non_p21_rejected_for_generation(tol):
    with pytest.raises(PreconditionViolated):
        from_pearson(scalar_spec([0, 0, 0, 1], [1, -1]), tol)


def test_explicit_moments_horizon():
    u = from_moments([np.eye(2), np.zeros((2, 2))])
    assert u.source.kind is MomentSourceKind.EXPLICIT
    with pytest.raises(MomentHorizonExceeded):
        u.moment(2)


def test_det_phi_zero_rejected():
    Phi = MatrixPolynomial.from_coefficients([np.array([[1, 0], [0, 0]])])
    with pytest.raises(ValueError):
        PearsonSpec(Phi, MatrixPolynomial.identity(2))


# 범함수 대수

def test_multiplication_and_derivative(laguerre_u):
    x = MatrixPolynomial.from_scalar([0, 1])
    assert right_multiply(laguerre_u, x).moment(3)[0, 0] == pytest.approx(24.0)
    assert left_multiply(laguerre_u, x).moment(2)[0, 0] == pytest.approx(6.0)
    Du = derivative(laguerre_u)
    assert Du.moment(0)[0, 0] == 0
    assert Du.moment(3)[0, 0] == pytest.approx(-3 * 2)


def test_bracket_and_inner(hermite_u):
    """⟨x² − 1/2, u⟩ = 0, ⟨x, x⟩_u = 1/2"""
    P = MatrixPolynomial.from_scalar([-0.5, 0, 1])
    assert abs(bracket(P, hermite_u)[0, 0]) < 1e-14
    x = MatrixPolynomial.from_scalar([0, 1])
    assert inner(x, x, hermite_u)[0, 0] == pytest.approx(0.5)


def test_change_of_variable(laguerre_u):
    """t(x) = 2x + 1: ν_1 = 2μ_1 + μ_0"""
    v = change_of_variable(laguerre_u, 2.0, 1.0)
    assert v.moment(1)[0, 0] == pytest.approx(3.0)
    assert v.moment(2)[0, 0] == pytest.approx(4 * 2 + 4 * 1 + 1)
    with pytest.raises(InvalidTransform):
        change_of_variable(laguerre_u, 0.0)


def test_congruence_and_normalize(tol):
    mu = [np.array([[2, 1], [1, 2]]), np.array([[0, 1], [1, 0]]), np.array([[3, 0], [0, 1]])]
    u = from_moments(mu)
    T = np.array([[1, 1j], [0, 2]])
    v = congruence(u, T, tol)
    assert np.allclose(v.moment(1), T @ mu[1] @ T.conj().T)
    w, L = normalize(u, tol)
    assert np.allclose(w.moment(0), np.eye(2))
    assert np.allclose(L @ L.conj().T, mu[0])
    assert is_hermitian_functional(w, 2, tol)
    assert np.allclose(functional_adjoint(v).moment(1), v.moment(1).conj().T)


def test_normalize_requires_positive_mu0(tol):
    u = from_moments([np.array([[1, 0], [0, -1]])])
    with pytest.raises(PreconditionViolated):
        normalize(u, tol)


def test_equivalence_carries_pearson(tol):
    """TuS 에 옮겨 붙인 Pearson 쌍이 새 모멘트를 만족"""
    Phi = MatrixPolynomial.from_scalar([1], dim=2)
    Psi = MatrixPolynomial.from_coefficients([np.array([[0, 1], [1, 0]]), -2 * np.eye(2)])
    u = from_pearson(PearsonSpec(Phi, Psi), tol)
    T = np.array([[1, 2], [0, 1]])
    S = np.array([[2, 0], [1, 1]])
    v = equivalence(u, T, S, tol)
    assert v.pearson is not None
    assert spec_residual(v, v.pearson, 8).max_relative < 1e-12


# Pearson 잔차와 모멘트 비교

def test_pearson_residual_detects_wrong_pair(hermite_u):
    good = pearson_residual(hermite_u, MatrixPolynomial.from_scalar([1]), MatrixPolynomial.from_scalar([0, -2]), 10)
    bad = pearson_residual(hermite_u, MatrixPolynomial.from_scalar([1]), MatrixPolynomial.from_scalar([0, -1]), 10)
    assert good.max_relative < 1e-14
    assert good.horizon == 10
    assert bad.max_relative > 1e-2


def test_pearson_generation_matches_weight_oracle(hermite_u):
    """e^{−x²}/√π 오라클과 Pearson 생성 모멘트가 일치"""
    from pearson_mop.gallery import gaussian_moments
    oracle = from_oracle(lambda n: np.array([[gaussian_moments(n) / np.sqrt(np.pi)]]), 1, "gaussian")
    ok, worst = moments_close(hermite_u, oracle, 16)
    assert ok, worst


# Hankel 프로파일

def test_hankel_profile_positive_definite(hermite_u, tol):
    profile = hankel_profile(hermite_u, 4, tol)
    assert profile.quasi_definite
    assert profile.is_positive_definite
    assert profile.first_singular() is None


def test_hankel_profile_singular(tol):
    u = from_moments([[[1]], [[1]], [[1]]])
    profile = hankel_profile(u, 1, tol)
    assert profile.nonsingular == [True, False]
    assert profile.first_singular() == 1

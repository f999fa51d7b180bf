#!/usr/bin/env python3
"""행렬 술어, 행렬 다항식, 블록 선형계, 영공간 테스트"""

import sys
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.errors import DimensionMismatch, NonHermitianInput, SingularSystem
from pearson_mop.linalg import (
    MatrixPolynomial, Tolerance, as_cmatrix, block_hankel, commutes, equilibrated_nullspace,
    is_hermitian, is_nonsingular, poly_det_adj, poly_mul, psd_check, simultaneous_unitary_diagonalizer,
    solve_block_row,
)
from pearson_mop.models import PsdVerdict


# 행렬 술어

def test_hermitian_and_commutes(tol):
    A = np.array([[2, 1j], [-1j, 3]])
    B = np.array([[0, 1], [1, 0]])
    assert is_hermitian(A, tol)
    assert not is_hermitian(np.array([[1, 1], [0, 1]]), tol)
    assert commutes(A, np.eye(2), tol)
    assert not commutes(A, B, tol)


def test_psd_check(tol):
    assert psd_check(np.array([[2, 1], [1, 2]]), tol) is PsdVerdict.POSITIVE_DEFINITE
    assert psd_check(np.array([[1, 2], [2, 1]]), tol) is PsdVerdict.HERMITIAN_INDEFINITE
    assert psd_check(np.array([[1, 2], [0, 1]]), tol) is PsdVerdict.NON_HERMITIAN
    # 척도가 크게 다른 양정치 행렬
    assert psd_check(np.diag([1e8, 1e-4]), tol) is PsdVerdict.POSITIVE_DEFINITE


def test_is_nonsingular(tol):
    assert is_nonsingular(np.eye(2), tol)
    assert not is_nonsingular(np.zeros((2, 2)), tol)
    assert not is_nonsingular(np.array([[1, 1], [1, 1]]), tol)


def test_as_cmatrix_shapes():
    assert as_cmatrix(3.0).shape == (1, 1)
    with pytest.raises(DimensionMismatch):
        as_cmatrix(np.ones((2, 3)))
    with pytest.raises(DimensionMismatch):
        as_cmatrix(np.eye(2), dim=3)


def test_simultaneous_unitary_diagonalizer(tol):
    """교환하는 에르미트 행렬 쌍은 하나의 유니터리로 대각화"""
    theta = 0.3
    U = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    A = U @ np.diag([1.0, 2.0]) @ U.T
    B = U @ np.diag([5.0, -1.0]) @ U.T
    T = simultaneous_unitary_diagonalizer([A, B], tol)
    assert T is not None
    assert np.allclose(T @ T.conj().T, np.eye(2))
    for M in (A, B):
        D = T @ M @ T.conj().T
        assert np.allclose(D, np.diag(np.diag(D)), atol=1e-10)


def test_simultaneous_diagonalizer_degenerate_first(tol):
    """첫 행렬의 고유값이 겹치면 다음 행렬로 세분"""
    A = np.eye(2)
    B = np.array([[0.0, 1.0], [1.0, 0.0]])
    T = simultaneous_unitary_diagonalizer([A, B], tol)
    D = T @ B @ T.conj().T
    assert np.allclose(D, np.diag(np.diag(D)), atol=1e-10)


def test_simultaneous_diagonalizer_rejects(tol):
    A = np.diag([1.0, 2.0])
    B = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert simultaneous_unitary_diagonalizer([A, B], tol) is None
    with pytest.raises(NonHermitianInput):
        simultaneous_unitary_diagonalizer([np.array([[1, 1], [0, 1]])], tol)


# 행렬 다항식

def test_polynomial_arithmetic():
    """비가환 곱과 도함수, 평가"""
    A = np.array([[0, 1], [0, 0]])
    B = np.array([[0, 0], [1, 0]])
    P = MatrixPolynomial.from_coefficients([np.eye(2), A])
    Q = MatrixPolynomial.from_coefficients([np.eye(2), B])
    PQ = poly_mul(P, Q)
    assert PQ.degree == 2
    assert np.allclose(PQ.coeff(2), A @ B)
    assert not np.allclose(poly_mul(Q, P).coeff(2), A @ B)
    assert np.allclose((P * Q)(2.0), P(2.0) @ Q(2.0))
    assert MatrixPolynomial.monomial(3, 2).derivative(2).allclose(MatrixPolynomial.monomial(1, 2) * 6.0)
    assert MatrixPolynomial.identity(2).derivative().is_zero()
    assert MatrixPolynomial.zero(2).degree is None


def test_polynomial_trailing_zeros_trimmed():
    P = MatrixPolynomial.from_scalar([1, 2, 0, 0], dim=2)
    assert P.degree == 1
    assert (P - P).degree is None


def test_evaluate_right_and_adjoint():
    X = np.array([[1, 2], [0, 3]])
    C = np.array([[1, 1j], [0, 1]])
    P = MatrixPolynomial.from_coefficients([np.zeros((2, 2)), C])
    assert np.allclose(P.evaluate_right(X), C @ X)
    assert np.allclose(P.adjoint().coeff(1), C.conj().T)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        MatrixPolynomial.identity(2) + MatrixPolynomial.identity(3)


def test_det_adj():
    """P·adj P = det P·I"""
    P = MatrixPolynomial.from_coefficients([
        np.array([[1, 2], [0, 1]]),
        np.array([[0, 1], [1, 0]]),
        np.array([[1, 0], [0, -1]]),
    ])
    det, adj = poly_det_adj(P)
    lhs = poly_mul(P, adj)
    rhs = MatrixPolynomial.from_scalar(det.to_scalar(), dim=2)
    assert lhs.allclose(rhs)
    assert poly_mul(adj, P).allclose(rhs)
    for x in (0.0, 0.7, -1.3):
        assert det(x)[0, 0] == pytest.approx(np.linalg.det(P(x)))


# 블록 선형계와 영공간

def test_solve_block_row(tol):
    rng = np.random.default_rng(7)
    H = rng.normal(size=(4, 4)) + 4 * np.eye(4)
    X = [rng.normal(size=(2, 2)), rng.normal(size=(2, 2))]
    R = np.hstack(X) @ H
    blocks = solve_block_row(H, R, tol)
    assert np.allclose(np.hstack(blocks), np.hstack(X))


def test_solve_block_row_singular(tol):
    H = block_hankel([np.eye(2), np.eye(2), np.eye(2)], 2)
    with pytest.raises(SingularSystem):
        solve_block_row(H, [np.eye(2), np.eye(2)], tol)


def test_block_hankel_layout():
    moments = [np.full((1, 1), k) for k in range(5)]
    H = block_hankel(moments, 3)
    assert np.allclose(H.real, [[0, 1, 2], [1, 2, 3], [2, 3, 4]])


def test_equilibrated_nullspace():
    """열 척도가 크게 달라도 영공간 차원을 정확히 판정"""
    A = np.array([[1.0, 1e6, 0.0], [2.0, 2e6, 0.0]])
    result = equilibrated_nullspace(A, 1e-10)
    assert result.nullity == 2
    assert np.allclose(A @ result.basis, 0.0, atol=1e-6)
    full = equilibrated_nullspace(np.eye(3), 1e-10)
    assert full.nullity == 0

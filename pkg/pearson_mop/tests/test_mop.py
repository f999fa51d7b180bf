#!/usr/bin/env python3
"""모닉 MOP 구간, 3항 점화식, Favard 재구성, 도함수 사다리 테스트"""

import sys
from math import factorial
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.errors import InvalidRecurrence, PreconditionViolated, RecurrenceBlocked
from pearson_mop.functional import from_moments, moments_close, right_multiply
from pearson_mop.gallery import build
from pearson_mop.linalg import MatrixPolynomial
from pearson_mop.mop import (
    compute_segment, derivative_segment, favard_roundtrip, fit_ladder, ladder_coefficients,
    ladder_relations, quasi_orthogonality_order, recurrence_coefficients, recurrence_residuals,
)


def scalars(mats):
    return [complex(M[0, 0]) for M in mats]


# 구간

def test_hermite_segment(hermite_u, tol):
    """E_n = n!/2^n, π_n = 0, γ_n = n/2"""
    seg = compute_segment(hermite_u, 5, tol)
    assert seg.N == 5 and not seg.horizon_flag
    assert scalars(seg.E) == pytest.approx([factorial(n) / 2 ** n for n in range(6)])
    assert np.allclose(scalars(seg.pi), 0.0, atol=1e-12)
    assert seg.polys[2].allclose(MatrixPolynomial.from_scalar([-0.5, 0, 1]))
    assert seg.orthogonality_residual() < 1e-10


def test_laguerre_recurrence(laguerre_u, tol):
    """β_n = 2n + 1, γ_n = n², E_n = (n!)²"""
    seg = compute_segment(laguerre_u, 5, tol)
    beta, gamma = recurrence_coefficients(seg)
    assert scalars(beta) == pytest.approx([2 * n + 1 for n in range(5)])
    assert scalars(gamma[1:]) == pytest.approx([n * n for n in range(1, 6)])
    assert scalars(seg.E) == pytest.approx([factorial(n) ** 2 for n in range(6)])
    assert max(recurrence_residuals(seg)) < 1e-8


def test_recurrence_needs_two_polynomials(hermite_u, tol):
    seg = compute_segment(hermite_u, 0, tol)
    assert seg.length == 1
    with pytest.raises(InvalidRecurrence):
        recurrence_coefficients(seg)


def test_singular_hankel_gives_maximal_segment(tol):
    """Δ_1 특이: P_0 만 존재하고 P_1 이 추가 다항식"""
    u = from_moments([[[1]], [[1]], [[1]], [[1]], [[1]]])
    seg = compute_segment(u, 2, tol)
    assert seg.N == 0
    assert seg.horizon_flag
    assert seg.extra is not None and seg.extra.degree == 1


def test_blocked_moments_end_segment(tol):
    """M_4 = 0 으로 μ_5 를 만들 수 없으면 구간은 P_0..P_2"""
    u = build("crafted_jacobi").functional
    seg = compute_segment(u, 5, tol)
    assert seg.N == 2
    assert seg.horizon_flag
    assert seg.blocked_moment == 5
    with pytest.raises(RecurrenceBlocked):
        compute_segment(build("crafted_jacobi").functional, 5, tol, blocked_as_horizon=False)


def test_matrix_segment_orthogonality(tol):
    """2×2 양정치 예제의 구간은 직교하고 점화식을 만족"""
    u = build("example2").functional
    seg = compute_segment(u, 4, tol)
    assert seg.N == 4
    assert seg.orthogonality_residual() < 1e-8
    assert max(recurrence_residuals(seg)) < 1e-8


# Favard

def test_favard_roundtrip(laguerre_u, tol):
    seg = compute_segment(laguerre_u, 4, tol)
    v = favard_roundtrip(seg.beta, seg.gamma, laguerre_u.moment(0), tol)
    ok, worst = moments_close(laguerre_u, v, 8)
    assert ok, worst


def test_favard_rejects_singular_gamma(tol):
    zero = np.zeros((1, 1))
    with pytest.raises(InvalidRecurrence):
        favard_roundtrip([zero, zero], [zero, np.eye(1), zero], np.eye(1), tol)


def test_quasi_orthogonality_order(hermite_u, tol):
    seg = compute_segment(hermite_u, 5, tol)
    assert quasi_orthogonality_order(seg, hermite_u, 3, tol) == 0
    shifted = right_multiply(hermite_u, MatrixPolynomial.from_scalar([0, 1]))
    assert quasi_orthogonality_order(seg, shifted, 3, tol) == 1


# 도함수와 사다리

def test_derivative_segment(laguerre_u, laguerre_spec, tol):
    seg = compute_segment(laguerre_u, 4, tol)
    dseg = derivative_segment(seg, laguerre_spec, tol)
    assert dseg.segment.length == seg.length - 1
    assert dseg.orthogonality < 1e-6
    assert max(dseg.bracket_residuals) < 1e-6
    ladder = ladder_coefficients(seg, dseg, tol)
    assert ladder.max_residual < 1e-6


def test_ladder_relations(laguerre_u, laguerre_spec, tol):
    seg = compute_segment(laguerre_u, 5, tol)
    for n in (1, 2, 3):
        minus, plus = ladder_relations(seg, laguerre_spec, n, tol)
        assert minus.allclose(seg.polys[n - 1].derivative(), rtol=1e-7, atol=1e-8)
        assert plus.allclose(seg.polys[n + 1].derivative(), rtol=1e-7, atol=1e-8)
    with pytest.raises(PreconditionViolated):
        ladder_relations(seg, laguerre_spec, 0, tol)


def test_fit_ladder_classical(hermite_u, tol):
    seg = compute_segment(hermite_u, 6, tol)
    assert fit_ladder(seg).first_failure(1e-6) is None


def test_fit_ladder_counterexample(tol):
    """양정치이지만 도함수가 직교하지 않는 가중치는 사다리 적합에 실패"""
    seg = compute_segment(build("counterexample").functional, 5, tol)
    assert seg.N == 5
    failure = fit_ladder(seg).first_failure(1e-3)
    assert failure is not None
    assert failure <= 4

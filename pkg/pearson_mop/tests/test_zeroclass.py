#!/usr/bin/env python3
"""영류 D(uαI) = uΨ 테스트: 닫힌 형태, 존재 판정, 표준형, 미분방정식, 에르미트 분석"""

import sys
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.errors import ComplexTransformRequired, PreconditionViolated
from pearson_mop.functional import hankel_profile, normalize
from pearson_mop.gallery import build
from pearson_mop.linalg import MatrixPolynomial, adjoint, norm, offdiag_norm
from pearson_mop.models import CanonicalTag, DiagonalizabilityKind, ExistenceKind, GuardKind
from pearson_mop.mop import compute_segment
from pearson_mop.zeroclass import (
    Ladders, ZeroClassSpec, alpha_reality, bessel_positivity_guard, canonical_existence_conditions,
    canonical_reduction, canonical_type, closed_form_E, closed_form_pi, commutator_obstruction,
    compare_with_segment, diagonalizability_report, existence_check, hermiticity_obstruction,
    is_canonical, kappa, ode_coefficients, ode_solve, sigma_consistency, structure_relation,
)


@pytest.fixture
def hermite_zc() -> ZeroClassSpec:
    return ZeroClassSpec((1, 0, 0), 0.0, -2.0, None, "hermite")


@pytest.fixture
def laguerre_zc() -> ZeroClassSpec:
    return ZeroClassSpec((0, 1, 0), 1.0, -1.0, None, "laguerre")


@pytest.fixture
def jacobi_zc() -> ZeroClassSpec:
    return build("jacobi").zero_class


# 명세

def test_zero_class_spec_validation():
    with pytest.raises(ValueError):
        ZeroClassSpec((0, 0, 0), 0.0, 1.0)
    zc = ZeroClassSpec((1,), 0.0, -2.0)
    assert zc.alpha == (1 + 0j, 0j, 0j)
    assert zc.alpha_degree == 0
    assert np.allclose(zc.mu0, np.eye(1))


def test_ladders(laguerre_zc):
    L = Ladders.of(laguerre_zc)
    assert np.allclose(L.M(3), [[-1]])
    assert np.allclose(L.N(2), [[3]])
    # V_{−1} = M_{−1}
    assert np.allclose(L.V(-1), L.M(-1))
    assert np.allclose(L.V(1), [[-1]])
    # X_n = −N_nM_{2n}^{-1} = n + 1
    assert np.allclose(L.alphaeval(2), [[3]])


def test_from_pearson(hermite_spec):
    zc = ZeroClassSpec.from_pearson(hermite_spec)
    assert zc.alpha[0] == 1
    assert np.allclose(zc.psi1, [[-2]])
    with pytest.raises(PreconditionViolated):
        ZeroClassSpec.from_pearson(build("example2").pearson)


# 닫힌 형태

def test_closed_form_hermite(hermite_zc):
    """E_n = n!/2^n, π_n = 0"""
    assert np.allclose(closed_form_E(hermite_zc, 1), [[0.5]])
    assert np.allclose(closed_form_E(hermite_zc, 2), [[0.5]])
    assert np.allclose(closed_form_E(hermite_zc, 3), [[0.75]])
    assert np.allclose(closed_form_pi(hermite_zc, 3), [[0.0]])


def test_closed_form_laguerre(laguerre_zc):
    """E_n = (n!)², π_n = −n²"""
    for n, expected in [(1, 1.0), (2, 4.0), (3, 36.0)]:
        assert np.allclose(closed_form_E(laguerre_zc, n), [[expected]])
    assert np.allclose(closed_form_pi(laguerre_zc, 2), [[-4.0]])


@pytest.mark.parametrize("name", ["hermite_zc", "laguerre_zc"])
def test_closed_form_matches_hankel(name, request, tol):
    zc = request.getfixturevalue(name)
    seg = compute_segment(zc.functional(tol), 5, tol)
    assert compare_with_segment(zc, seg, tol).worst < 1e-7


def test_closed_form_matrix_family(tol):
    entry = build("hermite_family")
    seg = compute_segment(entry.functional, 4, tol)
    assert compare_with_segment(entry.zero_class, seg, tol).worst < 1e-6


@pytest.mark.parametrize("name", [
    "jacobi", "example5_hermite", "example5_laguerre", "example5_jacobi", "example5_bessel",
])
def test_closed_form_gallery(name, tol):
    """모멘트 점화식으로 만든 Hankel 구간과 닫힌 형태 E_n, π_n 비교"""
    zc = build(name).zero_class
    seg = compute_segment(zc.functional(tol), 4, tol)
    assert seg.length == 5
    assert compare_with_segment(zc, seg, tol).worst < 1e-6


# 존재 판정

def test_existence_unblocked(hermite_zc, tol):
    verdict = existence_check(hermite_zc, 5, tol)
    assert verdict.kind is ExistenceKind.QUASI_DEFINITE_TO
    assert verdict.max_segment == 5
    assert verdict.hankel_agrees


@pytest.mark.parametrize("name", ["crafted_jacobi", "crafted_laguerre"])
def test_existence_blocked(name, tol):
    entry = build(name)
    verdict = existence_check(entry.zero_class, 4, tol)
    assert verdict.kind is ExistenceKind.BLOCKED_AT
    assert verdict.max_segment == entry.expected["max_segment"]
    assert verdict.blocked_at == entry.expected["blocked_at"]
    assert verdict.hankel_agrees


def test_existence_singular_mu0(tol):
    zc = ZeroClassSpec((1, 0, 0), np.zeros((2, 2)), -2 * np.eye(2), np.diag([1.0, 0.0]))
    verdict = existence_check(zc, 3, tol, cross_validate=False)
    assert verdict.max_segment == -1
    assert verdict.blocked_at == ("mu0", 0)


# 표준형

@pytest.mark.parametrize("alpha, tag, factor", [
    ((4, 0, 0), CanonicalTag.HERMITE, 4),
    ((2, 1, 0), CanonicalTag.LAGUERRE, 1),
    ((-1, 0, 1), CanonicalTag.JACOBI, -1),
    ((1, 2, 1), CanonicalTag.BESSEL, 1),
])
def test_canonical_type(alpha, tag, factor):
    ctype = canonical_type(ZeroClassSpec(alpha, 0.0, -1.0))
    assert ctype.tag is tag
    assert ctype.real_roots
    assert abs(ctype.factor - factor) < 1e-12


def test_canonical_laguerre_transform():
    ctype = canonical_type(ZeroClassSpec((2, 1, 0), 0.0, -1.0))
    assert ctype.roots == (-2,)
    assert abs(ctype.transform.a - 1) < 1e-12
    assert abs(ctype.transform.b - 2) < 1e-12


def test_canonical_reduction_laguerre():
    """α = x + 2: y = x + 2 에서 Ψ̂(y) = ψ_0 − 2ψ_1 + ψ_1y"""
    reduced, ctype = canonical_reduction(ZeroClassSpec((2, 1, 0), 3.0, -1.0))
    assert ctype.tag is CanonicalTag.LAGUERRE
    assert reduced.alpha == (0, 1, 0)
    assert np.allclose(reduced.psi0, [[5.0]])
    assert np.allclose(reduced.psi1, [[-1.0]])
    assert is_canonical(reduced) is CanonicalTag.LAGUERRE


def test_canonical_reduction_complex_roots():
    zc = ZeroClassSpec((1, 0, 1), 0.0, -1.0)
    assert not canonical_type(zc).real_roots
    with pytest.raises(ComplexTransformRequired):
        canonical_reduction(zc)
    reduced, _ = canonical_reduction(zc, allow_complex=True)
    assert is_canonical(reduced) is CanonicalTag.JACOBI


def test_canonical_conditions():
    ok = canonical_existence_conditions(ZeroClassSpec((0, 1, 0), 1.0, -1.0), 4)
    assert ok.tag is CanonicalTag.LAGUERRE
    assert ok.all_nonsingular
    bad = canonical_existence_conditions(ZeroClassSpec((0, 1, 0), -2.0, -1.0), 4)
    assert bad.first_failure()["n"] == 2
    with pytest.raises(PreconditionViolated):
        canonical_existence_conditions(ZeroClassSpec((2, 1, 0), 0.0, -1.0), 4)


# 미분방정식과 구조 관계

def test_ode_coefficients_hermite(hermite_zc, tol):
    seg = compute_segment(hermite_zc.functional(tol), 5, tol)
    for n in range(1, 5):
        ode = ode_coefficients(hermite_zc, seg, n, tol=tol)
        assert ode.left.residual < 1e-8
        assert ode.normalized.residual < 1e-8
        assert ode.right is not None
        assert ode.right.residual < 1e-8


def test_ode_coefficients_laguerre(laguerre_zc, tol):
    seg = compute_segment(laguerre_zc.functional(tol), 4, tol)
    ode = ode_coefficients(laguerre_zc, seg, 3, right=False, tol=tol)
    assert ode.left.residual < 1e-8
    assert ode.right is None
    with pytest.raises(PreconditionViolated):
        ode_coefficients(laguerre_zc, seg, 5, tol=tol)


def test_ode_solve_hermite(hermite_zc):
    y = ode_solve(hermite_zc, 2, 1.0)
    assert y.allclose(MatrixPolynomial.from_scalar([-0.5, 0, 1]))


def test_ode_solve_matches_segment(laguerre_zc, tol):
    seg = compute_segment(laguerre_zc.functional(tol), 4, tol)
    y = ode_solve(laguerre_zc, 4, 1.0)
    assert y.allclose(seg.polys[4], rtol=1e-8)


@pytest.mark.parametrize("name", ["hermite_zc", "laguerre_zc", "jacobi_zc"])
def test_ode_solve_reproduces_scaled_mop(name, request, tol):
    """선행계수 κ_n 의 다항식 해는 κ_nP_n 과 일치"""
    zc = request.getfixturevalue(name)
    seg = compute_segment(zc.functional(tol), 5, tol)
    for n in range(1, 6):
        k = kappa(zc, seg, n)
        y = ode_solve(zc, n, k)
        assert y.degree == n
        assert y.allclose(seg.polys[n].lmul(k), rtol=1e-7)


def test_ode_solve_zero_leading(hermite_zc):
    assert ode_solve(hermite_zc, 3, 0.0).is_zero()


def test_structure_relation(hermite_zc, laguerre_zc, tol):
    seg = compute_segment(hermite_zc.functional(tol), 5, tol)
    for n in range(1, 5):
        rel = structure_relation(hermite_zc, seg, n)
        assert rel.residual < 1e-8
        assert np.allclose(rel.theta, [[n]])
    seg = compute_segment(laguerre_zc.functional(tol), 4, tol)
    rel = structure_relation(laguerre_zc, seg, 2)
    assert np.allclose(rel.theta, [[4.0]])
    with pytest.raises(PreconditionViolated):
        structure_relation(laguerre_zc, seg, 4)


@pytest.mark.parametrize("name", ["hermite_zc", "laguerre_zc"])
def test_sigma_consistency(name, request, tol):
    zc = request.getfixturevalue(name)
    seg = compute_segment(zc.functional(tol), 4, tol)
    for n in range(1, 4):
        assert sigma_consistency(zc, seg, n, tol).residual < 1e-8


# 에르미트 영류

def test_alpha_reality():
    assert alpha_reality((1, 0, -1)) == (0.0, 0.0, 0.0)
    A0, A1, A2 = alpha_reality((1, 1j, 0))
    assert (A0, A1, A2) == (1.0, 0.0, 0.0)


def test_hermiticity_obstruction_vanishes(hermite_zc, tol):
    u = hermite_zc.functional(tol)
    for n in range(4):
        assert np.abs(hermiticity_obstruction(u, hermite_zc, n, tol)).max() < 1e-10


def test_synthetic_diagonal_is_diagonalizable(tol):
    entry = build("synthetic_diagonal")
    report = diagonalizability_report(entry.functional, entry.zero_class, tol=tol)
    assert report.kind is DiagonalizabilityKind.UNITARILY_DIAGONALIZABLE
    T = report.unitary
    assert np.allclose(T @ adjoint(T), np.eye(2), atol=1e-8)


def test_example5_not_diagonalizable(tol):
    entry = build("example5_hermite")
    report = diagonalizability_report(entry.functional, entry.zero_class, tol=tol)
    assert report.kind is DiagonalizabilityKind.NOT_DIAGONALIZABLE
    assert report.witness is not None


def test_bessel_guard(tol):
    zc = ZeroClassSpec((0, 0, 1), 2.0, 2.0)
    assert bessel_positivity_guard(zc, tol=tol).kind is GuardKind.CONSISTENT
    with pytest.raises(PreconditionViolated):
        bessel_positivity_guard(ZeroClassSpec((1, 0, -1), 0.0, -2.0), tol=tol)


def test_synthetic_congruence_diagonalizes_moments(tol):
    """합동 행렬 S 로 n ≤ 10 의 모든 Sμ_nS* 가 대각"""
    entry = build("synthetic_diagonal")
    report = diagonalizability_report(entry.functional, entry.zero_class, horizon=10, tol=tol)
    assert report.kind is DiagonalizabilityKind.UNITARILY_DIAGONALIZABLE
    S = report.congruence
    for n in range(11):
        D = S @ entry.functional.moment(n) @ adjoint(S)
        assert offdiag_norm(D) <= 1e-8 * norm(D) + 1e-12
    assert np.allclose(S @ entry.functional.moment(0) @ adjoint(S), np.eye(2), atol=1e-8)


def test_example5_records_indefinite_delta2(tol):
    entry = build("example5_hermite")
    assert hankel_profile(entry.functional, 2, tol).positive_definite[2] is False
    report = diagonalizability_report(entry.functional, entry.zero_class, tol=tol)
    assert "Δ_0 > 0: False" in report.conditions
    assert "Δ_2 > 0: False" in report.conditions


@pytest.mark.parametrize("name", ["example5_bessel", "bessel_series"])
def test_bessel_guard_gallery(name, tol):
    entry = build(name)
    report = bessel_positivity_guard(entry.zero_class, entry.functional, tol)
    assert report.kind is GuardKind.CONSISTENT


def test_commutator_obstruction_normalized(tol):
    """μ_0 = I 로 정규화한 범함수에서 교환자 형태와 일반 형태가 일치하고 0"""
    entry = build("synthetic_diagonal")
    v, L = normalize(entry.functional, tol)
    S = adjoint(np.linalg.inv(L))
    Sinv = np.linalg.inv(S)
    zc = entry.zero_class
    zc_v = ZeroClassSpec((1, 0, 0), Sinv @ zc.psi0 @ S, Sinv @ zc.psi1 @ S, None, "normalized")
    for n in range(5):
        c = commutator_obstruction(v, zc_v, n, tol)
        h = hermiticity_obstruction(v, zc_v, n, tol)
        assert np.allclose(c, 0, atol=1e-8)
        assert np.allclose(c, h, atol=1e-8)
    with pytest.raises(PreconditionViolated):
        commutator_obstruction(entry.functional, zc, 0, tol)

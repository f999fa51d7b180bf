#!/usr/bin/env python3
"""예제 갤러리 테스트: 등록, 매개변수, 모멘트 오라클, 성분 구조 판정"""

import json
import sys
from math import gamma, pi, sqrt
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.errors import InvalidParameter, PreconditionViolated, UnknownExample
from pearson_mop.functional import right_multiply, spec_residual
from pearson_mop.gallery import (
    build, gamma_moments, gaussian_moments, jacobi_moments, list_entries, parse_param, structure_check,
)
from pearson_mop.mop import compute_segment, derivative_segment
from pearson_mop.zeroclass import right_ode

EXPECTED_NAMES = {
    "hermite", "laguerre", "jacobi", "bessel_circle", "bessel_series",
    "example1", "example2", "example3", "example4", "counterexample",
    "example5_hermite", "example5_laguerre", "example5_jacobi", "example5_bessel",
    "hermite_family", "laguerre_family", "jacobi_family",
    "synthetic_diagonal", "crafted_jacobi", "crafted_laguerre",
}


def test_list_entries():
    entries = dict(list_entries())
    assert EXPECTED_NAMES <= set(entries)
    assert all(entries[name] for name in EXPECTED_NAMES)


# 모멘트 오라클

def test_gaussian_moments():
    assert gaussian_moments(0) == pytest.approx(sqrt(pi))
    assert gaussian_moments(3) == 0.0
    assert gaussian_moments(4) == pytest.approx(0.75 * sqrt(pi))
    with pytest.raises(InvalidParameter):
        gaussian_moments(-1)


def test_gamma_and_jacobi_moments():
    assert gamma_moments(0.0, 5) == pytest.approx(120.0)
    assert gamma_moments(0.5, 0) == pytest.approx(gamma(1.5))
    assert jacobi_moments(0.0, 0.0, 2) == pytest.approx(2 / 3)
    assert jacobi_moments(1.0, 1.0, 0) == pytest.approx(4 / 3)
    with pytest.raises(InvalidParameter):
        jacobi_moments(-1.0, 0.0, 0)


# 매개변수

@pytest.mark.parametrize("text, expected", [
    ("2", 2),
    ("0.5", 0.5),
    ("[1, 2]", [1, 2]),
    ("1+2i", 1 + 2j),
    ("-3i", -3j),
])
def test_parse_param(text, expected):
    assert parse_param(text) == expected


def test_parse_param_rejects():
    with pytest.raises(InvalidParameter):
        parse_param("abc")


def test_build_records_params():
    entry = build("laguerre", r=0.5)
    assert entry.params == {"r": 0.5}
    assert entry.description
    assert entry.functional.moment(1)[0, 0] == pytest.approx(gamma(2.5))


def test_build_defaults():
    entry = build("example2")
    assert entry.params == {"a": 1.0}
    assert entry.dim == 2


def test_build_complex_param():
    entry = build("example2", a="1+1i")
    mu = entry.functional.moment(1)
    assert np.allclose(mu, mu.conj().T)
    assert abs(mu[0, 1]) > 0


@pytest.mark.parametrize("name, params", [
    ("hermite", {"zz": 1}),
    ("laguerre", {"r": -2}),
    ("example2", {"a": 0}),
    ("bessel_circle", {"r": 0.5}),
    ("hermite_family", {"A": [[1, 2, 3]]}),
])
def test_build_invalid_parameter(name, params):
    with pytest.raises(InvalidParameter):
        build(name, **params)


def test_build_unknown():
    with pytest.raises(UnknownExample):
        build("no_such_example")
    with pytest.raises(KeyError):
        build("no_such_example")


# Pearson 데이터

@pytest.mark.parametrize("name", [
    "hermite", "laguerre", "jacobi", "example1", "example2", "example3", "example4",
    "example5_hermite", "synthetic_diagonal",
])
def test_pearson_matches_oracle(name):
    entry = build(name)
    assert entry.pearson_residual(12).max_relative < 1e-8


def test_alternate_pairs():
    entry = build("example2")
    for spec in entry.alternates.values():
        assert spec_residual(entry.functional, spec, 10).max_relative < 1e-8


def test_counterexample_has_no_pair():
    entry = build("counterexample")
    assert entry.pearson is None
    assert entry.pearson_residual() is None


def test_describe_is_json():
    for name in ("example1", "synthetic_diagonal", "crafted_jacobi"):
        info = build(name).describe()
        text = json.dumps(info)
        assert json.loads(text)["name"] == name
    info = build("example1").describe()
    assert info["source"] == "WeightOracle"
    assert info["pearson"] == {"p": 2, "q": 2}


# 예제 2~4 종단 검증

@pytest.mark.parametrize("name, params", [
    ("example2", {}),
    ("example3", {}),
    ("example4", {"r": 0.5}),
])
def test_right_ode_examples(name, params, tol):
    """(ΦS, ΨS) 로 P″_nΦ* + P′_nΨ* + Λ_nP_n = 0"""
    entry = build(name, **params)
    seg = compute_segment(entry.functional, 5, tol)
    pair = entry.right_pair
    for n in range(1, 6):
        assert right_ode(entry.functional, pair.Phi, pair.Psi, seg, n, tol=tol).residual < 1e-8


@pytest.mark.parametrize("name, params, scale", [
    ("example2", {}, [1.0, 2.0]),
    ("example3", {}, [1.0, 1.0]),
    ("example4", {"r": 0.5}, [1.5, 1.0]),
])
def test_u1_companion_moments(name, params, scale):
    """u^{(1)} = uΦ·diag(...) 의 모멘트가 가중치 오라클과 일치"""
    entry = build(name, **params)
    tilde = right_multiply(entry.functional, entry.pearson.Phi)
    D = np.diag(scale)
    u1 = entry.companions["u1"]
    for n in range(8):
        expected = tilde.moment(n) @ D
        assert np.linalg.norm(u1.moment(n) - expected) <= 1e-8 * np.linalg.norm(expected)


def test_example2_derivative_segment(tol):
    entry = build("example2")
    seg = compute_segment(entry.functional, 6, tol)
    dseg = derivative_segment(seg, entry.pearson, tol)
    assert len(dseg.bracket_residuals) == 6
    assert max(dseg.bracket_residuals) < 1e-8
    assert dseg.orthogonality < 1e-6


# 성분 구조

@pytest.mark.parametrize("name, expected", [
    ("example2", True),
    ("example5_hermite", True),
    ("synthetic_diagonal", False),
])
def test_structure_check(name, expected):
    assert structure_check(build(name)).non_diagonalizable is expected


def test_structure_check_needs_2x2():
    with pytest.raises(PreconditionViolated):
        structure_check(build("hermite"))

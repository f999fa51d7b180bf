"""모멘트 수열로 표현되는 행렬 범함수

Functional 은 모멘트 공급원(MomentSource)과 추가 전용 캐시로 구성됩니다.
공급원은 명시적 목록, Pearson 점화식, 가중치 오라클, 다른 범함수에서
유도된 식 가운데 하나입니다.
"""

import logging
from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..errors import DimensionMismatch, MomentHorizonExceeded, RecurrenceBlocked
from ..linalg import CMatrix, Tolerance, as_cmatrix, is_nonsingular, resolve_tol, solve_right
from ..models import MomentSourceKind
from .pearson_spec import PearsonSpec

logger = logging.getLogger(__name__)


class MomentSource(ABC):
    """모멘트 공급원 인터페이스

    개방-폐쇄 원칙: 새로운 모멘트 출처를 Functional 수정 없이 추가할 수 있음
    """

    kind: MomentSourceKind

    @abstractmethod
    def compute(self, n: int, cache: List[CMatrix]) -> CMatrix:
        """μ_0..μ_{n−1} 이 cache 에 있을 때 μ_n 을 계산합니다"""

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value}


class ExplicitMoments(MomentSource):
    """주어진 유한 모멘트 목록"""

    kind = MomentSourceKind.EXPLICIT

    def __init__(self, moments: Sequence):
        if not moments:
            raise DimensionMismatch("모멘트 목록이 비어 있습니다")
        first = as_cmatrix(moments[0])
        self.moments = [as_cmatrix(mu, first.shape[0]) for mu in moments]

    def compute(self, n: int, cache: List[CMatrix]) -> CMatrix:
        if n >= len(self.moments):
            raise MomentHorizonExceeded(n, len(self.moments))
        return self.moments[n]

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "count": len(self.moments)}


class PearsonGenerated(MomentSource):
    """점화식 μ_{n+1}M_n = −(nμ_{n−1}φ_0 + μ_n(ψ_0 + nφ_1)) 으로 생성"""

    kind = MomentSourceKind.PEARSON

    def __init__(self, spec: PearsonSpec, tol: Optional[Tolerance] = None):
        spec.require_p21()
        self.spec = spec
        self.tol = resolve_tol(tol)

    def compute(self, n: int, cache: List[CMatrix]) -> CMatrix:
        s = self.spec
        if n == 0:
            return s.mu0
        k = n - 1
        Mk = s.M(k)
        if not is_nonsingular(Mk, self.tol):
            logger.warning(f"Pearson 점화식 차단: M_{k} 특이 (μ_{n} 계산 불가)")
            raise RecurrenceBlocked(k)
        rhs = cache[k] @ (s.psi(0) + k * s.phi(1))
        if k >= 1:
            rhs = rhs + k * cache[k - 1] @ s.phi(0)
        return solve_right(-rhs, Mk)

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "p": self.spec.p, "q": self.spec.q}


class WeightOracle(MomentSource):
    """가중치 적분으로 모멘트를 주는 오라클"""

    kind = MomentSourceKind.ORACLE

    def __init__(self, oracle: Callable[[int], CMatrix], label: str = "oracle"):
        self.oracle = oracle
        self.label = label

    def compute(self, n: int, cache: List[CMatrix]) -> CMatrix:
        return self.oracle(n)

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "label": self.label}


class DerivedMoments(MomentSource):
    """다른 범함수의 모멘트에서 유도된 모멘트 (uQ, Qu, Du, u*, …)"""

    kind = MomentSourceKind.DERIVED

    def __init__(self, rule: Callable[[int], CMatrix], label: str):
        self.rule = rule
        self.label = label

    def compute(self, n: int, cache: List[CMatrix]) -> CMatrix:
        return self.rule(n)

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "label": self.label}


class Functional:
    """행렬 범함수 u ∈ ℙ^{(m)′}

    캐시는 추가 전용이며 한 번 계산된 μ_n 은 바뀌지 않습니다.
    필요한 차수까지 미리 키운 뒤에는 여러 스레드가 읽기 전용으로 공유할 수 있습니다.
    """

    def __init__(self, source: MomentSource, dim: int, name: Optional[str] = None,
                 pearson: Optional[PearsonSpec] = None, _cache: Optional[List[CMatrix]] = None):
        if pearson is not None and pearson.dim != dim:
            raise DimensionMismatch(f"Pearson 데이터 차원 불일치: {pearson.dim} != {dim}")
        self.source = source
        self.dim = dim
        self.name = name or source.kind.value
        self.pearson = pearson
        self._cache: List[CMatrix] = [] if _cache is None else _cache

    @property
    def cached_count(self) -> int:
        return len(self._cache)

    def moment(self, n: int) -> CMatrix:
        """μ_n (중간 모멘트를 모두 캐시)"""
        if n < 0:
            raise IndexError(f"모멘트 인덱스는 음수가 될 수 없습니다: {n}")
        while len(self._cache) <= n:
            k = len(self._cache)
            mu = np.array(self.source.compute(k, self._cache), dtype=complex)
            if mu.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"μ_{k} 형태 {mu.shape} != ({self.dim}, {self.dim})")
            mu.setflags(write=False)
            self._cache.append(mu)
        return self._cache[n]

    def moments(self, count: int) -> List[CMatrix]:
        """μ_0..μ_{count−1}"""
        if count > 0:
            self.moment(count - 1)
        return list(self._cache[:count])

    def pregrow(self, n: int) -> "Functional":
        self.moment(n)
        return self

    def with_pearson(self, spec: Optional[PearsonSpec], name: Optional[str] = None) -> "Functional":
        """같은 모멘트(캐시 공유)에 Pearson 데이터를 붙인 범함수"""
        return Functional(self.source, self.dim, name or self.name, spec, _cache=self._cache)

    def describe(self) -> Dict[str, object]:
        info = {"name": self.name, "dim": self.dim, "cached": self.cached_count}
        info.update(self.source.describe())
        return info

    def __repr__(self) -> str:
        return f"Functional(name={self.name!r}, dim={self.dim}, cached={self.cached_count})"


def from_moments(moments: Sequence, name: Optional[str] = None,
                 pearson: Optional[PearsonSpec] = None) -> Functional:
    src = ExplicitMoments(moments)
    return Functional(src, src.moments[0].shape[0], name or "explicit", pearson)


def from_pearson(spec: PearsonSpec, tol: Optional[Tolerance] = None,
                 name: Optional[str] = None) -> Functional:
    return Functional(PearsonGenerated(spec, tol), spec.dim, name or "pearson", spec)


def from_oracle(oracle: Callable[[int], CMatrix], dim: int, name: str = "oracle",
                pearson: Optional[PearsonSpec] = None) -> Functional:
    return Functional(WeightOracle(oracle, name), dim, name, pearson)


def derived(rule: Callable[[int], CMatrix], dim: int, label: str,
            pearson: Optional[PearsonSpec] = None) -> Functional:
    return Functional(DerivedMoments(rule, label), dim, label, pearson)

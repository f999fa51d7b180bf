"""영류 표준형: Hermite, Laguerre, Jacobi, Bessel

α 의 근 구조로 유형을 정하고 α(x) = c·canon(t(x)) 가 되는 아핀 변환 t 를 찾습니다.
u 를 t 로 밀어낸 범함수 v (⟨P, v⟩ = ⟨P∘t, u⟩) 는
D(v α̂I) = vΨ̂, α̂(y) = a·α(t^{-1}(y)), Ψ̂(y) = Ψ(t^{-1}(y)) 를 만족합니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import ComplexTransformRequired, PreconditionViolated
from ..linalg import Tolerance, is_nonsingular, resolve_tol
from ..models import AffineMap, CanonicalTag
from .spec import Ladders, ZeroClassSpec

logger = logging.getLogger(__name__)

CANONICAL_ALPHA: Dict[CanonicalTag, Tuple[complex, complex, complex]] = {
    CanonicalTag.HERMITE: (1, 0, 0),
    CanonicalTag.LAGUERRE: (0, 1, 0),
    CanonicalTag.JACOBI: (1, 0, -1),
    CanonicalTag.BESSEL: (0, 0, 1),
}


@dataclass(frozen=True)
class CanonicalType:
    """표준형 분류 결과

    Attributes:
        tag: 유형
        transform: α(x) = factor·canon(t(x)) 인 t
        real_roots: α 의 근이 모두 실수인지 (t 가 실계수인지)
        roots: α 의 근
        factor: 상수 인자 c
    """
    tag: CanonicalTag
    transform: AffineMap
    real_roots: bool
    roots: Tuple[complex, ...] = ()
    factor: complex = 1.0


def _is_double_root(alpha: Tuple[complex, complex, complex], tol: Tolerance) -> bool:
    a0, a1, a2 = alpha
    scale = max(abs(a0), abs(a1), abs(a2))
    return abs(a1 * a1 - 4 * a0 * a2) <= tol.rel * scale * scale


def canonical_type(spec: ZeroClassSpec, tol: Optional[Tolerance] = None) -> CanonicalType:
    """α 의 근 구조로 표준형 분류"""
    tol = resolve_tol(tol)
    a0, a1, a2 = spec.alpha
    scale = max(abs(a0), abs(a1), abs(a2))
    small = tol.rel * scale

    if abs(a2) <= small and abs(a1) <= small:
        return CanonicalType(CanonicalTag.HERMITE, AffineMap(1, 0), True, (), a0)
    if abs(a2) <= small:
        r = -a0 / a1
        real = abs(r.imag) <= tol.rel * max(abs(r), 1.0)
        return CanonicalType(CanonicalTag.LAGUERRE, AffineMap(1, -r), real, (r,), a1)
    if _is_double_root(spec.alpha, tol):
        r = -a1 / (2 * a2)
        real = abs(r.imag) <= tol.rel * max(abs(r), 1.0)
        return CanonicalType(CanonicalTag.BESSEL, AffineMap(1, -r), real, (r, r), a2)
    roots = sorted(np.roots([a2, a1, a0]).astype(complex), key=lambda z: (z.real, z.imag))
    r1, r2 = roots
    real = all(abs(z.imag) <= tol.rel * max(abs(z), 1.0) for z in roots)
    # t(r1) = −1, t(r2) = 1, α = −α_2(r2 − r1)²/4·(1 − t²)
    d = r2 - r1
    t = AffineMap(2 / d, -(r1 + r2) / d)
    return CanonicalType(CanonicalTag.JACOBI, t, real, (r1, r2), -a2 * d * d / 4)


def canonical_reduction(spec: ZeroClassSpec, allow_complex: bool = False,
                        tol: Optional[Tolerance] = None) -> Tuple[ZeroClassSpec, CanonicalType]:
    """변수변환 t 를 적용해 α 를 1 / x / 1−x² / x² 로 바꾼 명세

    Raises:
        ComplexTransformRequired: t 가 복소 계수이고 allow_complex 가 아닐 때
    """
    tol = resolve_tol(tol)
    ctype = canonical_type(spec, tol)
    t = ctype.transform
    if not ctype.real_roots and not allow_complex:
        raise ComplexTransformRequired(
            f"α 의 근 {ctype.roots} 가 실수가 아니므로 복소 변수변환이 필요합니다 (에르미트성 파괴)"
        )
    a, b = complex(t.a), complex(t.b)
    # α̂ = a·c·canon, 양변을 a·c 로 나눔
    scale = a * complex(ctype.factor)
    psi1 = spec.psi1 / a / scale
    psi0 = (spec.psi0 - spec.psi1 * (b / a)) / scale
    reduced = ZeroClassSpec(CANONICAL_ALPHA[ctype.tag], psi0, psi1, spec.mu0, f"{spec.name}∘t")
    logger.info(f"{spec.name}: {ctype.tag.value} 표준형으로 변환 (t = {a}x + {b})")
    return reduced, ctype


def is_canonical(spec: ZeroClassSpec, tol: Optional[Tolerance] = None) -> Optional[CanonicalTag]:
    tol = resolve_tol(tol)
    for tag, alpha in CANONICAL_ALPHA.items():
        if all(abs(x - y) <= tol.rel for x, y in zip(spec.alpha, alpha)):
            return tag
    return None


@dataclass
class CanonicalConditions:
    """표준형별 정칙성 조건 표"""
    tag: CanonicalTag
    entries: List[Dict[str, object]] = field(default_factory=list)

    @property
    def all_nonsingular(self) -> bool:
        return all(e["nonsingular"] for e in self.entries)

    def first_failure(self) -> Optional[Dict[str, object]]:
        for e in self.entries:
            if not e["nonsingular"]:
                return e
        return None


def canonical_existence_conditions(spec: ZeroClassSpec, n_max: int,
                                   tol: Optional[Tolerance] = None) -> CanonicalConditions:
    """표준형 α 에 대한 구체 조건

    Hermite: ψ_1, Laguerre: ψ_1 과 ψ_0 + nI, Jacobi: ψ_1 − nI 와 ψ_1 ± ψ_0 − 2nI,
    Bessel: ψ_0 와 ψ_1 + nI.

    Raises:
        PreconditionViolated: α 가 표준형이 아닐 때
    """
    tol = resolve_tol(tol)
    tag = is_canonical(spec, tol)
    if tag is None:
        raise PreconditionViolated(f"α = {spec.alpha} 는 표준형이 아닙니다. canonical_reduction 을 먼저 적용하세요")
    eye = np.eye(spec.dim)
    p0, p1 = spec.psi0, spec.psi1
    out = CanonicalConditions(tag)

    def add(label: str, n: int, A) -> None:
        out.entries.append({"condition": label, "n": n, "nonsingular": is_nonsingular(A, tol)})

    if tag is CanonicalTag.HERMITE:
        add("ψ_1", 0, p1)
    elif tag is CanonicalTag.LAGUERRE:
        add("ψ_1", 0, p1)
        for n in range(n_max):
            add("ψ_0 + nI", n, p0 + n * eye)
    elif tag is CanonicalTag.JACOBI:
        for n in range(2 * n_max):
            add("ψ_1 − nI", n, p1 - n * eye)
        for n in range(n_max):
            add("ψ_1 + ψ_0 − 2nI", n, p1 + p0 - 2 * n * eye)
            add("ψ_1 − ψ_0 − 2nI", n, p1 - p0 - 2 * n * eye)
    else:
        add("ψ_0", 0, p0)
        for n in range(2 * n_max):
            add("ψ_1 + nI", n, p1 + n * eye)
    return out

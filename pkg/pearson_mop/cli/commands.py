"""CLI 하위 명령 구현

각 명령은 해석된 명세(ResolvedSpec)를 받아 분석을 실행하고 Report 를 돌려줍니다.
명세 해석 오류는 SpecParseError 로 올려 보내고, 예상된 차단(최대 구간 등)은
Violation 이 아닌 판정으로 기록합니다.
"""

import logging
from dataclasses import dataclass
from itertools import zip_longest
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from ..config import ResolvedSpec, SpecManager, get_settings
from ..errors import (
    ChainBroken, ClosedFormBlocked, DerivativeNotOrthogonal, NoGeneratorFound, OdeSolveBlocked,
    PreconditionViolated, RecurrenceBlocked, SpecParseError,
)
from ..functional import spec_residual
from ..gallery import build, list_entries, parse_param, structure_check
from ..linalg import CMatrix, MatrixPolynomial, Tolerance
from ..models import CyclicityKind, DiagonalizabilityKind, ExistenceKind, GuardKind
from ..mop import compute_segment, fit_ladder, recurrence_residuals
from ..pearson import cyclicity_check, derivative_chain, det_is_zero, module_basis, scalar_ideal
from ..reporting import (
    Report, create_certificate, create_error, create_note, create_table, create_verdict,
)
from ..scripts.run_tests import main as run_tests
from ..zeroclass import (
    ZeroClassSpec, bessel_positivity_guard, canonical_existence_conditions, canonical_type,
    compare_with_segment, diagonalizability_report, existence_check, is_canonical, kappa,
    ode_coefficients, ode_solve,
)

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    """명령 실행 문맥

    Attributes:
        argv: 보고서에 그대로 찍을 명령 인자
        manager: 명세 해석기
        tol: 수치 허용오차
    """
    argv: List[str]
    manager: SpecManager
    tol: Tolerance

    def report(self) -> Report:
        return Report(list(self.argv))

    @property
    def tolerance(self) -> Dict[str, float]:
        return self.tol.as_dict()

    @property
    def rtol(self) -> float:
        return get_settings().verify_rtol

    def resolve(self, spec: str, params: Optional[List[str]] = None) -> ResolvedSpec:
        return self.manager.resolve(spec, parse_params(params), self.tol)


def parse_params(items: Optional[List[str]]) -> Dict[str, Any]:
    """`--param k=v` 목록을 사전으로

    Raises:
        SpecParseError: `k=v` 형식이 아니거나 값을 해석할 수 없을 때
    """
    params: Dict[str, Any] = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise SpecParseError(f"--param 은 k=v 형식이어야 합니다: {item!r}")
        try:
            params[key.strip()] = parse_param(value.strip())
        except ValueError as e:
            raise SpecParseError(str(e)) from e
    return params


def cell(M: Optional[CMatrix]) -> Any:
    """표 셀 값 (1×1 은 스칼라)"""
    if M is None:
        return None
    M = np.asarray(M)
    if M.shape == (1, 1):
        return complex(M[0, 0])
    return M


def _drop_noise(A, floor: float) -> np.ndarray:
    """실수부, 허수부 각각 |·| ≤ floor 인 성분을 0 으로"""
    A = np.asarray(A, dtype=complex)
    re = np.where(np.abs(A.real) <= floor, 0.0, A.real)
    im = np.where(np.abs(A.imag) <= floor, 0.0, A.imag)
    return re + 1j * im


def poly_cell(P: MatrixPolynomial, tol: Optional[Tolerance] = None) -> Any:
    """계수 목록 셀 (tol 이 주어지면 ‖P‖ 대비 상쇄 잡음은 0 으로 표시)"""
    if tol is None:
        return [cell(c) for c in P.coeffs]
    floor = tol.zero_rel * max(P.norm(), 1.0)
    return [cell(_drop_noise(c, floor)) for c in P.coeffs]


def _pearson_of(resolved: ResolvedSpec):
    spec = resolved.pearson or resolved.functional.pearson
    if spec is None:
        raise SpecParseError(f"{resolved.label}: Pearson 데이터가 없는 명세입니다")
    return spec


def _zero_class_of(resolved: ResolvedSpec) -> ZeroClassSpec:
    if resolved.entry is not None and resolved.entry.zero_class is not None:
        return resolved.entry.zero_class
    try:
        return ZeroClassSpec.from_pearson(_pearson_of(resolved), name=resolved.label)
    except PreconditionViolated as e:
        raise SpecParseError(f"{resolved.label}: 영류 명세가 아닙니다 ({e})") from e


def _expected(resolved: ResolvedSpec) -> Dict[str, Any]:
    return resolved.entry.expected if resolved.entry is not None else {}


# 모멘트와 MOP

def cmd_moments(ctx: CommandContext, spec: str, n: int, params=None) -> Report:
    """μ_0..μ_n 표"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    rows = []
    try:
        for k in range(n + 1):
            rows.append([k, cell(resolved.functional.moment(k))])
    except RecurrenceBlocked as e:
        report.add(create_verdict("moments", "RecurrenceBlocked", index=e.k))
    report.add(create_table(f"{resolved.label} 모멘트", ["n", "μ_n"], rows, ctx.tolerance))
    report.add(create_certificate("source", **resolved.functional.describe()))
    return report


def cmd_mop(ctx: CommandContext, spec: str, n: int, params=None) -> Report:
    """모닉 MOP 구간, 점화식 계수와 잔차"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    seg = compute_segment(resolved.functional, n, ctx.tol)
    rec = recurrence_residuals(seg)
    rows = []
    for k in range(seg.length):
        rows.append([
            k, cell(seg.E[k]), cell(seg.pi[k]),
            cell(seg.beta[k]) if k < len(seg.beta) else None,
            cell(seg.gamma[k]) if 0 < k < len(seg.gamma) else None,
            rec[k] if k < len(rec) else None,
        ])
    report.add(create_table(f"{resolved.label} MOP", ["n", "E_n", "π_n", "β_n", "γ_n", "점화식 잔차"],
                            rows, ctx.tolerance))
    ortho = seg.orthogonality_residual()
    worst = max([ortho, *rec], default=0.0)
    if seg.horizon_flag:
        report.add(create_verdict("segment", f"MaximalSegment N = {seg.N}",
                                  requested=n, blocked_moment=seg.blocked_moment))
    else:
        report.add(create_verdict("segment", f"QuasiDefiniteTo N = {seg.N}"))
    report.add(create_verdict("orthogonality", "Orthogonal" if worst <= ctx.rtol else "ResidualTooLarge",
                              violation=worst > ctx.rtol, orthogonality=ortho,
                              recurrence=max(rec, default=0.0)))
    return report


def cmd_check_pearson(ctx: CommandContext, spec: str, horizon: int, params=None) -> Report:
    """D(uΦ) = uΨ 잔차 (대표 쌍과 다른 쌍들)"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    pairs = {"pearson": _pearson_of(resolved)}
    if resolved.entry is not None:
        pairs.update(resolved.entry.alternates)
    for label, pair in pairs.items():
        residual = spec_residual(resolved.functional, pair, horizon)
        rows = [[k, a, r] for k, (a, r) in enumerate(zip(residual.absolute, residual.relative))]
        report.add(create_table(f"{label} 잔차 (p={pair.p}, q={pair.q})", ["n", "절대", "상대"],
                                rows, ctx.tolerance))
        bad = residual.max_relative > ctx.rtol
        report.add(create_verdict(label, "ResidualTooLarge" if bad else "PearsonHolds", violation=bad,
                                  max_relative=residual.max_relative))
    return report


def cmd_derivatives(ctx: CommandContext, spec: str, depth: int, degree: Optional[int] = None,
                    params=None) -> Report:
    """도함수 사슬의 직교성, Pearson 데이터가 없으면 사다리 적합"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    pearson = resolved.pearson or resolved.functional.pearson
    if pearson is None:
        seg = compute_segment(resolved.functional, (degree or depth + 4), ctx.tol)
        fitted = fit_ladder(seg)
        report.add(create_table("사다리 적합 잔차", ["k", "잔차"], list(enumerate(fitted.residuals)),
                                ctx.tolerance))
        failure = fitted.first_failure(1e-3)
        verdict = "DerivativesNotOrthogonal" if failure is not None else "LadderFits"
        report.add(create_verdict("derivatives", verdict, first_failure=failure,
                                  max_residual=fitted.max_residual))
        expected = _expected(resolved).get("derivatives_orthogonal")
        if expected is not None and expected != (failure is None):
            report.add(create_verdict("expected", "ExpectationMismatch", violation=True))
        return report
    try:
        chain = derivative_chain(pearson, resolved.functional, depth, degree, ctx.tol)
    except (ChainBroken, DerivativeNotOrthogonal) as e:
        report.add(create_verdict("derivatives", type(e).__name__, message=str(e)))
        return report
    rows = [[link.level, link.orthogonality, link.spec.p, link.spec.q] for link in chain.links]
    report.add(create_table("도함수 사슬", ["level", "직교 잔차", "p", "q"], rows, ctx.tolerance))
    bad = chain.max_orthogonality > ctx.rtol
    report.add(create_verdict("derivatives", "ResidualTooLarge" if bad else "DerivativesOrthogonal",
                              violation=bad, depth=chain.depth, degree=chain.degree))
    return report


# Pearson 가군

def cmd_module_basis(ctx: CommandContext, spec: str, p: int, q: int, horizon: Optional[int] = None,
                     params=None) -> Report:
    """M_{p,q}(u) 의 기저와 rank"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    basis = module_basis(resolved.functional, p, q, horizon, ctx.tol)
    rows = [[i, poly_cell(Phi, ctx.tol), poly_cell(Psi, ctx.tol), det_is_zero(Phi, ctx.tol)]
            for i, (Phi, Psi) in enumerate(basis.generators)]
    report.add(create_table(f"M_{{{p},{q}}} 생성원", ["i", "Φ", "Ψ", "det Φ ≡ 0"], rows, ctx.tolerance))
    report.add(create_verdict("rank", f"rank M_{{{p},{q}}} = {basis.rank}", rank=basis.rank))
    report.add(create_certificate("module certificate", horizon=basis.horizon, nullity=basis.nullity,
                                  gap=basis.gap))
    expected = _expected(resolved).get("module_ranks", {}).get((p, q))
    if expected is not None and expected != basis.rank:
        report.add(create_verdict("expected", f"rank {expected} 기대", violation=True))
    return report


def cmd_class(ctx: CommandContext, spec: str, params=None) -> Report:
    """스칼라 아이디얼 생성원과 class, M_{2,1} 순환성"""
    resolved = ctx.resolve(spec, params)
    report = ctx.report()
    u = resolved.functional
    try:
        cls = scalar_ideal(u, known=resolved.pearson or u.pearson, tol=ctx.tol)
    except NoGeneratorFound as e:
        report.add(create_verdict("class", "NoGeneratorFound", d_max=e.d_max))
    else:
        alpha = _drop_noise(cls.alpha_coeffs, ctx.tol.zero_rel)
        report.add(create_verdict("class", f"class s = {cls.s}", s=cls.s, alpha=alpha,
                                  psi=poly_cell(cls.Psi, ctx.tol)))
        report.add(create_certificate("class certificate", certified_to=cls.certified_to,
                                      residual=cls.residual, gap=cls.gap))
        expected = _expected(resolved).get("class")
        if expected is not None and expected != cls.s:
            report.add(create_verdict("expected", f"class {expected} 기대", violation=True))
    verdict = cyclicity_check(u, tol=ctx.tol)
    report.add(create_verdict("M_{2,1}", verdict.kind.value,
                              violation=verdict.kind is CyclicityKind.NOT_CYCLIC, rank=verdict.rank))
    return report


# 영류

def _zc_check(ctx: CommandContext, resolved: ResolvedSpec, zc: ZeroClassSpec, n: int, report: Report) -> None:
    verdict = existence_check(zc, n, ctx.tol)
    report.add(create_verdict("existence", f"{verdict.kind.value} {verdict.max_segment}",
                              violation=verdict.hankel_agrees is False, blocked_at=verdict.blocked_at,
                              hankel_length=verdict.hankel_length, reason=verdict.reason))
    expected = _expected(resolved).get("max_segment")
    if expected is not None and verdict.kind is ExistenceKind.BLOCKED_AT and expected != verdict.max_segment:
        report.add(create_verdict("expected", f"최대 구간 {expected} 기대", violation=True))
    ctype = canonical_type(zc, ctx.tol)
    report.add(create_certificate("canonical", tag=ctype.tag, transform=[ctype.transform.a, ctype.transform.b],
                                  real_roots=ctype.real_roots))
    if is_canonical(zc, ctx.tol) is not None:
        conditions = canonical_existence_conditions(zc, n, ctx.tol)
        rows = [[e["condition"], e["n"], e["nonsingular"]] for e in conditions.entries]
        report.add(create_table("표준형 정칙 조건", ["조건", "n", "정칙"], rows, ctx.tolerance))


def _zc_closed_forms(ctx: CommandContext, resolved: ResolvedSpec, zc: ZeroClassSpec, n: int,
                     report: Report) -> None:
    seg = compute_segment(resolved.functional, n, ctx.tol)
    try:
        cmp = compare_with_segment(zc, seg, ctx.tol, ctx.rtol)
    except ClosedFormBlocked as e:
        report.add(create_verdict("closed forms", "ClosedFormBlocked", message=str(e)))
        return
    rows = [[k, *vals] for k, vals in enumerate(zip_longest(cmp.E, cmp.pi, cmp.Pi, cmp.ratio))]
    report.add(create_table("닫힌 형태 상대 오차", ["n", "E_n", "π_n", "Π_n", "E_n^{-1}E_{n+1}"], rows,
                            ctx.tolerance))
    bad = cmp.worst > ctx.rtol
    report.add(create_verdict("closed forms", "Disagree" if bad else "Agree", violation=bad, worst=cmp.worst,
                              segment=seg.N))


def _zc_ode(ctx: CommandContext, resolved: ResolvedSpec, zc: ZeroClassSpec, n: int, report: Report) -> None:
    seg = compute_segment(resolved.functional, n, ctx.tol)
    rows = []
    worst = 0.0
    for k in range(1, seg.length):
        ode = ode_coefficients(zc, seg, k, tol=ctx.tol)
        lead = kappa(zc, seg, k)
        expected = seg.polys[k].lmul(lead)
        try:
            solved = ode_solve(zc, k, lead, ctx.tol)
            unique = (solved - expected).norm() / max(expected.norm(), 1e-300)
        except OdeSolveBlocked:
            unique = None
        right = ode.right.residual if ode.right is not None else None
        rows.append([k, ode.left.residual, ode.normalized.residual, right, unique])
        worst = max([worst] + [v for v in rows[-1][1:] if v is not None])
    report.add(create_table("미분방정식 잔차", ["n", "L1", "L2", "R", "해 유일성"], rows, ctx.tolerance))
    bad = worst > ctx.rtol
    report.add(create_verdict("ode", "ResidualTooLarge" if bad else "OdeHolds", violation=bad, worst=worst))


def _zc_diag(ctx: CommandContext, resolved: ResolvedSpec, zc: ZeroClassSpec, n: int, report: Report) -> None:
    result = diagonalizability_report(resolved.functional, zc, n, ctx.tol)
    report.add(create_verdict("diagonalizability", result.kind.value, witness=result.witness,
                              witness_norm=result.witness_norm, horizon=result.horizon))
    report.add(create_certificate("conditions", items=result.conditions))
    if result.unitary is not None:
        report.add(create_certificate("unitary", T=result.unitary))
    expected = _expected(resolved).get("diagonalizable")
    if expected is not None and result.kind is not DiagonalizabilityKind.INCONCLUSIVE:
        found = result.kind is DiagonalizabilityKind.UNITARILY_DIAGONALIZABLE
        if found != expected:
            report.add(create_verdict("expected", f"diagonalizable={expected} 기대", violation=True))


def _zc_guard(ctx: CommandContext, resolved: ResolvedSpec, zc: ZeroClassSpec, n: int, report: Report) -> None:
    try:
        guard = bessel_positivity_guard(zc, resolved.functional, ctx.tol)
    except PreconditionViolated as e:
        report.add(create_note(f"가드 미적용: {e}"))
        return
    report.add(create_verdict("bessel guard", guard.kind.value, violation=guard.kind is GuardKind.VIOLATION,
                              **guard.details))


ZEROCLASS_ACTIONS = {
    "check": _zc_check,
    "closed-forms": _zc_closed_forms,
    "ode": _zc_ode,
    "diag": _zc_diag,
    "guard": _zc_guard,
}


def cmd_zeroclass(ctx: CommandContext, action: str, spec: str, n: int, params=None) -> Report:
    """영류 분석 (check, closed-forms, ode, diag, guard)"""
    resolved = ctx.resolve(spec, params)
    zc = _zero_class_of(resolved)
    report = ctx.report()
    report.add(create_certificate("zero class", name=zc.name, alpha=list(zc.alpha), dim=zc.dim))
    ZEROCLASS_ACTIONS[action](ctx, resolved, zc, n, report)
    return report


# 갤러리, 보고서, 테스트

def cmd_gallery(ctx: CommandContext, action: str, name: Optional[str] = None, params=None) -> Report:
    report = ctx.report()
    if action == "list":
        report.add(create_table("gallery", ["name", "description"], [list(e) for e in list_entries()]))
        return report
    if not name:
        raise SpecParseError("gallery show 에는 예제 이름이 필요합니다")
    try:
        entry = build(name, **parse_params(params))
    except (KeyError, ValueError) as e:
        raise SpecParseError(str(e)) from e
    report.add(create_certificate(entry.name, **entry.describe()))
    residual = entry.pearson_residual()
    if residual is not None:
        bad = residual.max_relative > ctx.rtol
        report.add(create_verdict("pearson", "ResidualTooLarge" if bad else "PearsonHolds", violation=bad,
                                  max_relative=residual.max_relative))
    if entry.weight is not None and entry.dim == 2:
        try:
            check = structure_check(entry)
        except PreconditionViolated as e:
            report.add(create_note(f"구조 검사 생략: {e}"))
            return report
        report.add(create_verdict("structure", "NonDiagonalizable" if check.non_diagonalizable else "Inconclusive",
                                  independent=check.independent, dependent=check.dependent))
    return report


def cmd_report(ctx: CommandContext, path: str) -> Report:
    """저장된 JSON 보고서를 다시 읽습니다"""
    try:
        return Report.from_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as e:
        raise SpecParseError(f"보고서를 읽을 수 없습니다: {e}") from e


def cmd_test(ctx: CommandContext) -> Report:
    """pytest 로 테스트 모음 실행"""
    report = ctx.report()
    returncode = run_tests()
    report.add(create_verdict("tests", "Passed" if returncode == 0 else "Failed",
                              violation=returncode != 0, returncode=returncode))
    return report


def error_report(argv: List[str], message: str) -> Report:
    return Report(list(argv), [create_error(message)])

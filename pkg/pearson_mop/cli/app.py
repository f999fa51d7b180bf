"""pearson_mop 명령행 인터페이스

argparse 로 하위 명령을 구성하고, 실행 결과 Report 를 텍스트와 JSON 으로 내보냅니다.
종료 코드: 0 정상, 1 Violation 판정, 2 명세/인자 해석 오류.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from ..config import create_spec_manager
from ..errors import PearsonMopError, SpecParseError
from ..linalg import Tolerance
from ..reporting import Report, create_verdict
from . import commands
from .commands import CommandContext, error_report

logger = logging.getLogger(__name__)


def _add_spec(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("spec", help="인라인 JSON, gallery:<name>, spec:<name>, 또는 .json 경로")
    parser.add_argument("--param", action="append", default=[], metavar="K=V",
                        help="갤러리 매개변수 (반복 가능)")


def build_parser() -> argparse.ArgumentParser:
    """CLI 인자 파서 생성"""
    parser = argparse.ArgumentParser(prog="pearson_mop", description="Pearson 형 행렬 범함수와 MOP 분석 도구")
    parser.add_argument("--json-out", metavar="PATH", help="JSON 보고서 저장 경로")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="로그 레벨")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="모멘트 μ_0..μ_K")
    _add_spec(p)
    p.add_argument("--n", type=int, default=8)

    p = sub.add_parser("mop", help="모닉 MOP 구간과 점화식")
    _add_spec(p)
    p.add_argument("--n", type=int, default=6)

    p = sub.add_parser("check-pearson", help="Pearson 방정식 잔차")
    _add_spec(p)
    p.add_argument("--horizon", type=int, default=12)

    p = sub.add_parser("derivatives", help="도함수 사슬 직교성")
    _add_spec(p)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("module-basis", help="M_{p,q}(u) 기저")
    _add_spec(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--horizon", type=int, default=None)

    p = sub.add_parser("class", help="스칼라 아이디얼과 class")
    _add_spec(p)

    p = sub.add_parser("zeroclass", help="영류 분석")
    p.add_argument("action", choices=sorted(commands.ZEROCLASS_ACTIONS))
    _add_spec(p)
    p.add_argument("--n", type=int, default=5)

    p = sub.add_parser("gallery", help="예제 목록과 상세")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", default=[], metavar="K=V")

    p = sub.add_parser("report", help="저장된 JSON 보고서 다시 출력")
    p.add_argument("--json", required=True, metavar="PATH", dest="path")

    sub.add_parser("test", help="테스트 실행")
    return parser


def dispatch(args: argparse.Namespace, ctx: CommandContext) -> Report:
    """하위 명령 실행"""
    if args.command == "moments":
        return commands.cmd_moments(ctx, args.spec, args.n, args.param)
    if args.command == "mop":
        return commands.cmd_mop(ctx, args.spec, args.n, args.param)
    if args.command == "check-pearson":
        return commands.cmd_check_pearson(ctx, args.spec, args.horizon, args.param)
    if args.command == "derivatives":
        return commands.cmd_derivatives(ctx, args.spec, args.depth, args.degree, args.param)
    if args.command == "module-basis":
        return commands.cmd_module_basis(ctx, args.spec, args.p, args.q, args.horizon, args.param)
    if args.command == "class":
        return commands.cmd_class(ctx, args.spec, args.param)
    if args.command == "zeroclass":
        return commands.cmd_zeroclass(ctx, args.action, args.spec, args.n, args.param)
    if args.command == "gallery":
        return commands.cmd_gallery(ctx, args.action, args.name, args.param)
    if args.command == "report":
        return commands.cmd_report(ctx, args.path)
    if args.command == "test":
        return commands.cmd_test(ctx)
    raise SpecParseError(f"알 수 없는 명령어: {args.command}")


def _parse(argv: List[str]) -> Tuple[Optional[argparse.Namespace], Optional[Report]]:
    try:
        return build_parser().parse_args(argv), None
    except SystemExit as e:
        if e.code == 0:
            return None, Report(list(argv))
        return None, error_report(argv, "명령행 인자를 해석할 수 없습니다")


def execute(args: argparse.Namespace, argv: List[str]) -> Report:
    """해석된 인자로 명령을 실행하고 오류를 보고서 항목으로 변환"""
    ctx = CommandContext(list(argv), create_spec_manager(), Tolerance.from_settings())
    try:
        return dispatch(args, ctx)
    except SpecParseError as e:
        logger.error(f"명세 해석 오류: {e}")
        return error_report(argv, str(e))
    except PearsonMopError as e:
        logger.error(f"분석 실패 ({type(e).__name__}): {e}")
        return ctx.report().add(create_verdict(args.command, type(e).__name__, violation=True, message=str(e)))


def run(argv: List[str]) -> Tuple[Report, int]:
    """argv 를 실행해 (보고서, 종료 코드) 반환"""
    args, early = _parse(argv)
    report = early if early is not None else execute(args, argv)
    return report, report.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """메인 함수"""
    argv = list(sys.argv[1:] if argv is None else argv)
    args, early = _parse(argv)
    if early is not None:
        return early.exit_code
    if args.log_level:
        logging.getLogger().setLevel(args.log_level)
    report = execute(args, argv)
    print(report.render_text())
    if args.json_out:
        path = Path(args.json_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.to_json(), encoding="utf-8")
        logger.info(f"JSON 보고서 저장: {path}")
    report.emit_log()
    return report.exit_code

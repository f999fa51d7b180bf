"""명령행 인터페이스 모듈

범함수 명세를 읽어 분석 명령을 실행하고 보고서를 출력합니다.
"""

from .app import build_parser, dispatch, execute, main, run
from .commands import CommandContext, parse_params

__all__ = [
    # 실행
    'main',
    'run',
    'execute',
    'dispatch',
    'build_parser',
    # 명령 문맥
    'CommandContext',
    'parse_params'
]

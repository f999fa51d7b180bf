#!/usr/bin/env python3
"""pearson_mop 메인 실행 스크립트

행렬 범함수 분석 CLI 를 실행합니다. `python main.py <명령> ...` 은
`python -m pearson_mop <명령> ...` 과 같습니다.
"""

import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

# .env 파일 로드 (MOP_ 접두사 설정값)
load_dotenv()

from pearson_mop.cli import main  # noqa: E402
from pearson_mop.config import get_settings  # noqa: E402

settings = get_settings()

# 로깅 설정
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

# 보고서 JSON 사본 기록을 위한 별도 로거 설정
report_logger = logging.getLogger('pearson_mop.reports')
report_logger.setLevel(logging.INFO)
# 보고서 JSON 은 파일에만 남기고 콘솔로 전파하지 않음
report_logger.propagate = False

log_path = Path(settings.report_log_path)
log_path.parent.mkdir(parents=True, exist_ok=True)
file_handler = logging.FileHandler(log_path, encoding='utf-8')
file_handler.setLevel(logging.INFO)
file_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))

if not report_logger.handlers:  # 핸들러 중복 추가 방지
    report_logger.addHandler(file_handler)

logger = logging.getLogger(__name__)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("실행 중단 (Ctrl+C)")
        sys.exit(130)

#!/usr/bin/env python3
"""pearson_mop 패키지 메인 엔트리포인트

python -m pearson_mop 명령으로 실행 가능한 CLI 인터페이스를 제공합니다.
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

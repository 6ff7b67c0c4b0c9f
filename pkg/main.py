#!/usr/bin/env python3
"""
五度阿贝尔 Cayley 图完美码工具主程序
"""

import os
import sys

from loguru import logger

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from cli.commands import run
from config.settings import settings
from utils.logger import setup_logging


def main():
    """主函数"""
    setup_logging(settings.LOG_LEVEL, settings.LOG_FILE or None)
    try:
        code = run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("被用户中断")
        code = 130
    sys.exit(code)


if __name__ == "__main__":
    main()
